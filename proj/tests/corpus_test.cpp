#include <gtest/gtest.h>

#include <random>

#include "lexigrid/alphabet.hpp"
#include "lexigrid/distribution.hpp"
#include "lexigrid/frequency.hpp"
#include "lexigrid/reference_data.hpp"
#include "lexigrid/text.hpp"

using namespace lexigrid;

TEST(Alphabet, BuiltinProfilesAreValid) {
    for (const Alphabet* a : {&grid23(), &clue27(), &poetry31()}) EXPECT_NO_THROW(validate_alphabet(*a)) << a->name;
    EXPECT_EQ(grid23().size(), 23u);
    EXPECT_EQ(clue27().size(), 27u);
    EXPECT_EQ(poetry31().size(), 31u);
    EXPECT_TRUE(grid23().contains(U'K'));
    EXPECT_FALSE(grid23().contains(U'Q'));
    EXPECT_THROW(alphabet_by_name("latin26"), Error);
}

TEST(Alphabet, ValidationRejectsBrokenProfiles) {
    EXPECT_THROW(validate_alphabet(Alphabet{"dup", {U'A', U'A'}, {}, {}}), Error);
    EXPECT_THROW(validate_alphabet(Alphabet{"vowel", {U'B'}, {}, {U'A'}}), Error);
    EXPECT_THROW(validate_alphabet(Alphabet{"fold", {U'A'}, {{U'B', U'C'}}, {}}), Error);
}

TEST(NormalizeStream, FoldsDiacriticsForGrid) {
    const auto s = normalize_stream("Șarpe", grid23());
    EXPECT_EQ(s.str(), "SARPE");
    EXPECT_EQ(s.discarded, 0u);
    EXPECT_EQ(normalize_stream("ăâîșțĂÂÎȘȚ", grid23()).str(), "AAISTAAIST");
}

TEST(NormalizeStream, KeepsDiacriticsForClue) {
    EXPECT_EQ(normalize_stream("Înger", clue27()).str(), "ÎNGER");
}

TEST(NormalizeStream, CedillaAndCommaFormsAgree) {
    // U+015F / U+0163 (cedilla) vs U+0219 / U+021B (comma below)
    EXPECT_EQ(normalize_stream("\xC5\x9F\xC5\xA3", poetry31()).str(), normalize_stream("\xC8\x99\xC8\x9B", poetry31()).str());
    EXPECT_EQ(normalize_stream("\xC5\x9E", poetry31()).str(), "Ș");
}

TEST(NormalizeStream, DropsAndCountsForeignCharacters) {
    const auto s = normalize_stream("a1b!", grid23());
    EXPECT_EQ(s.str(), "AB");
    EXPECT_EQ(s.discarded, 2u);
    EXPECT_EQ(normalize_stream("a b\n", grid23()).discarded, 0u);
    EXPECT_EQ(normalize_stream("quiz", grid23()).str(), "UIZ");
}

TEST(NormalizeStream, Idempotent) {
    std::mt19937 rng(7);
    const std::u32string pool = U"aăâbcdeéfghiîjklmnopqrsșşțţtuvwxyzAĂÂȘŞȚŢ -,.!1\n";
    for (const Alphabet* a : {&grid23(), &clue27(), &poetry31()}) {
        for (int iter = 0; iter < 200; ++iter) {
            std::u32string text;
            for (int k = 0; k < 40; ++k) text.push_back(pool[rng() % pool.size()]);
            const std::string once = normalize_stream(utf8::encode(text), *a).str();
            const auto twice = normalize_stream(once, *a);
            ASSERT_EQ(twice.str(), once);
            ASSERT_EQ(twice.discarded, 0u);
        }
    }
}

TEST(WordTokens, Examples) {
    EXPECT_EQ(word_tokens("ana are mere", grid23()), (std::vector<std::string>{"ANA", "ARE", "MERE"}));
    EXPECT_EQ(word_tokens("s-a dus", grid23()), (std::vector<std::string>{"S", "A", "DUS"}));
    EXPECT_TRUE(word_tokens("", grid23()).empty());
    EXPECT_EQ(word_tokens("țară, 12 câmpii", poetry31()), (std::vector<std::string>{"ȚARĂ", "CÂMPII"}));
}

TEST(LetterFrequencies, CountsWithAbsentSymbols) {
    const auto t = letter_frequencies(normalize_stream("ANA", grid23()).symbols, grid23());
    EXPECT_EQ(t.count(U'A'), 2u);
    EXPECT_EQ(t.count(U'N'), 1u);
    EXPECT_EQ(t.count(U'K'), 0u);
    EXPECT_EQ(t.total(), 3u);
    EXPECT_EQ(t.counts().size(), 23u);
}

TEST(LetterFrequencies, EmptyInputOnProbability) {
    const FrequencyTable t(grid23());
    try {
        t.probability(U'A');
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::empty_input);
    }
    EXPECT_THROW(vowel_ratio(t), Error);
}

TEST(LetterFrequencies, ProbabilitiesSumToOne) {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::uint64_t> counts(poetry31().size());
        for (auto& c : counts) c = rng() % 1000;
        counts[0] += 1;
        const FrequencyTable t(poetry31(), counts);
        double sum = 0;
        for (double p : t.probabilities()) sum += p;
        ASSERT_NEAR(sum, 1.0, 1e-12);
        ASSERT_EQ(vowel_ratio(t) + consonant_ratio(t), Rational(100));
    }
}

TEST(LetterFrequencies, PublishedGridTableProbabilities) {
    const auto t = letter_table(get_table("GRID_LETTER_FREQ"));
    EXPECT_NEAR(t.probability(U'A'), 0.15741, 1e-9);
    EXPECT_NEAR(t.probability(U'I'), 0.12849, 1e-9);
    EXPECT_EQ(t.count(U'K'), 0u);
}

TEST(VowelRatio, Examples) {
    const auto ana = letter_frequencies(normalize_stream("ANA", grid23()).symbols, grid23());
    EXPECT_EQ(vowel_ratio(ana), Rational(200, 3));
    EXPECT_EQ(format_fixed(vowel_ratio(ana), 3), "66.667");
    EXPECT_EQ(vowel_ratio(letter_table(get_table("GRID_LETTER_FREQ"))), Rational(47462, 1000));
    EXPECT_NEAR(to_double(vowel_ratio(letter_table(get_table("POETRY_LETTER_FREQ")))), 46.865, 0.01);
}

TEST(FrequencyTable, RestrictAndMerge) {
    auto a = letter_frequencies(normalize_stream("ABBA", grid23()).symbols, grid23());
    const auto b = letter_frequencies(normalize_stream("CAB", grid23()).symbols, grid23());
    a.merge(b);
    EXPECT_EQ(a.count(U'A'), 3u);
    EXPECT_EQ(a.count(U'C'), 1u);
    const std::vector<Symbol> keep{U'C', U'A'};
    const auto r = a.restricted_to(keep);
    EXPECT_EQ(r.alphabet().symbols, keep);
    EXPECT_EQ(r.total(), 4u);
    EXPECT_THROW(a.merge(FrequencyTable(poetry31())), Error);
}

TEST(SyllableCount, VowelRunHeuristic) {
    EXPECT_EQ(syllable_count("CASA", poetry31()).count, 2);
    EXPECT_EQ(syllable_count("NOAPTE", poetry31()).count, 2);
    const auto nt = syllable_count("NT", poetry31());
    EXPECT_EQ(nt.count, 1);
    EXPECT_TRUE(nt.no_vowels);
    EXPECT_EQ(syllable_count("ȚARĂ", poetry31()).count, 2);
}

TEST(SyllableCount, LexiconOverrides) {
    const auto lex = SyllableLexicon::parse("noaptea\t3\n# comment\nplo-aia\t3\n", poetry31());
    EXPECT_EQ(lex.size(), 2u);
    const auto hit = syllable_count("NOAPTEA", poetry31(), &lex);
    EXPECT_EQ(hit.count, 3);
    EXPECT_TRUE(hit.from_lexicon);
    EXPECT_EQ(syllable_count("PLOAIA", poetry31(), &lex).count, 3);
    EXPECT_EQ(syllable_count("CASA", poetry31(), &lex).count, 2);
    EXPECT_THROW(SyllableLexicon::parse("casa 2\n", poetry31()), Error);
    EXPECT_THROW(SyllableLexicon::parse("casa\tx\n", poetry31()), Error);
}

TEST(SyllableCount, NeverExceedsVowelCount) {
    std::mt19937 rng(5);
    const std::u32string pool = U"AĂÂBCDEFGHIÎJKLMNOPRSȘTȚUVXZ";
    for (int iter = 0; iter < 2000; ++iter) {
        std::u32string w;
        const int len = 1 + static_cast<int>(rng() % 12);
        for (int k = 0; k < len; ++k) w.push_back(pool[rng() % pool.size()]);
        const std::string word = utf8::encode(w);
        const auto sc = syllable_count(word, poetry31());
        if (sc.no_vowels) {
            ASSERT_EQ(vowel_count(word, poetry31()), 0u);
        } else {
            ASSERT_LE(static_cast<std::size_t>(sc.count), vowel_count(word, poetry31()));
            ASSERT_GE(sc.count, 1);
        }
    }
}

TEST(LengthDistribution, LettersExample) {
    const std::vector<std::string> tokens{"AB", "AB", "ABC"};
    const auto d = length_distribution(tokens, LengthMeasure::letters, grid23());
    EXPECT_DOUBLE_EQ(d.proportion(2), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(d.proportion(3), 1.0 / 3.0);
    EXPECT_NEAR(distribution_mean(d), 7.0 / 3.0, 1e-12);
    EXPECT_THROW(length_distribution({}, LengthMeasure::letters, grid23()), Error);
}

TEST(LengthDistribution, MultiByteLettersCountOnce) {
    const std::vector<std::string> tokens{"ȚARĂ"};
    const auto d = length_distribution(tokens, LengthMeasure::letters, poetry31());
    EXPECT_DOUBLE_EQ(d.proportion(4), 1.0);
}

TEST(DistributionMean, Examples) {
    Distribution<long> d;
    d.add(1, 1);
    d.add(3, 1);
    EXPECT_DOUBLE_EQ(distribution_mean(d), 2.0);
    EXPECT_NEAR(distribution_mean(numeric_distribution(get_table("GRID_SYLLABLE_DIST"))), 2.246, 0.001);
    EXPECT_NEAR(distribution_mean(numeric_distribution(get_table("POETRY_SYLLABLE_DIST"))), 1.933, 0.001);
    EXPECT_NEAR(distribution_mean(numeric_distribution(get_table("POETRY_LETTERLEN_DIST"))), 4.64, 0.01);
    EXPECT_THROW(distribution_mean(Distribution<long>{}), Error);
}

TEST(KeywordTopK, Examples) {
    const std::vector<std::string> t1{"A", "B", "B", "C"};
    EXPECT_EQ(keyword_top_k(t1, 1), (std::vector<std::pair<std::string, std::uint64_t>>{{"B", 2}}));
    const std::vector<std::string> t2{"A", "B", "B"};
    EXPECT_EQ(keyword_top_k(t2, 1, {"B"}), (std::vector<std::pair<std::string, std::uint64_t>>{{"A", 1}}));
    const auto all = keyword_top_k(t1, 10);
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[1].first, "A"); // tie with C, A seen first
    EXPECT_THROW(keyword_top_k(t1, 0), Error);
}

TEST(AnnotatedTokens, ParseAndDistribution) {
    const auto tokens = parse_annotated("# comment\ncasa\tpos=noun,case=nom\nmare\tpos=noun\nfuge\tpos=verb\nsus\tpos=noun\n");
    ASSERT_EQ(tokens.size(), 4u);
    EXPECT_EQ(tokens[0].attributes.at("case"), "nom");
    const auto pos = attribute_distribution(tokens, "pos");
    EXPECT_DOUBLE_EQ(pos.proportion("noun"), 0.75);
    EXPECT_DOUBLE_EQ(pos.proportion("verb"), 0.25);
    EXPECT_DOUBLE_EQ(attribute_distribution(tokens, "case").proportion("nom"), 1.0);
    EXPECT_DOUBLE_EQ(full_word_share(tokens), 100.0);
    try {
        attribute_distribution(tokens, "article");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::missing_key);
    }
    EXPECT_THROW(parse_annotated("casa\tpos\n"), Error);
    EXPECT_THROW(parse_annotated("\tpos=noun\n"), Error);
}

TEST(MeasureText, LineAndWordTotals) {
    const auto shape = measure_text("Ana are\n\nmere mari.\n", poetry31());
    EXPECT_EQ(shape.lines, 2u);
    EXPECT_EQ(shape.words, 4u);
    EXPECT_EQ(shape.letters, 3u + 3u + 4u + 4u);
    EXPECT_EQ(shape.syllables, 2u + 2u + 2u + 2u);
}

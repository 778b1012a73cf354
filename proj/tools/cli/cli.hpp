#pragma once

// Batch command-line front end. run() parses argv, writes one report to
// `out` and diagnostics to `err`, and returns the exit code:
//   0 success, 1 a check failed (budget exceeded, regression failed),
//   2 usage, I/O or parse error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cli/report.hpp"
#include "cli/selfcheck.hpp"
#include "lexigrid/lexigrid.hpp"

namespace lexigrid::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_error = 2;

/// `key=value` lines; '#' comments. Recognized keys: alphabet, max_black_percent.
struct Config {
    std::optional<std::string> alphabet;
    std::optional<std::string> max_black_percent;

    static Config parse(std::string_view text) {
        Config c;
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw Error(Errc::parse, "config line " + std::to_string(line_no) + ": expected key=value");
            auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t");
                const auto e = s.find_last_not_of(" \t");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "alphabet") {
                c.alphabet = value;
            } else if (key == "max_black_percent") {
                c.max_black_percent = value;
            } else {
                throw Error(Errc::parse, "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
        }
        return c;
    }
};

namespace detail {

inline TableRegistry load_registry() {
    if (const char* dir = std::getenv("LEXIGRID_TABLES"); dir && *dir) return TableRegistry::with_overrides(dir);
    return TableRegistry();
}

inline std::string symbol_text(Symbol s) { return utf8::encode(s); }

inline nlohmann::json frequency_json(const FrequencyTable& table) {
    auto arr = nlohmann::json::array();
    const std::uint64_t total = table.total();
    std::size_t rank = 1;
    for (const auto& [s, c] : table.sorted_entries()) {
        arr.push_back({{"rank", rank++},
                       {"symbol", symbol_text(s)},
                       {"count", c},
                       {"percent", total ? 100.0 * static_cast<double>(c) / static_cast<double>(total) : 0.0}});
    }
    return arr;
}

template <class Value>
nlohmann::json distribution_json(const Distribution<Value>& d) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [v, w] : d.weights()) {
        std::string key;
        if constexpr (std::is_same_v<Value, std::string>) {
            key = v;
        } else {
            key = std::to_string(v);
        }
        j[key] = {{"count", w}, {"proportion", d.proportion(v)}};
    }
    return j;
}

inline double safe_ratio(std::uint64_t a, std::uint64_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
}

struct CorpusOptions {
    const Alphabet* alphabet = nullptr;
    bool annotated = false;
    const SyllableLexicon* lexicon = nullptr;
    std::size_t top_k = 10;
    std::set<std::string> stoplist;
};

/// Aggregated statistics over a set of texts treated as one corpus.
inline nlohmann::json corpus_stats(const std::vector<std::string>& texts, const CorpusOptions& opt,
                                   std::vector<std::string>& warnings) {
    const Alphabet& alphabet = *opt.alphabet;
    FrequencyTable letters(alphabet);
    std::size_t discarded = 0;
    std::vector<std::string> tokens;
    std::vector<AnnotatedToken> annotated;
    TextShape shape;

    for (const auto& text : texts) {
        if (opt.annotated) {
            auto parsed = parse_annotated(text);
            TextShape s;
            s.units = 1;
            for (auto& tok : parsed) {
                const auto stream = normalize_stream(tok.surface, alphabet);
                letters.merge(letter_frequencies(stream.symbols, alphabet));
                discarded += stream.discarded;
                for (auto& w : word_tokens(tok.surface, alphabet)) {
                    ++s.words;
                    s.letters += letter_count(w);
                    s.syllables += static_cast<std::uint64_t>(syllable_count(w, alphabet, opt.lexicon).count);
                    tokens.push_back(std::move(w));
                }
                annotated.push_back(std::move(tok));
            }
            shape += s;
        } else {
            const auto stream = normalize_stream(text, alphabet);
            letters.merge(letter_frequencies(stream.symbols, alphabet));
            discarded += stream.discarded;
            auto t = word_tokens(text, alphabet);
            tokens.insert(tokens.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
            shape += measure_text(text, alphabet, opt.lexicon);
        }
    }

    nlohmann::json r;
    r["alphabet"] = alphabet.name;
    r["letters"] = {{"total", letters.total()}, {"discarded", discarded}};
    if (letters.total() == 0) {
        warnings.push_back("no letters of profile " + alphabet.name + " found");
    } else {
        r["letters"]["table"] = frequency_json(letters);
        r["letters"]["vowel_percent"] = to_double(vowel_ratio(letters));
        r["letters"]["consonant_percent"] = to_double(consonant_ratio(letters));
        r["letters"]["entropy_bits"] = entropy_bits(letters);
        r["letters"]["informational_energy"] = informational_energy(letters);
        // observed vs the 42.7% vowel share of ordinary Romanian
        r["letters"]["vowel_percent_language"] = 42.7;
    }

    r["words"] = {{"total", tokens.size()}};
    if (!tokens.empty()) {
        const auto by_letters = length_distribution(tokens, LengthMeasure::letters, alphabet, opt.lexicon);
        const auto by_syllables = length_distribution(tokens, LengthMeasure::syllables, alphabet, opt.lexicon);
        r["words"]["length_letters"] = distribution_json(by_letters);
        r["words"]["length_letters_mean"] = distribution_mean(by_letters);
        r["words"]["length_syllables"] = distribution_json(by_syllables);
        r["words"]["length_syllables_mean"] = distribution_mean(by_syllables);
        std::size_t no_vowel = 0;
        for (const auto& t : tokens) no_vowel += syllable_count(t, alphabet, opt.lexicon).no_vowels ? 1 : 0;
        if (no_vowel > 0)
            warnings.push_back(std::to_string(no_vowel) + " token(s) without vowels counted as one syllable");
        auto kw = nlohmann::json::array();
        for (const auto& [word, count] : keyword_top_k(tokens, opt.top_k, opt.stoplist))
            kw.push_back({{"word", word}, {"count", count}});
        r["words"]["keywords"] = std::move(kw);
        r["words"]["distinct"] = TokenTally(tokens).distinct();
    }

    nlohmann::json ratios;
    ratios["letters_per_syllable"] = safe_ratio(shape.letters, shape.syllables);
    ratios["syllables_per_word"] = safe_ratio(shape.syllables, shape.words);
    ratios["letters_per_word"] = safe_ratio(shape.letters, shape.words);
    if (!opt.annotated) {
        ratios["words_per_line"] = safe_ratio(shape.words, shape.lines);
        ratios["syllables_per_line"] = safe_ratio(shape.syllables, shape.lines);
        ratios["letters_per_line"] = safe_ratio(shape.letters, shape.lines);
        ratios["lines_per_text"] = safe_ratio(shape.lines, shape.units);
    }
    ratios["words_per_text"] = safe_ratio(shape.words, shape.units);
    ratios["syllables_per_text"] = safe_ratio(shape.syllables, shape.units);
    ratios["letters_per_text"] = safe_ratio(shape.letters, shape.units);
    r["shape"] = {{"texts", shape.units}, {"lines", shape.lines}, {"words", shape.words},
                  {"syllables", shape.syllables}, {"letters", shape.letters}, {"ratios", std::move(ratios)}};

    if (opt.annotated) {
        std::set<std::string> keys;
        for (const auto& t : annotated)
            for (const auto& [k, v] : t.attributes) keys.insert(k);
        nlohmann::json attrs = nlohmann::json::object();
        for (const auto& k : keys) attrs[k] = distribution_json(attribute_distribution(annotated, k));
        r["attributes"] = std::move(attrs);
        if (keys.contains("pos")) {
            const double full = full_word_share(annotated);
            r["full_words_percent"] = full;
            r["empty_words_percent"] = 100.0 - full;
        }
    }
    return r;
}

inline std::string percent_text(const Rational& r) { return format_fixed(r, 3) + "%"; }

} // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crossword grid and corpus statistics"};
    app.name("lexigrid");
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value file with defaults (alphabet, max_black_percent)");

    bool json = false;

    // analyze-grid
    auto* analyze = app.add_subcommand("analyze-grid", "census, word enumeration, predictions and budget check");
    std::string grid_file;
    std::string max_black_percent;
    analyze->add_option("file", grid_file, "grid file")->required();
    analyze->add_option("--max-black-percent", max_black_percent, "black-cell budget in percent (default 15)");
    analyze->add_flag("--json", json, "machine-readable output");

    // corpus-stats
    auto* corpus = app.add_subcommand("corpus-stats", "letter, word and length statistics of text files");
    std::vector<std::string> corpus_files;
    std::string alphabet_name;
    bool annotated = false;
    bool per_file = false;
    std::string lexicon_file;
    std::size_t top_k = 10;
    std::string stoplist_file;
    corpus->add_option("files", corpus_files, "text files")->required();
    corpus->add_option("--alphabet", alphabet_name, "grid23 | clue27 | poetry31");
    corpus->add_flag("--annotated", annotated, "inputs use the annotated token format");
    corpus->add_option("--syllable-lexicon", lexicon_file, "WORD<TAB>count overrides");
    corpus->add_flag("--per-file", per_file, "report each file separately");
    corpus->add_option("--top-k", top_k, "number of keywords to list")->check(CLI::PositiveNumber);
    corpus->add_option("--stoplist", stoplist_file, "words excluded from keywords, one per line");
    corpus->add_flag("--json", json, "machine-readable output");

    // ecart
    auto* ecart = app.add_subcommand("ecart", "rank deviation of a text against a reference ranking");
    std::string ecart_file;
    std::string reference;
    bool words = false;
    bool restrict_symbols = false;
    ecart->add_option("file", ecart_file, "text file")->required();
    ecart->add_option("--reference", reference, "table name or grouped rank file")->required();
    ecart->add_flag("--words", words, "rank words instead of letters");
    ecart->add_option("--alphabet", alphabet_name, "grid23 | clue27 | poetry31");
    ecart->add_flag("--restrict", restrict_symbols, "ignore text symbols the reference does not rank");
    ecart->add_flag("--json", json, "machine-readable output");

    // infometrics
    auto* info = app.add_subcommand("infometrics", "entropy and informational energy of letter frequencies");
    std::string info_file;
    std::string info_table;
    info->add_option("file", info_file, "text file");
    info->add_option("--alphabet", alphabet_name, "grid23 | clue27 | poetry31");
    info->add_option("--table", info_table, "use a named letter table instead of a file");
    info->add_flag("--json", json, "machine-readable output");

    // tables
    auto* tables = app.add_subcommand("tables", "embedded reference tables");
    tables->require_subcommand(1);
    auto* tables_list = tables->add_subcommand("list", "list table names");
    tables_list->add_flag("--json", json, "machine-readable output");
    auto* tables_show = tables->add_subcommand("show", "print one table");
    std::string table_name;
    bool csv = false;
    tables_show->add_option("name", table_name, "table name")->required();
    auto* show_json = tables_show->add_flag("--json", json, "JSON schema output");
    tables_show->add_flag("--csv", csv, "CSV output")->excludes(show_json);

    // selfcheck
    auto* selfcheck = app.add_subcommand("selfcheck", "regressions of published values");
    selfcheck->add_flag("--json", json, "machine-readable output");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        if (!args.empty()) args.pop_back(); // program name
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "lexigrid: " << e.what() << '\n';
        return exit_error;
    }

    try {
        Config config;
        if (!config_path.empty()) config = Config::parse(read_file(config_path));
        auto pick_alphabet = [&](const char* fallback) -> const Alphabet& {
            if (!alphabet_name.empty()) return alphabet_by_name(alphabet_name);
            if (config.alphabet) return alphabet_by_name(*config.alphabet);
            return alphabet_by_name(fallback);
        };

        Report report;
        int code = exit_ok;

        if (*analyze) {
            report.command = "analyze-grid";
            report.inputs = {grid_file};
            const Grid grid = parse_grid(read_file(grid_file));
            const std::string percent_text =
                !max_black_percent.empty() ? max_black_percent : config.max_black_percent.value_or("15");
            const Rational percent = parse_decimal(percent_text);

            const auto census = black_census(grid);
            const auto words = extract_words(grid);
            const bool spaced = validate_spacing(grid);
            auto& r = report.results;
            r["grid"] = {{"rows", grid.rows()}, {"cols", grid.cols()}, {"black", census.total}};
            r["census"] = {{"p", census.total}, {"A", census.zone_a}, {"BO", census.zone_bo},
                           {"BV", census.zone_bv}, {"C", census.zone_c}, {"B", census.zone_b()}};
            r["spacing_valid"] = spaced;

            const auto across = static_cast<std::int64_t>(words.across.size());
            const auto down = static_cast<std::int64_t>(words.down.size());
            auto slot_json = [](const WordSlot& w) {
                nlohmann::json j{{"line", w.line}, {"start", w.start}, {"length", w.length}};
                if (w.letters) j["letters"] = *w.letters;
                return j;
            };
            nlohmann::json across_list = nlohmann::json::array();
            nlohmann::json down_list = nlohmann::json::array();
            for (const auto& w : words.across) across_list.push_back(slot_json(w));
            for (const auto& w : words.down) down_list.push_back(slot_json(w));
            r["enumeration"] = {{"total", across + down}, {"across", across}, {"down", down},
                                {"difference", across - down}, {"across_words", std::move(across_list)},
                                {"down_words", std::move(down_list)}};

            if (grid.rows() < 3 || grid.cols() < 3) {
                report.warnings.push_back("formulas skipped: grid smaller than 3x3; counts come from enumeration");
            } else if (!spaced) {
                report.warnings.push_back("formulas skipped: adjacent black cells; counts come from enumeration");
            } else {
                const auto p = predict_counts(grid);
                const bool matches = p.total == across + down && p.across == across && p.down == down;
                r["prediction"] = {{"total", p.total}, {"across", p.across}, {"down", p.down},
                                   {"difference", p.difference}, {"matches_enumeration", matches}};
                if (!matches) report.warnings.push_back("formula prediction disagrees with enumeration");
            }

            if (census.total < grid.cell_count()) {
                const auto b = word_bounds(grid.rows(), grid.cols(), census.total);
                const auto count = static_cast<std::size_t>(across + down);
                r["bounds"] = {{"min", b.min}, {"max", b.max}, {"within", count >= b.min && count <= b.max}};
            }
            if (words.total() > 0) {
                const auto lr = length_report(grid, words);
                r["length"] = {{"letter_slots", lr.letter_slots},
                               {"word_count", lr.word_count},
                               {"mean_length", rational_json(lr.mean_length)},
                               {"lower_bound", rational_json(lr.lower_bound)},
                               {"respects_bound", lr.mean_length >= lr.lower_bound}};
            } else {
                report.warnings.push_back("grid has no white cells; no word-length report");
            }

            const auto budget = black_budget(grid.rows(), grid.cols(), percent);
            const bool exceeded = static_cast<std::int64_t>(census.total) > budget;
            const Rational fraction(static_cast<std::int64_t>(census.total), static_cast<std::int64_t>(grid.cell_count()));
            r["budget"] = {{"percent", to_fraction_string(percent)},
                           {"budget", budget},
                           {"black", census.total},
                           {"black_percent", detail::percent_text(fraction * 100)},
                           {"exceeded", exceeded}};
            if (fraction < 1) {
                const auto f = budget_feasibility(grid.rows(), grid.cols(), fraction);
                r["budget"]["predicted_mean_length"] = rational_json(f.bound);
                r["budget"]["short_words"] = f.short_words;
            }
            if (exceeded) {
                report.warnings.push_back("budget " + std::to_string(budget) + " exceeded (" +
                                          std::to_string(census.total) + " black cells at " +
                                          to_fraction_string(percent) + "%)");
                code = exit_check_failed;
            }

            // Empirical tendencies, reported as observed vs claimed.
            nlohmann::json notes;
            if (across + down > 0)
                notes["across_share_percent"] = {
                    {"observed", 100.0 * static_cast<double>(across) / static_cast<double>(across + down)},
                    {"claimed", 50.0}};
            FrequencyTable grid_letters(grid23());
            bool all_lettered = census.total < grid.cell_count();
            for (std::size_t row = 1; row <= grid.rows(); ++row)
                for (std::size_t col = 1; col <= grid.cols(); ++col) {
                    const Cell& c = grid.at(row, col);
                    if (c.black) continue;
                    if (c.letter == '\0' || !grid23().contains(static_cast<Symbol>(c.letter))) {
                        all_lettered = false;
                    } else {
                        grid_letters.add(static_cast<Symbol>(c.letter));
                    }
                }
            if (all_lettered)
                notes["vowel_percent"] = {{"observed", to_double(vowel_ratio(grid_letters))}, {"claimed", 47.5}};
            r["tendencies"] = std::move(notes);
        } else if (*corpus) {
            report.command = "corpus-stats";
            report.inputs = corpus_files;
            detail::CorpusOptions opt;
            opt.alphabet = &pick_alphabet("poetry31");
            opt.annotated = annotated;
            opt.top_k = top_k;
            SyllableLexicon lexicon;
            if (!lexicon_file.empty()) {
                lexicon = SyllableLexicon::parse(read_file(lexicon_file), *opt.alphabet);
                opt.lexicon = &lexicon;
            }
            if (!stoplist_file.empty()) {
                for (auto& w : word_tokens(read_file(stoplist_file), *opt.alphabet)) opt.stoplist.insert(std::move(w));
            }
            std::vector<std::string> texts;
            for (const auto& f : corpus_files) texts.push_back(read_file(f));
            if (per_file) {
                nlohmann::json files = nlohmann::json::array();
                for (std::size_t i = 0; i < texts.size(); ++i) {
                    std::vector<std::string> w;
                    auto stats = detail::corpus_stats({texts[i]}, opt, w);
                    for (auto& msg : w) report.warnings.push_back(corpus_files[i] + ": " + msg);
                    files.push_back({{"file", corpus_files[i]}, {"stats", std::move(stats)}});
                }
                report.results["files"] = std::move(files);
            } else {
                report.results = detail::corpus_stats(texts, opt, report.warnings);
            }
        } else if (*ecart) {
            report.command = "ecart";
            report.inputs = {ecart_file};
            const auto registry = detail::load_registry();
            const Alphabet& alphabet = pick_alphabet("grid23");
            const std::string text = read_file(ecart_file);
            auto& r = report.results;
            r["reference"] = reference;
            r["alphabet"] = alphabet.name;

            auto per_symbol_json = [](const auto& rep, auto name_of) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& [k, d] : rep.per_symbol) arr.push_back({{"symbol", name_of(k)}, {"ecart", d}});
                return arr;
            };
            auto summary = [&](const auto& rep, auto name_of) {
                r["n"] = rep.n;
                r["sum_abs"] = rep.sum_abs;
                r["mean_abs"] = rational_json(rep.mean_abs);
                r["upper_bound"] = rational_json(rep.upper_bound);
                r["per_symbol"] = per_symbol_json(rep, name_of);
                nlohmann::json inj_obs = nlohmann::json::array();
                nlohmann::json inj_ref = nlohmann::json::array();
                for (const auto& k : rep.injected_into_observed) inj_obs.push_back(name_of(k));
                for (const auto& k : rep.injected_into_reference) inj_ref.push_back(name_of(k));
                r["absent_from_text"] = std::move(inj_obs);
                r["absent_from_reference"] = std::move(inj_ref);
                if (!rep.injected_into_reference.empty())
                    report.warnings.push_back(std::to_string(rep.injected_into_reference.size()) +
                                              " text symbol(s) not ranked by the reference were appended to it");
            };

            if (words) {
                std::vector<std::string> ref_words;
                if (registry.contains(reference)) {
                    ref_words = payload_as<RankList>(registry.get(reference)).symbols;
                } else {
                    ref_words = expand_groups(parse_grouped_ranks(read_file(reference)));
                }
                WordRanks ref;
                for (const auto& w : ref_words) {
                    std::string norm = normalize_stream(w, alphabet).str();
                    if (!norm.empty() && !ref.contains(norm)) ref.append(std::move(norm));
                }
                auto tokens = word_tokens(text, alphabet);
                TokenTally tally;
                for (const auto& t : tokens)
                    if (!restrict_symbols || ref.contains(t)) tally.add(t);
                if (tally.distinct() == 0) throw Error(Errc::empty_input, "no words to rank in '" + ecart_file + "'");
                const auto observed = build_rank_table(tally, &ref);
                summary(text_ecart(ref, observed), [](const std::string& s) { return s; });
            } else {
                LetterRanks ref;
                if (registry.contains(reference)) {
                    ref = reference_ranks(registry.get(reference));
                } else {
                    ref = letter_ranks(expand_groups(parse_grouped_ranks(read_file(reference))));
                }
                FrequencyTable table = letter_frequencies(normalize_stream(text, alphabet).symbols, alphabet);
                if (table.total() == 0) throw Error(Errc::empty_input, "no letters in '" + ecart_file + "'");
                if (restrict_symbols) table = table.restricted_to(ref.symbols());
                const auto observed = build_rank_table(table, &ref);
                summary(text_ecart(ref, observed), detail::symbol_text);
            }
        } else if (*info) {
            report.command = "infometrics";
            FrequencyTable table(grid23());
            if (!info_table.empty()) {
                report.inputs = {info_table};
                table = letter_table(detail::load_registry().get(info_table));
            } else if (!info_file.empty()) {
                report.inputs = {info_file};
                const Alphabet& alphabet = pick_alphabet("poetry31");
                table = letter_frequencies(normalize_stream(read_file(info_file), alphabet).symbols, alphabet);
            } else {
                throw Error(Errc::parse, "infometrics needs a file or --table");
            }
            if (table.total() == 0) throw Error(Errc::empty_input, "no letters to measure");
            std::size_t nonzero = 0;
            for (auto c : table.counts()) nonzero += c > 0 ? 1 : 0;
            report.results = {{"alphabet", table.alphabet().name},
                              {"symbols", table.alphabet().size()},
                              {"nonzero_symbols", nonzero},
                              {"entropy_bits", entropy_bits(table)},
                              {"entropy_max_bits", std::log2(static_cast<double>(nonzero))},
                              {"informational_energy", informational_energy(table)},
                              {"energy_min", 1.0 / static_cast<double>(nonzero)}};
        } else if (*tables) {
            const auto registry = detail::load_registry();
            if (*tables_list) {
                report.command = "tables list";
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& name : registry.names()) {
                    const auto& t = registry.get(name);
                    arr.push_back({{"name", t.name}, {"kind", t.kind()}, {"provenance", t.provenance}});
                }
                report.results["tables"] = std::move(arr);
            } else {
                const auto& t = registry.get(table_name);
                if (json) {
                    out << lexigrid::to_json(t).dump(2) << '\n';
                    return exit_ok;
                }
                if (csv) {
                    std::visit(
                        [&](const auto& p) {
                            using P = std::decay_t<decltype(p)>;
                            auto pct = [](std::uint64_t milli) { return format_fixed(Rational(static_cast<std::int64_t>(milli), 1000), 3); };
                            if constexpr (std::is_same_v<P, RankList>) {
                                out << "rank,symbol\n";
                                for (std::size_t i = 0; i < p.symbols.size(); ++i) out << i + 1 << ',' << p.symbols[i] << '\n';
                            } else if constexpr (std::is_same_v<P, LetterFreq>) {
                                out << "order,symbol,percent,uncertain\n";
                                for (std::size_t i = 0; i < p.entries.size(); ++i)
                                    out << i + 1 << ',' << p.entries[i].value << ',' << pct(p.entries[i].milli) << ','
                                        << (p.entries[i].uncertain ? "true" : "false") << '\n';
                            } else if constexpr (std::is_same_v<P, DistributionTable>) {
                                out << "value,percent,uncertain\n";
                                for (const auto& e : p.entries)
                                    out << e.value << ',' << pct(e.milli) << ',' << (e.uncertain ? "true" : "false") << '\n';
                            } else if constexpr (std::is_same_v<P, RecordGrids>) {
                                out << "side,min_black,percentage,count_known\n";
                                for (const auto& row : p.rows)
                                    out << row.side << ',' << row.min_black << ','
                                        << format_fixed(row.percentage(), 3) << ',' << row.count_known << '\n';
                            } else if constexpr (std::is_same_v<P, RatioSet>) {
                                out << "key,label,value\n";
                                for (const auto& e : p.entries) {
                                    std::ostringstream v;
                                    v << e.value;
                                    out << e.key << ",\"" << e.label << "\"," << v.str() << '\n';
                                }
                            } else {
                                out << "group,symbol\n";
                                for (std::size_t g = 0; g < p.groups.size(); ++g)
                                    for (const auto& s : p.groups[g]) out << g + 1 << ',' << s << '\n';
                            }
                        },
                        t.payload);
                    return exit_ok;
                }
                report.command = "tables show";
                report.inputs = {table_name};
                const auto j = lexigrid::to_json(t);
                report.results = {{"name", j["name"]}, {"kind", j["kind"]}, {"provenance", j["provenance"]},
                                  {"payload", j["payload"]}};
            }
        } else if (*selfcheck) {
            report.command = "selfcheck";
            const auto regressions = run_regressions(detail::load_registry());
            nlohmann::json arr = nlohmann::json::array();
            std::size_t failed = 0;
            for (const auto& reg : regressions) {
                arr.push_back({{"id", reg.id},
                               {"description", reg.description},
                               {"expected", reg.expected},
                               {"actual", reg.actual},
                               {"tolerance", reg.tolerance},
                               {"gated", reg.gated},
                               {"pass", reg.pass()}});
                if (reg.gated && !reg.pass()) ++failed;
            }
            if (!json) {
                for (const auto& reg : regressions) {
                    std::ostringstream line;
                    line.setf(std::ios::fixed);
                    line.precision(4);
                    line << (reg.pass() ? "PASS " : (reg.gated ? "FAIL " : "INFO ")) << reg.id << "  expected "
                         << reg.expected << "  actual " << reg.actual << "  tol " << reg.tolerance
                         << (reg.gated ? "" : "  (not gated)") << "  " << reg.description;
                    out << line.str() << '\n';
                }
                out << (failed == 0 ? "selfcheck: all gated regressions passed" : "selfcheck: FAILED") << '\n';
                return failed == 0 ? exit_ok : exit_check_failed;
            }
            report.results["regressions"] = std::move(arr);
            report.results["failed"] = failed;
            if (failed > 0) code = exit_check_failed;
        }

        emit(report, json, out);
        for (const auto& w : report.warnings) err << "warning: " << w << '\n';
        return code;
    } catch (const Error& e) {
        err << "lexigrid: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        err << "lexigrid: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace lexigrid::cli

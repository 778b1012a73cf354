#pragma once

// Published numeric tables compiled into the library, each with a provenance
// string. Percentages are held as integer thousandths of a percent so that
// totals and renormalization stay exact.
//
// JSON schema of one table: {"name", "kind", "provenance", "payload"}. A
// directory of such files can override or extend the built-ins.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "alphabet.hpp"
#include "distribution.hpp"
#include "error.hpp"
#include "frequency.hpp"
#include "grid_laws.hpp"
#include "rank.hpp"

namespace lexigrid {

/// A value with its published percentage, in thousandths of a percent.
struct WeightedEntry {
    std::string value;
    std::uint64_t milli = 0;
    bool uncertain = false;
    std::string note;
};

struct RatioEntry {
    std::string key;
    std::string label;
    double value = 0.0;
};

struct RankList {
    std::vector<std::string> symbols;
    bool uncertain = false;
    std::string note;
};

struct LetterFreq {
    std::string alphabet;
    std::vector<WeightedEntry> entries; // in published order
};

struct DistributionTable {
    std::string measure;
    std::vector<WeightedEntry> entries;
    std::optional<double> stated_mean;
};

struct RecordGrids {
    std::vector<RecordGridEntry> rows;
};

struct RatioSet {
    std::vector<RatioEntry> entries;
};

struct GroupedRanks {
    std::vector<std::vector<std::string>> groups;
};

using TablePayload = std::variant<RankList, LetterFreq, DistributionTable, RecordGrids, RatioSet, GroupedRanks>;

inline constexpr std::string_view kind_names[] = {"rank_list", "letter_freq", "distribution",
                                                  "record_grids", "ratio_set", "grouped_ranks"};

struct NamedTable {
    std::string name;
    std::string provenance;
    TablePayload payload;

    std::string_view kind() const { return kind_names[payload.index()]; }
};

// Published percentage columns must total 100% within 0.1 percentage points.
inline void validate_table(const NamedTable& t) {
    if (t.name.empty()) throw Error(Errc::parse, "table without a name");
    if (t.provenance.empty()) throw Error(Errc::parse, "table '" + t.name + "' has no provenance");
    auto check_total = [&](const std::vector<WeightedEntry>& entries) {
        std::uint64_t total = 0;
        for (const auto& e : entries) total += e.milli;
        const auto diff = static_cast<std::int64_t>(total) - 100000;
        if (diff > 100 || diff < -100)
            throw Error(Errc::parse, "table '" + t.name + "' percentages total " + std::to_string(total / 1000.0) + "%");
    };
    if (const auto* lf = std::get_if<LetterFreq>(&t.payload)) {
        const Alphabet& a = alphabet_by_name(lf->alphabet);
        for (const auto& e : lf->entries)
            if (!a.contains(parse_symbol(e.value)))
                throw Error(Errc::parse, "table '" + t.name + "': letter '" + e.value + "' not in " + a.name);
        check_total(lf->entries);
    } else if (const auto* d = std::get_if<DistributionTable>(&t.payload)) {
        check_total(d->entries);
    }
}

namespace detail {

inline WeightedEntry pct(std::string value, std::uint64_t milli) { return {std::move(value), milli, false, {}}; }

inline WeightedEntry uncertain_pct(std::string value, std::uint64_t milli, std::string note) {
    return {std::move(value), milli, true, std::move(note)};
}

inline std::vector<NamedTable> builtin_tables() {
    std::vector<NamedTable> t;

    t.push_back({"ROMANIAN_RANKS_23",
                 "letter frequency order in Romanian, diacritics folded (23 letters)",
                 RankList{{"E", "I", "A", "R", "N", "T", "U", "C", "L", "S", "O", "D",
                           "P", "M", "B", "V", "G", "F", "Z", "H", "J", "X", "K"}}});

    t.push_back({"ROMANIAN_RANKS_27",
                 "letter frequency order in Romanian (27 letters, diacritics distinct)",
                 RankList{{"E", "I", "A", "R", "N", "T", "U", "C", "L", "S", "O", "Ă", "D", "P",
                           "M", "Î", "Ș", "B", "V", "G", "F", "Ț", "Z", "H", "J", "X", "K"},
                          true,
                          "printed list lost its diacritics (two S, two T, two A, two I); "
                          "ranks 7, 12, 16, 17 and 22 restored as U, Ă, Î, Ș, Ț"}});

    t.push_back({"GRID_LETTER_FREQ",
                 "letter occurrence mean percentage over 150 grids",
                 LetterFreq{"grid23",
                            {pct("A", 15741), pct("I", 12849), pct("T", 9731), pct("R", 9411), pct("E", 8981),
                             pct("O", 5537), pct("N", 5053), pct("U", 4354), pct("S", 4352), pct("C", 4249),
                             pct("L", 4248), pct("M", 4010), pct("P", 3689), pct("D", 1723), pct("B", 1344),
                             pct("G", 1290), pct("F", 860), pct("V", 806), pct("Z", 752), pct("H", 537),
                             pct("X", 430), pct("J", 53), pct("K", 0)}}});

    t.push_back({"GRID_SYLLABLE_DIST",
                 "words in a grid by syllable count (50 grids)",
                 DistributionTable{"syllables",
                                   {pct("1", 35588), pct("2", 26920), pct("3", 21765), pct("4", 9551),
                                    pct("5", 5294), pct("6", 882), pct("7", 0), pct("8", 0)},
                                   2.246}});

    t.push_back({"GRID_POS_SHARES",
                 "predominant parts of speech in a grid (50 grids), percent of words",
                 RatioSet{{{"nouns", "nouns (%)", 45.441}, {"verbs", "verbs (%)", 6.029},
                           {"adjectives", "adjectives (%)", 2.352}}}});

    t.push_back({"CLUE_LETTER_FREQ",
                 "letter occurrence mean percentage in clues (100 clue grids)",
                 LetterFreq{"clue27",
                            {pct("E", 10996), pct("I", 9778), pct("A", 9266), pct("R", 7818), pct("U", 6267),
                             pct("N", 6067), pct("T", 5611), pct("C", 5374), pct("L", 4920), pct("O", 4579),
                             pct("P", 4027), pct("Ă", 3992), pct("S", 3831), pct("Î", 3309), pct("D", 3079),
                             pct("Â", 1801), pct("V", 1527), pct("F", 1449), pct("Ș", 1360), pct("Ț", 1338),
                             pct("G", 1330), pct("B", 1238), pct("H", 532), pct("J", 358), pct("Z", 92),
                             pct("X", 37), pct("K", 24)}}});

    {
        RecordGrids rg;
        const auto rows = record_table();
        rg.rows.assign(rows.begin(), rows.end());
        t.push_back({"RECORD_GRIDS", "grid records, minimum black boxes by size (to June 1982)",
                     std::move(rg)});
    }

    t.push_back({"JURIDICAL_GROUPS",
                 "typewriter key deterioration classes, most worn first (12 groups)",
                 GroupedRanks{{{"E", "A"},
                               {"I"},
                               {"R"},
                               {"T"},
                               {"S"},
                               {"P"},
                               {"O", "C", "U", "D", "Z"},
                               {"N"},
                               {"L"},
                               {"V", "M"},
                               {"F", "G", "B", "H", "X", "J", "K"},
                               {"W", "Q", "Y"}}}});

    t.push_back({"POETRY_LETTER_FREQ",
                 "average letter frequency in a 44-poem volume",
                 LetterFreq{"poetry31",
                            {pct("E", 11994),
                             pct("I", 10166),
                             pct("A", 8406),
                             pct("R", 7680),
                             pct("N", 6407),
                             pct("U", 6347),
                             pct("T", 5792),
                             pct("L", 5237),
                             pct("C", 5143),
                             pct("S", 4220),
                             pct("O", 3699),
                             pct("P", 3451),
                             pct("Ă", 3417),
                             pct("M", 3178),
                             pct("D", 2981),
                             pct("Î", 2828),
                             pct("V", 1435),
                             uncertain_pct("G", 1418,
                                           "printed 1.48%, which breaks the rank order and the 100% total; "
                                           "1.418% restores both"),
                             pct("B", 1358),
                             pct("Ș", 1281),
                             pct("F", 1179),
                             pct("Z", 846),
                             pct("Ț", 803),
                             pct("H", 496),
                             pct("J", 196),
                             pct("X", 34),
                             uncertain_pct("Â", 8, "printed as a second Ă row; Â is the only letter otherwise absent"),
                             pct("K", 0),
                             pct("Q", 0),
                             pct("Y", 0),
                             pct("W", 0)}}});

    t.push_back({"POETRY_SYLLABLE_DIST",
                 "words by length in syllables",
                 DistributionTable{"syllables",
                                   {pct("1", 41509), pct("2", 32069), pct("3", 19363), pct("4", 5688), pct("5", 1371),
                                    pct("6", 0)},
                                   1.933}});

    t.push_back({"POETRY_LETTERLEN_DIST",
                 "words by length in letters",
                 DistributionTable{"letters",
                                   {uncertain_pct("1", 3604, "printed as '3 · 6 0 4 %'"), pct("2", 25426),
                                    pct("3", 8475), pct("4", 11089), pct("5", 13347), pct("6", 13149),
                                    pct("7", 13703), pct("8", 5861), pct("9", 3129), pct("10", 1149),
                                    pct("11", 752), pct("12", 237), pct("13", 79), pct("14", 0)},
                                   4.643}});

    t.push_back({"POETRY_RATIOS",
                 "sentences, lines, words, syllables, letters - average relationships",
                 RatioSet{{{"a", "letters/syllable", 2.402},
                           {"b", "syllables/word", 1.933},
                           {"c", "letters/word", 4.643},
                           {"d", "words/line", 3.528},
                           {"e", "syllables/line", 6.820},
                           {"f", "letters/line", 16.380},
                           {"g", "lines/sentence", 2.760},
                           {"h", "words/sentence", 9.737},
                           {"i", "syllables/sentence", 18.823},
                           {"j", "letters/sentence", 45.208},
                           {"k", "sentences/poem", 5.887},
                           {"l", "lines/poem", 16.250},
                           {"m", "words/poem", 57.330},
                           {"n", "syllables/poem", 110.825},
                           {"o", "letters/poem", 266.175}}}});

    t.push_back({"POETRY_POS_SHARES",
                 "word classes (percent of words), full words per line/sentence/poem, "
                 "nouns with/without article",
                 RatioSet{{{"nouns", "nouns (%)", 35.592},
                           {"verbs", "verbs, predicative moods (%)", 13.079},
                           {"adjectives", "adjectives (%)", 6.183},
                           {"adverbs", "adverbs (%)", 4.829},
                           {"full", "full words (%)", 59.729},
                           {"empty", "empty words (%)", 40.271},
                           {"nouns_per_line", "nouns/line", 1.255},
                           {"verbs_per_line", "verbs (p.m.)/line", 0.461},
                           {"adjectives_per_line", "adjectives/line", 0.218},
                           {"adverbs_per_line", "adverbs/line", 0.172},
                           {"nouns_per_sentence", "nouns/sentence", 3.464},
                           {"verbs_per_sentence", "verbs (p.m.)/sentence", 1.273},
                           {"adjectives_per_sentence", "adjectives/sentence", 0.602},
                           {"adverbs_per_sentence", "adverbs/sentence", 0.475},
                           {"nouns_per_poem", "nouns/poem", 20.393},
                           {"verbs_per_poem", "verbs (p.m.)/poem", 7.492},
                           {"adjectives_per_poem", "adjectives/poem", 3.543},
                           {"adverbs_per_poem", "adverbs/poem", 2.792},
                           {"nouns_with_article", "nouns with an article (%)", 47.884},
                           {"nouns_without_article", "nouns without an article (%)", 52.116}}}});

    t.push_back({"POETRY_CASE_DIST",
                 "nouns by grammatical case",
                 DistributionTable{"case",
                                   {pct("nominative", 29497), pct("genitive", 19888), pct("dative", 335),
                                    pct("accusative", 50056), pct("vocative", 224)},
                                   std::nullopt}});

    t.push_back({"LANGUAGE_CONSTANTS",
                 "reference constants quoted alongside the tables",
                 RatioSet{{{"romanian_vowels_percent", "vowels in Romanian (%)", 42.7},
                           {"grid_vowels_percent", "vowels in grids (%)", 47.462},
                           {"grid_vowels_claimed_percent", "vowel share grids tend to (%)", 47.5},
                           {"grid_horizontal_words_percent", "horizontal words in 100 grids (%)", 49.932},
                           {"grid_short_words_percent", "grid words of 1-3 letters (%)", 49.035},
                           {"grid_black_percent_observed", "black boxes in current grids (%)", 13.591},
                           {"grid_black_percent_rule", "black box ceiling (%)", 15.0},
                           {"clue_vowels_percent_text", "clue vowels, as stated in the text (%)", 46.467},
                           {"clue_vowels_percent_table", "clue vowels, as printed in the table (%)", 46.679},
                           {"clue_mean_word_length", "mean clue word length (letters)", 4.374},
                           {"clue_letters_per_grid", "letters needed to clue a grid", 657.342}}}});

    for (const auto& table : t) validate_table(table);
    return t;
}

} // namespace detail

// ---- JSON ----------------------------------------------------------------

namespace detail {

inline nlohmann::json weighted_to_json(const std::vector<WeightedEntry>& entries, bool numeric_values) {
    auto arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j;
        if (numeric_values) {
            j["value"] = std::stol(e.value);
        } else {
            j["value"] = e.value;
        }
        j["percent"] = static_cast<double>(e.milli) / 1000.0;
        if (e.uncertain) {
            j["uncertain"] = true;
            j["note"] = e.note;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::vector<WeightedEntry> weighted_from_json(const nlohmann::json& arr, const char* key) {
    std::vector<WeightedEntry> out;
    for (const auto& j : arr) {
        WeightedEntry e;
        const auto& v = j.at(key);
        e.value = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
        const double pctv = j.at("percent").get<double>();
        if (pctv < 0) throw Error(Errc::parse, "negative percentage");
        e.milli = static_cast<std::uint64_t>(std::llround(pctv * 1000.0));
        e.uncertain = j.value("uncertain", false);
        e.note = j.value("note", std::string());
        out.push_back(std::move(e));
    }
    return out;
}

inline bool all_numeric(const std::vector<WeightedEntry>& entries) {
    return std::all_of(entries.begin(), entries.end(), [](const WeightedEntry& e) {
        return !e.value.empty() && std::all_of(e.value.begin(), e.value.end(), [](char c) { return c >= '0' && c <= '9'; });
    });
}

} // namespace detail

inline nlohmann::json to_json(const NamedTable& t) {
    nlohmann::json payload;
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RankList>) {
                payload["symbols"] = p.symbols;
                if (p.uncertain) {
                    payload["uncertain"] = true;
                    payload["note"] = p.note;
                }
            } else if constexpr (std::is_same_v<P, LetterFreq>) {
                payload["alphabet"] = p.alphabet;
                auto arr = nlohmann::json::array();
                for (const auto& e : p.entries) {
                    nlohmann::json j{{"symbol", e.value}, {"percent", static_cast<double>(e.milli) / 1000.0}};
                    if (e.uncertain) {
                        j["uncertain"] = true;
                        j["note"] = e.note;
                    }
                    arr.push_back(std::move(j));
                }
                payload["entries"] = std::move(arr);
            } else if constexpr (std::is_same_v<P, DistributionTable>) {
                payload["measure"] = p.measure;
                payload["entries"] = detail::weighted_to_json(p.entries, detail::all_numeric(p.entries));
                if (p.stated_mean) payload["stated_mean"] = *p.stated_mean;
            } else if constexpr (std::is_same_v<P, RecordGrids>) {
                auto arr = nlohmann::json::array();
                for (const auto& r : p.rows)
                    arr.push_back({{"side", r.side},
                                   {"min_black", r.min_black},
                                   {"percentage", static_cast<double>(r.percentage_milli) / 1000.0},
                                   {"count_known", r.count_known}});
                payload["rows"] = std::move(arr);
            } else if constexpr (std::is_same_v<P, RatioSet>) {
                auto arr = nlohmann::json::array();
                for (const auto& r : p.entries) arr.push_back({{"key", r.key}, {"label", r.label}, {"value", r.value}});
                payload["entries"] = std::move(arr);
            } else {
                payload["groups"] = p.groups;
            }
        },
        t.payload);
    return {{"name", t.name}, {"kind", t.kind()}, {"provenance", t.provenance}, {"payload", std::move(payload)}};
}

inline NamedTable named_table_from_json(const nlohmann::json& j) {
    try {
        NamedTable t;
        t.name = j.at("name").get<std::string>();
        t.provenance = j.at("provenance").get<std::string>();
        const auto kind = j.at("kind").get<std::string>();
        const auto& p = j.at("payload");
        if (kind == "rank_list") {
            t.payload = RankList{p.at("symbols").get<std::vector<std::string>>(), p.value("uncertain", false),
                                 p.value("note", std::string())};
        } else if (kind == "letter_freq") {
            t.payload = LetterFreq{p.at("alphabet").get<std::string>(), detail::weighted_from_json(p.at("entries"), "symbol")};
        } else if (kind == "distribution") {
            DistributionTable d{p.at("measure").get<std::string>(), detail::weighted_from_json(p.at("entries"), "value"),
                                std::nullopt};
            if (p.contains("stated_mean")) d.stated_mean = p.at("stated_mean").get<double>();
            t.payload = std::move(d);
        } else if (kind == "record_grids") {
            RecordGrids rg;
            for (const auto& r : p.at("rows"))
                rg.rows.push_back({r.at("side").get<int>(), r.at("min_black").get<int>(),
                                   static_cast<int>(std::llround(r.at("percentage").get<double>() * 1000.0)),
                                   r.at("count_known").get<int>()});
            t.payload = std::move(rg);
        } else if (kind == "ratio_set") {
            RatioSet rs;
            for (const auto& r : p.at("entries"))
                rs.entries.push_back({r.at("key").get<std::string>(), r.value("label", std::string()), r.at("value").get<double>()});
            t.payload = std::move(rs);
        } else if (kind == "grouped_ranks") {
            t.payload = GroupedRanks{p.at("groups").get<std::vector<std::vector<std::string>>>()};
        } else {
            throw Error(Errc::parse, "unknown table kind '" + kind + "'");
        }
        validate_table(t);
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse, std::string("malformed table JSON: ") + e.what());
    }
}

// ---- registry ------------------------------------------------------------

class TableRegistry {
public:
    TableRegistry() {
        for (auto& t : detail::builtin_tables()) tables_.emplace(t.name, std::move(t));
    }

    /// Built-ins plus every `*.json` table in `dir`; a file whose table name
    /// matches a built-in replaces it.
    static TableRegistry with_overrides(const std::filesystem::path& dir) {
        TableRegistry reg;
        std::error_code ec;
        if (!std::filesystem::is_directory(dir, ec))
            throw Error(Errc::io, "table override directory not found: " + dir.string());
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f, std::ios::binary);
            if (!in) throw Error(Errc::io, "cannot read " + f.string());
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::parse, f.string() + ": " + e.what());
            }
            NamedTable t = named_table_from_json(j);
            reg.tables_.insert_or_assign(t.name, std::move(t));
        }
        return reg;
    }

    const NamedTable& get(std::string_view name) const {
        auto it = tables_.find(std::string(name));
        if (it == tables_.end()) throw Error(Errc::unknown_table, "no table named '" + std::string(name) + "'");
        return it->second;
    }

    bool contains(std::string_view name) const { return tables_.contains(std::string(name)); }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [name, t] : tables_) out.push_back(name);
        return out;
    }

private:
    std::map<std::string, NamedTable> tables_;
};

inline const TableRegistry& builtin_registry() {
    static const TableRegistry reg;
    return reg;
}

inline const NamedTable& get_table(std::string_view name) { return builtin_registry().get(name); }

// ---- typed views ---------------------------------------------------------

template <class P>
const P& payload_as(const NamedTable& t) {
    const P* p = std::get_if<P>(&t.payload);
    if (!p) throw Error(Errc::precondition_violated, "table '" + t.name + "' is of kind " + std::string(t.kind()));
    return *p;
}

/// Letter table as a FrequencyTable over its profile; counts are thousandths
/// of a percent.
inline FrequencyTable letter_table(const NamedTable& t) {
    const auto& lf = payload_as<LetterFreq>(t);
    FrequencyTable table(alphabet_by_name(lf.alphabet));
    for (const auto& e : lf.entries) table.add(parse_symbol(e.value), e.milli);
    return table;
}

inline Distribution<long> numeric_distribution(const NamedTable& t) {
    const auto& d = payload_as<DistributionTable>(t);
    if (!detail::all_numeric(d.entries))
        throw Error(Errc::precondition_violated, "table '" + t.name + "' has non-numeric values");
    Distribution<long> dist;
    for (const auto& e : d.entries) dist.add(std::stol(e.value), e.milli);
    return dist;
}

inline Distribution<std::string> label_distribution(const NamedTable& t) {
    const auto& d = payload_as<DistributionTable>(t);
    Distribution<std::string> dist;
    for (const auto& e : d.entries) dist.add(e.value, e.milli);
    return dist;
}

/// Reference ranking from a rank list, a grouped list (expanded in listed
/// order) or a letter table (ranked by published percentage).
inline LetterRanks reference_ranks(const NamedTable& t) {
    if (const auto* rl = std::get_if<RankList>(&t.payload)) return letter_ranks(rl->symbols);
    if (const auto* g = std::get_if<GroupedRanks>(&t.payload)) return letter_ranks(expand_groups(g->groups));
    if (std::holds_alternative<LetterFreq>(t.payload)) return build_rank_table(letter_table(t));
    throw Error(Errc::precondition_violated, "table '" + t.name + "' does not define a ranking");
}

inline double ratio_value(const NamedTable& t, std::string_view key) {
    for (const auto& e : payload_as<RatioSet>(t).entries)
        if (e.key == key) return e.value;
    throw Error(Errc::missing_key, "table '" + t.name + "' has no entry '" + std::string(key) + "'");
}

struct RatioCheck {
    std::string relation;
    double lhs = 0.0;
    double rhs = 0.0;
    bool consistent = false;
};

/// Product identities among the POETRY_RATIOS entries, tolerance 0.01.
inline std::vector<RatioCheck> poetry_ratio_checks(const NamedTable& ratios) {
    auto v = [&](std::string_view k) { return ratio_value(ratios, k); };
    std::vector<RatioCheck> checks;
    auto add = [&](std::string relation, double lhs, double rhs) {
        checks.push_back({std::move(relation), lhs, rhs, std::fabs(lhs - rhs) <= 0.01});
    };
    add("(a)*(b) = (c) letters/word", v("a") * v("b"), v("c"));
    add("(d)*(b) = (e) syllables/line", v("d") * v("b"), v("e"));
    add("(d)*(g) = (h) words/sentence", v("d") * v("g"), v("h"));
    return checks;
}

} // namespace lexigrid

#pragma once

// Text ingestion over an alphabet profile: symbol streams, word tokens and
// the vowel-run syllable heuristic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "utf8.hpp"

namespace lexigrid {

struct SymbolStream {
    std::vector<Symbol> symbols;
    std::size_t discarded = 0; // non-whitespace code points outside the profile

    std::string str() const { return utf8::encode(std::u32string_view(symbols.data(), symbols.size())); }
};

namespace detail {

constexpr bool is_space(Symbol c) noexcept {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' || c == U'\f' || c == 0xA0;
}

} // namespace detail

inline SymbolStream normalize_stream(std::string_view text, const Alphabet& alphabet) {
    SymbolStream out;
    for (Symbol c : utf8::decode(text)) {
        if (auto s = to_symbol(c, alphabet)) {
            out.symbols.push_back(*s);
        } else if (!detail::is_space(c)) {
            ++out.discarded;
        }
    }
    return out;
}

/// Splits on anything that is not a letter; letters outside the profile are
/// dropped without ending the token. Hyphens separate ("s-a" -> S, A).
inline std::vector<std::string> word_tokens(std::string_view text, const Alphabet& alphabet) {
    std::vector<std::string> tokens;
    std::string current;
    for (Symbol c : utf8::decode(text)) {
        if (!is_letter(c)) {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (auto s = to_symbol(c, alphabet)) utf8::append(current, *s);
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

/// Per-word syllable overrides, one `WORD<TAB>count` per line. Words are
/// normalized through the profile so lookups match tokens.
class SyllableLexicon {
public:
    SyllableLexicon() = default;

    static SyllableLexicon parse(std::string_view text, const Alphabet& alphabet) {
        SyllableLexicon lex;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty() || line.front() == '#') continue;
            const std::size_t tab = line.find('\t');
            if (tab == std::string_view::npos)
                throw Error(Errc::parse, "syllable lexicon line " + std::to_string(line_no) + ": expected WORD<TAB>count");
            const std::string word = normalize_stream(line.substr(0, tab), alphabet).str();
            const std::string_view count_text = line.substr(tab + 1);
            int count = 0;
            for (char ch : count_text) {
                if (ch < '0' || ch > '9' || count > 1000)
                    throw Error(Errc::parse, "syllable lexicon line " + std::to_string(line_no) + ": bad count");
                count = count * 10 + (ch - '0');
            }
            if (word.empty() || count_text.empty() || count == 0)
                throw Error(Errc::parse, "syllable lexicon line " + std::to_string(line_no) + ": empty word or zero count");
            lex.entries_[word] = count;
        }
        return lex;
    }

    void add(std::string word, int count) { entries_[std::move(word)] = count; }

    std::optional<int> lookup(const std::string& word) const {
        auto it = entries_.find(word);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::string, int> entries_;
};

struct SyllableCount {
    int count = 0;
    bool no_vowels = false; // consonant-only token, counted as one syllable slot
    bool from_lexicon = false;
};

/// Counts maximal runs of vowels (one nucleus per run). Diphthongs count once
/// and hiatus is not detected; supply a lexicon for exact counts.
inline SyllableCount syllable_count(std::string_view word, const Alphabet& alphabet,
                                    const SyllableLexicon* lexicon = nullptr) {
    if (lexicon) {
        if (auto hit = lexicon->lookup(std::string(word))) return {*hit, false, true};
    }
    int runs = 0;
    bool in_run = false;
    for (Symbol c : utf8::decode(word)) {
        const bool vowel = alphabet.is_vowel(c);
        if (vowel && !in_run) ++runs;
        in_run = vowel;
    }
    if (runs == 0) return {1, true, false};
    return {runs, false, false};
}

inline std::size_t letter_count(std::string_view token) { return utf8::decode(token).size(); }

inline std::size_t vowel_count(std::string_view token, const Alphabet& alphabet) {
    std::size_t v = 0;
    for (Symbol c : utf8::decode(token)) v += alphabet.is_vowel(c) ? 1 : 0;
    return v;
}

/// Line/word/syllable/letter totals of a text. Lines are those holding at
/// least one word; `units` counts the texts merged in (poems, files).
struct TextShape {
    std::uint64_t units = 0;
    std::uint64_t lines = 0;
    std::uint64_t words = 0;
    std::uint64_t syllables = 0;
    std::uint64_t letters = 0;

    TextShape& operator+=(const TextShape& o) {
        units += o.units;
        lines += o.lines;
        words += o.words;
        syllables += o.syllables;
        letters += o.letters;
        return *this;
    }
};

inline TextShape measure_text(std::string_view text, const Alphabet& alphabet, const SyllableLexicon* lexicon = nullptr) {
    TextShape shape;
    shape.units = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto tokens = word_tokens(text.substr(pos, end - pos), alphabet);
        pos = end + 1;
        if (tokens.empty()) continue;
        ++shape.lines;
        for (const auto& t : tokens) {
            ++shape.words;
            shape.letters += letter_count(t);
            shape.syllables += static_cast<std::uint64_t>(syllable_count(t, alphabet, lexicon).count);
        }
    }
    return shape;
}

} // namespace lexigrid

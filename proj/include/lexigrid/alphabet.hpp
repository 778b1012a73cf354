#pragma once

// Alphabet profiles for Romanian text. Three built-in profiles correspond to
// the three letter inventories the published frequency tables use:
//   grid23   - crossword grids: Ă,Â->A, Î->I, Ș->S, Ț->T; no Q, W, Y
//   clue27   - clue texts: diacritics kept distinct, exactly the 27 letters tabulated
//   poetry31 - poetry: 28 Romanian letters plus Q, W, Y

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "utf8.hpp"

namespace lexigrid {

using Symbol = char32_t;

namespace letters {
inline constexpr Symbol a_breve = U'Ă';      // Ă
inline constexpr Symbol a_circumflex = U'Â'; // Â
inline constexpr Symbol i_circumflex = U'Î'; // Î
inline constexpr Symbol s_comma = U'Ș';      // Ș
inline constexpr Symbol t_comma = U'Ț';      // Ț
inline constexpr Symbol s_cedilla = U'Ş';    // Ş
inline constexpr Symbol t_cedilla = U'Ţ';    // Ţ
} // namespace letters

struct Alphabet {
    std::string name;
    std::vector<Symbol> symbols;
    std::map<Symbol, Symbol> fold;
    std::vector<Symbol> vowels;

    std::optional<std::size_t> index_of(Symbol s) const {
        auto it = std::find(symbols.begin(), symbols.end(), s);
        if (it == symbols.end()) return std::nullopt;
        return static_cast<std::size_t>(it - symbols.begin());
    }
    bool contains(Symbol s) const { return index_of(s).has_value(); }
    bool is_vowel(Symbol s) const { return std::find(vowels.begin(), vowels.end(), s) != vowels.end(); }
    std::size_t size() const noexcept { return symbols.size(); }
};

/// Checks the profile invariants: distinct symbols, vowels and fold targets
/// inside the symbol set, and fold targets that are not themselves folded.
inline void validate_alphabet(const Alphabet& a) {
    std::vector<Symbol> sorted = a.symbols;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::precondition_violated, "alphabet '" + a.name + "' repeats a symbol");
    for (Symbol v : a.vowels)
        if (!a.contains(v)) throw Error(Errc::precondition_violated, "alphabet '" + a.name + "': vowel not in symbols");
    for (auto [from, to] : a.fold) {
        if (!a.contains(to)) throw Error(Errc::precondition_violated, "alphabet '" + a.name + "': fold target not in symbols");
        if (a.fold.contains(to)) throw Error(Errc::precondition_violated, "alphabet '" + a.name + "': chained fold");
    }
}

namespace detail {

inline std::vector<Symbol> symbols_of(std::u32string_view s) { return {s.begin(), s.end()}; }

} // namespace detail

inline const Alphabet& grid23() {
    static const Alphabet a{
        "grid23",
        detail::symbols_of(U"ABCDEFGHIJKLMNOPRSTUVXZ"),
        {{letters::a_breve, U'A'},
         {letters::a_circumflex, U'A'},
         {letters::i_circumflex, U'I'},
         {letters::s_comma, U'S'},
         {letters::t_comma, U'T'}},
        detail::symbols_of(U"AEIOU"),
    };
    return a;
}

// The published clue table has no M row; the profile follows the table.
inline const Alphabet& clue27() {
    static const Alphabet a{
        "clue27",
        detail::symbols_of(U"AĂÂBCDEFGHIÎJKLNOPRSȘTȚUVXZ"),
        {},
        detail::symbols_of(U"AĂÂEIÎOU"),
    };
    return a;
}

inline const Alphabet& poetry31() {
    static const Alphabet a{
        "poetry31",
        detail::symbols_of(U"AĂÂBCDEFGHIÎJKLMNOPQRSȘTȚUVWXYZ"),
        {},
        detail::symbols_of(U"AĂÂEIÎOU"),
    };
    return a;
}

inline const Alphabet& alphabet_by_name(std::string_view name) {
    if (name == "grid23") return grid23();
    if (name == "clue27") return clue27();
    if (name == "poetry31") return poetry31();
    throw Error(Errc::parse, "unknown alphabet profile '" + std::string(name) + "' (expected grid23, clue27 or poetry31)");
}

/// Uppercases Latin letters and maps the cedilla forms Ş/Ţ onto the
/// comma-below letters Ș/Ț. Other code points pass through unchanged.
constexpr Symbol canonical_upper(Symbol c) noexcept {
    if (c >= U'a' && c <= U'z') return c - 0x20;
    if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 0x20;
    switch (c) {
    case U'ă': return letters::a_breve;
    case U'ș':
    case U'ş':
    case letters::s_cedilla: return letters::s_comma;
    case U'ț':
    case U'ţ':
    case letters::t_cedilla: return letters::t_comma;
    default: return c;
    }
}

constexpr bool is_letter(Symbol c) noexcept {
    if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z')) return true;
    if (c >= 0xC0 && c <= 0x24F) return c != 0xD7 && c != 0xF7;
    return false;
}

/// Maps a code point to the profile symbol it counts as, if any.
inline std::optional<Symbol> to_symbol(Symbol c, const Alphabet& alphabet) {
    Symbol s = canonical_upper(c);
    if (auto it = alphabet.fold.find(s); it != alphabet.fold.end()) s = it->second;
    if (!alphabet.contains(s)) return std::nullopt;
    return s;
}

/// Parses a symbol written in a reference table or rank file ("A", "Ș", "ş").
inline Symbol parse_symbol(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    if (cps.size() != 1) throw Error(Errc::parse, "expected a single letter, got '" + std::string(text) + "'");
    return canonical_upper(cps.front());
}

} // namespace lexigrid

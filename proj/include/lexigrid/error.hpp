#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexigrid {

enum class Errc {
    ragged_rows,
    invalid_char,
    empty_grid,
    precondition_violated,
    no_words,
    empty_input,
    missing_key,
    symbol_set_mismatch,
    too_large,
    unknown_table,
    io,
    parse,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::ragged_rows: return "RaggedRows";
    case Errc::invalid_char: return "InvalidChar";
    case Errc::empty_grid: return "EmptyGrid";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::no_words: return "NoWords";
    case Errc::empty_input: return "EmptyInput";
    case Errc::missing_key: return "MissingKey";
    case Errc::symbol_set_mismatch: return "SymbolSetMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::unknown_table: return "UnknownTable";
    case Errc::io: return "IoError";
    case Errc::parse: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace lexigrid

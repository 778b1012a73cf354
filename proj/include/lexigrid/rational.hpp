#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace lexigrid {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

// Largest integer not greater than r.
inline std::int64_t floor(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

/// Parses a plain decimal literal ("15", "0.2", "13.25") into an exact rational.
inline Rational parse_decimal(std::string_view text) {
    if (text.empty()) throw Error(Errc::parse, "empty number");
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        ++i;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool seen_point = false;
    bool seen_digit = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error(Errc::parse, "not a decimal number: '" + std::string(text) + "'");
        seen_digit = true;
        if (num > (INT64_MAX - 9) / 10 || (seen_point && den > INT64_MAX / 10))
            throw Error(Errc::parse, "number too long: '" + std::string(text) + "'");
        num = num * 10 + (c - '0');
        if (seen_point) den *= 10;
    }
    if (!seen_digit) throw Error(Errc::parse, "not a decimal number: '" + std::string(text) + "'");
    return Rational(negative ? -num : num, den);
}

/// Decimal rendering rounded half away from zero, e.g. 32/23 -> "1.391".
inline std::string format_fixed(const Rational& r, int decimals) {
    std::int64_t scale = 1;
    for (int k = 0; k < decimals; ++k) scale *= 10;
    const bool negative = r < 0;
    const Rational a = negative ? -r : r;
    const std::int64_t scaled = floor(a * scale + Rational(1, 2));
    std::string digits = std::to_string(scaled / scale);
    if (decimals > 0) {
        std::string frac = std::to_string(scaled % scale);
        digits += '.' + std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
    }
    return (negative && scaled != 0 ? "-" : "") + digits;
}

inline std::string to_fraction_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace lexigrid

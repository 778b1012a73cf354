#pragma once

// Closed-form word-count laws for crossword grids and the black-cell budget
// rule. The formulas hold for grids of at least 3x3 whose black cells are
// pairwise non-adjacent; outside that domain the functions refuse rather
// than return a wrong count, and callers fall back to extract_words().

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "error.hpp"
#include "grid.hpp"
#include "rational.hpp"

namespace lexigrid {

struct GridPrediction {
    std::int64_t total = 0;
    std::int64_t across = 0;
    std::int64_t down = 0;
    std::int64_t difference = 0; // across - down
    friend bool operator==(const GridPrediction&, const GridPrediction&) = default;
};

inline GridPrediction predict_counts(std::size_t rows, std::size_t cols, const BlackCensus& census) {
    if (rows < 3 || cols < 3)
        throw Error(Errc::precondition_violated, "word-count formulas need at least a 3x3 grid");
    const auto n = static_cast<std::int64_t>(rows);
    const auto m = static_cast<std::int64_t>(cols);
    const auto bo = static_cast<std::int64_t>(census.zone_bo);
    const auto bv = static_cast<std::int64_t>(census.zone_bv);
    const auto c = static_cast<std::int64_t>(census.zone_c);
    GridPrediction p;
    p.across = n + bo + c;
    p.down = m + bv + c;
    p.total = n + m + (bo + bv) + 2 * c;
    p.difference = n - m + bo - bv;
    return p;
}

inline GridPrediction predict_counts(const Grid& grid) {
    if (!validate_spacing(grid))
        throw Error(Errc::precondition_violated, "adjacent black cells; word-count formulas do not apply");
    return predict_counts(grid.rows(), grid.cols(), black_census(grid));
}

struct WordBounds {
    std::size_t min = 0;
    std::size_t max = 0;
    friend bool operator==(const WordBounds&, const WordBounds&) = default;
};

/// Fewest words is n+m (no blacks outside the corners); most is n+m+2p (all
/// blacks in the interior).
inline WordBounds word_bounds(std::size_t rows, std::size_t cols, std::size_t blacks) {
    if (rows == 0 || cols == 0) throw Error(Errc::precondition_violated, "empty grid");
    if (blacks >= rows * cols) throw Error(Errc::precondition_violated, "black count must be below n*m");
    return {rows + cols, rows + cols + 2 * blacks};
}

struct LengthReport {
    std::size_t letter_slots = 0; // n*m - p
    std::size_t word_count = 0;
    Rational mean_length;
    Rational lower_bound;
};

// Every white cell sits in one across and one down word, so the letters
// summed over all words is 2(nm - p).
inline LengthReport length_report(const Grid& grid, const WordCensus& words) {
    if (words.total() == 0) throw Error(Errc::no_words, "grid has no white cells");
    const auto n = static_cast<std::int64_t>(grid.rows());
    const auto m = static_cast<std::int64_t>(grid.cols());
    const auto p = static_cast<std::int64_t>(grid.black_count());
    LengthReport report;
    report.letter_slots = static_cast<std::size_t>(n * m - p);
    report.word_count = words.total();
    report.mean_length = Rational(2 * (n * m - p), static_cast<std::int64_t>(words.total()));
    report.lower_bound = Rational(2 * (n * m - p), n + m + 2 * p);
    return report;
}

/// Nearest-integer rounding with ties up: the largest natural number within
/// 0.5 of x.
inline std::int64_t round_to_nearest_natural(const Rational& x) {
    if (x < Rational(-1, 2)) throw Error(Errc::precondition_violated, "no natural number within 0.5 of a negative value");
    const std::int64_t r = floor(x + Rational(1, 2));
    return r < 0 ? 0 : r;
}

/// Largest permitted black-cell count for an n x m grid at `percent`.
inline std::int64_t black_budget(std::size_t rows, std::size_t cols, const Rational& percent = Rational(15)) {
    if (percent < 0 || percent > 100) throw Error(Errc::precondition_violated, "percent must lie in [0, 100]");
    const Rational x = percent * static_cast<std::int64_t>(rows * cols) / 100;
    return round_to_nearest_natural(x);
}

struct Feasibility {
    Rational bound;           // predicted mean word length
    bool short_words = false; // bound <= 3
};

inline Feasibility budget_feasibility(std::size_t rows, std::size_t cols, const Rational& fraction) {
    if (rows == 0 || cols == 0) throw Error(Errc::precondition_violated, "empty grid");
    if (fraction < 0 || fraction >= 1) throw Error(Errc::precondition_violated, "fraction must lie in [0, 1)");
    const auto n = static_cast<std::int64_t>(rows);
    const auto m = static_cast<std::int64_t>(cols);
    const Rational nm(n * m);
    Feasibility f;
    f.bound = 2 * nm * (1 - fraction) / (Rational(n + m) + 2 * fraction * nm);
    f.short_words = f.bound <= 3;
    return f;
}

/// A square record grid: fewest black cells ever achieved for its size.
/// `percentage_milli` is the published percentage in thousandths of a percent.
struct RecordGridEntry {
    int side = 0;
    int min_black = 0;
    int percentage_milli = 0;
    int count_known = 0;

    Rational percentage() const { return Rational(percentage_milli, 1000); }
    friend bool operator==(const RecordGridEntry&, const RecordGridEntry&) = default;
};

inline std::span<const RecordGridEntry> record_table() {
    static constexpr std::array<RecordGridEntry, 9> rows{{
        {8, 0, 0, 24},
        {9, 0, 0, 3},
        {10, 3, 3000, 2},
        {11, 4, 3305, 1},
        {12, 8, 5555, 1},
        {13, 12, 7100, 1},
        {14, 14, 7142, 1},
        {15, 17, 7555, 1},
        {16, 20, 7812, 2},
    }};
    return rows;
}

/// Published percentages are truncated (not rounded) to three decimals.
inline std::int64_t recomputed_percentage_milli(const RecordGridEntry& e) {
    if (e.side <= 0) throw Error(Errc::precondition_violated, "record grid side must be positive");
    return floor(Rational(100000LL * e.min_black, static_cast<std::int64_t>(e.side) * e.side));
}

inline bool verify_record(const RecordGridEntry& e) { return recomputed_percentage_milli(e) == e.percentage_milli; }

} // namespace lexigrid

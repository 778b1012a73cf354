#pragma once

// Crossword grid model: parsing, positional zones, black-cell census and
// direct enumeration of across/down words.
//
// Coordinates are 1-based (row, column). A word is a maximal run of white
// cells inside one row or one column; runs of length 1 count.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace lexigrid {

struct Coord {
    std::size_t row = 1;
    std::size_t col = 1;
    friend bool operator==(const Coord&, const Coord&) = default;
};

struct Cell {
    bool black = false;
    char letter = '\0'; // 'A'..'Z' on a lettered white cell, '\0' otherwise
    friend bool operator==(const Cell&, const Cell&) = default;
};

inline constexpr Cell white_cell{};
inline constexpr Cell black_cell{true, '\0'};

/// Zone A: the corner cells. BO: top/bottom border rows without corners.
/// BV: left/right border columns without corners. C: interior.
enum class Zone { A, BO, BV, C };

constexpr std::string_view to_string(Zone z) noexcept {
    switch (z) {
    case Zone::A: return "A";
    case Zone::BO: return "BO";
    case Zone::BV: return "BV";
    case Zone::C: return "C";
    }
    return "?";
}

constexpr Zone zone_of(std::size_t rows, std::size_t cols, Coord at) noexcept {
    const bool on_row_border = at.row == 1 || at.row == rows;
    const bool on_col_border = at.col == 1 || at.col == cols;
    if (on_row_border && on_col_border) return Zone::A;
    if (on_row_border) return Zone::BO;
    if (on_col_border) return Zone::BV;
    return Zone::C;
}

class Grid {
public:
    Grid(std::size_t rows, std::size_t cols, std::vector<Cell> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ == 0 || cols_ == 0) throw Error(Errc::empty_grid, "grid needs at least one row and one column");
        if (cells_.size() != rows_ * cols_)
            throw Error(Errc::ragged_rows, "cell count does not match " + std::to_string(rows_) + "x" +
                                               std::to_string(cols_));
        for (const Cell& c : cells_) {
            if (c.black && c.letter != '\0') throw Error(Errc::invalid_char, "black cell cannot carry a letter");
            if (c.letter != '\0' && (c.letter < 'A' || c.letter > 'Z'))
                throw Error(Errc::invalid_char, "letters must be folded A-Z");
        }
    }

    static Grid blank(std::size_t rows, std::size_t cols) {
        return Grid(rows, cols, std::vector<Cell>(rows * cols, white_cell));
    }

    static Grid with_blacks(std::size_t rows, std::size_t cols, const std::vector<Coord>& blacks) {
        std::vector<Cell> cells(rows * cols, white_cell);
        for (const Coord& b : blacks) {
            if (b.row < 1 || b.row > rows || b.col < 1 || b.col > cols)
                throw Error(Errc::precondition_violated, "black cell outside the grid");
            cells[(b.row - 1) * cols + (b.col - 1)] = black_cell;
        }
        return Grid(rows, cols, std::move(cells));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }

    const Cell& at(std::size_t row, std::size_t col) const { return cells_.at((row - 1) * cols_ + (col - 1)); }
    const Cell& at(Coord c) const { return at(c.row, c.col); }
    bool is_black(std::size_t row, std::size_t col) const { return at(row, col).black; }

    std::size_t black_count() const {
        return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.black; }));
    }

    std::string serialize() const {
        std::string out;
        out.reserve(cells_.size() + rows_);
        for (std::size_t r = 1; r <= rows_; ++r) {
            for (std::size_t c = 1; c <= cols_; ++c) {
                const Cell& cell = at(r, c);
                out.push_back(cell.black ? '#' : (cell.letter != '\0' ? cell.letter : '.'));
            }
            out.push_back('\n');
        }
        return out;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cell> cells_;
};

/// Parses the grid text format: '.' white, 'A'-'Z' lettered white, '#' black,
/// lines starting with ';' are comments. CRLF line endings are accepted.
inline Grid parse_grid(std::string_view text) {
    std::vector<Cell> cells;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t line_no = 0;
    std::size_t pending_blank = 0; // blank lines are only tolerated at the end

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!line.empty() && line.front() == ';') continue;
        if (line.empty()) {
            ++pending_blank;
            if (end == text.size()) break;
            continue;
        }
        if (pending_blank > 0)
            throw Error(Errc::ragged_rows, "line " + std::to_string(line_no - 1) + ": empty row inside grid");
        if (rows == 0) {
            cols = line.size();
        } else if (line.size() != cols) {
            throw Error(Errc::ragged_rows, "line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                                               " cells, found " + std::to_string(line.size()));
        }
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char ch = line[i];
            if (ch == '.') {
                cells.push_back(white_cell);
            } else if (ch == '#') {
                cells.push_back(black_cell);
            } else if (ch >= 'A' && ch <= 'Z') {
                cells.push_back(Cell{false, ch});
            } else {
                throw Error(Errc::invalid_char, "line " + std::to_string(line_no) + ", column " +
                                                    std::to_string(i + 1) + ": unexpected character");
            }
        }
        ++rows;
        if (end == text.size()) break;
    }
    if (rows == 0) throw Error(Errc::empty_grid, "no grid rows found");
    return Grid(rows, cols, std::move(cells));
}

struct BlackCensus {
    std::size_t total = 0;
    std::size_t zone_a = 0;
    std::size_t zone_bo = 0;
    std::size_t zone_bv = 0;
    std::size_t zone_c = 0;

    std::size_t zone_b() const noexcept { return zone_bo + zone_bv; }
    friend bool operator==(const BlackCensus&, const BlackCensus&) = default;
};

inline BlackCensus black_census(const Grid& grid) {
    BlackCensus census;
    for (std::size_t r = 1; r <= grid.rows(); ++r) {
        for (std::size_t c = 1; c <= grid.cols(); ++c) {
            if (!grid.is_black(r, c)) continue;
            ++census.total;
            switch (zone_of(grid.rows(), grid.cols(), {r, c})) {
            case Zone::A: ++census.zone_a; break;
            case Zone::BO: ++census.zone_bo; break;
            case Zone::BV: ++census.zone_bv; break;
            case Zone::C: ++census.zone_c; break;
            }
        }
    }
    return census;
}

enum class Direction { across, down };

/// One word slot. `line` is the row for across words and the column for down
/// words; `start` is the first column (across) or first row (down).
struct WordSlot {
    Direction direction = Direction::across;
    std::size_t line = 1;
    std::size_t start = 1;
    std::size_t length = 0;
    std::optional<std::string> letters; // present only when every cell is lettered

    Coord cell(std::size_t offset) const {
        return direction == Direction::across ? Coord{line, start + offset} : Coord{start + offset, line};
    }
    friend bool operator==(const WordSlot&, const WordSlot&) = default;
};

struct WordCensus {
    std::vector<WordSlot> across;
    std::vector<WordSlot> down;

    std::size_t total() const noexcept { return across.size() + down.size(); }
};

namespace detail {

template <class CellAt>
void scan_runs(std::size_t lines, std::size_t length, Direction dir, CellAt cell_at, std::vector<WordSlot>& out) {
    for (std::size_t line = 1; line <= lines; ++line) {
        std::size_t k = 1;
        while (k <= length) {
            if (cell_at(line, k).black) {
                ++k;
                continue;
            }
            WordSlot slot{dir, line, k, 0, std::string()};
            while (k <= length && !cell_at(line, k).black) {
                const char letter = cell_at(line, k).letter;
                if (letter == '\0') {
                    slot.letters.reset();
                } else if (slot.letters) {
                    slot.letters->push_back(letter);
                }
                ++slot.length;
                ++k;
            }
            out.push_back(std::move(slot));
        }
    }
}

} // namespace detail

inline WordCensus extract_words(const Grid& grid) {
    WordCensus census;
    detail::scan_runs(grid.rows(), grid.cols(), Direction::across,
                      [&](std::size_t row, std::size_t col) -> const Cell& { return grid.at(row, col); }, census.across);
    detail::scan_runs(grid.cols(), grid.rows(), Direction::down,
                      [&](std::size_t col, std::size_t row) -> const Cell& { return grid.at(row, col); }, census.down);
    return census;
}

/// True iff no two black cells share an edge.
inline bool validate_spacing(const Grid& grid) {
    for (std::size_t r = 1; r <= grid.rows(); ++r) {
        for (std::size_t c = 1; c <= grid.cols(); ++c) {
            if (!grid.is_black(r, c)) continue;
            if (c < grid.cols() && grid.is_black(r, c + 1)) return false;
            if (r < grid.rows() && grid.is_black(r + 1, c)) return false;
        }
    }
    return true;
}

} // namespace lexigrid

// Minimal library usage: read a grid, compare the closed-form word counts
// with a direct scan and print the black-cell budget.
//
//   grid_report samples/grid13_budget_ok.txt

#include <fstream>
#include <iostream>
#include <sstream>

#include "lexigrid/grid.hpp"
#include "lexigrid/grid_laws.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: grid_report <grid-file>\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << '\n';
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();

    try {
        const lexigrid::Grid grid = lexigrid::parse_grid(text.str());
        const auto census = lexigrid::black_census(grid);
        const auto words = lexigrid::extract_words(grid);
        std::cout << grid.rows() << "x" << grid.cols() << ", " << census.total << " black (A " << census.zone_a
                  << ", BO " << census.zone_bo << ", BV " << census.zone_bv << ", C " << census.zone_c << ")\n";
        std::cout << "scanned: " << words.across.size() << " across + " << words.down.size() << " down\n";
        if (grid.rows() >= 3 && grid.cols() >= 3 && lexigrid::validate_spacing(grid)) {
            const auto p = lexigrid::predict_counts(grid);
            std::cout << "formula: " << p.across << " across + " << p.down << " down\n";
        }
        const auto budget = lexigrid::black_budget(grid.rows(), grid.cols());
        std::cout << "budget at 15%: " << budget << (static_cast<std::int64_t>(census.total) > budget ? " (exceeded)" : "")
                  << '\n';
    } catch (const lexigrid::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 0;
}

#pragma once

// Regressions of published values against the embedded tables. Gated checks
// decide the exit code; informational ones report values whose source
// ranking is ambiguous in print.

#include <cmath>
#include <string>
#include <vector>

#include "lexigrid/lexigrid.hpp"

namespace lexigrid::cli {

struct Regression {
    std::string id;
    std::string description;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool gated = true;

    bool pass() const { return std::fabs(actual - expected) <= tolerance; }
};

inline std::vector<Regression> run_regressions(const TableRegistry& reg) {
    std::vector<Regression> out;
    auto add = [&](std::string id, std::string what, double expected, double actual, double tol, bool gated = true) {
        out.push_back({std::move(id), std::move(what), expected, actual, tol, gated});
    };

    const auto grid = letter_table(reg.get("GRID_LETTER_FREQ"));
    const auto clue = letter_table(reg.get("CLUE_LETTER_FREQ"));
    const auto poetry = letter_table(reg.get("POETRY_LETTER_FREQ"));
    const auto ranks23 = reference_ranks(reg.get("ROMANIAN_RANKS_23"));

    const auto grid_ranks = build_rank_table(grid, &ranks23);
    add("ecart.grid", "écart of grid letters vs Romanian (23 letters)", 1.391,
        to_double(text_ecart(ranks23, grid_ranks).mean_abs), 0.001);

    add("entropy.grid", "H1 of grid letters (bits)", 3.865, entropy_bits(grid), 0.01);
    add("energy.grid", "informational energy of grid letters", 0.084, informational_energy(grid), 0.002);
    add("entropy.clue", "H1 of clue letters (bits)", 4.226, entropy_bits(clue), 0.01);
    add("energy.clue", "informational energy of clue letters", 0.062, informational_energy(clue), 0.002);
    add("entropy.poetry", "H1 of poetry letters (bits)", 4.222, entropy_bits(poetry), 0.01);
    add("energy.poetry", "informational energy of poetry letters", 0.064, informational_energy(poetry), 0.002);

    add("mean.grid_syllables", "mean grid word length in syllables", 2.246,
        distribution_mean(numeric_distribution(reg.get("GRID_SYLLABLE_DIST"))), 0.001);
    add("mean.poetry_syllables", "mean poetry word length in syllables", 1.933,
        distribution_mean(numeric_distribution(reg.get("POETRY_SYLLABLE_DIST"))), 0.001);
    add("mean.poetry_letters", "mean poetry word length in letters", 4.643,
        distribution_mean(numeric_distribution(reg.get("POETRY_LETTERLEN_DIST"))), 0.02);

    for (const auto& row : payload_as<RecordGrids>(reg.get("RECORD_GRIDS")).rows) {
        add("records." + std::to_string(row.side), "record grid percentage " + std::to_string(row.side) + "x" +
                                                        std::to_string(row.side) + " (truncated to 3 decimals)",
            row.percentage_milli / 1000.0, static_cast<double>(recomputed_percentage_milli(row)) / 1000.0, 0.0);
    }

    add("budget.13", "black budget 13x13 at 15%", 25, static_cast<double>(black_budget(13, 13)), 0.0);
    add("budget.12", "black budget 12x12 at 15%", 22, static_cast<double>(black_budget(12, 12)), 0.0);
    add("feasibility.15", "mean-length bound 15x15 at 20% blacks", 3.0,
        to_double(budget_feasibility(15, 15, Rational(1, 5)).bound), 0.0);

    add("vowels.grid", "vowel share of grid letters (%)", 47.462, to_double(vowel_ratio(grid)), 0.001);
    add("vowels.poetry", "vowel share of poetry letters (%)", 46.865, to_double(vowel_ratio(poetry)), 0.01);

    // Informational: published values whose inputs are ambiguous in print.
    const auto juridical = reference_ranks(reg.get("JURIDICAL_GROUPS"));
    {
        // the 23-letter comparison leaves out W, Q, Y
        LetterRanks folded;
        for (Symbol s : juridical.symbols())
            if (ranks23.contains(s)) folded.append(s);
        add("ecart.juridical", "écart of juridical groups vs Romanian (groups expanded in listed order)", 2.348,
            to_double(text_ecart(ranks23, folded).mean_abs), 0.001, false);
    }
    {
        const auto ranks27 = reference_ranks(reg.get("ROMANIAN_RANKS_27"));
        const auto restricted = poetry.restricted_to(ranks27.symbols());
        add("ecart.poetry", "écart of poetry letters vs reconstructed 27-letter Romanian order", 0.741,
            to_double(text_ecart(ranks27, build_rank_table(restricted, &ranks27)).mean_abs), 0.001, false);
    }
    add("vowels.clue", "vowel share of clue letters (%), table column", 46.679, to_double(vowel_ratio(clue)), 0.01,
        false);
    for (const auto& c : poetry_ratio_checks(reg.get("POETRY_RATIOS")))
        add("ratios." + c.relation.substr(0, c.relation.find(' ')), "poetry ratio identity " + c.relation, c.rhs,
            c.lhs, 0.01, false);
    return out;
}

} // namespace lexigrid::cli

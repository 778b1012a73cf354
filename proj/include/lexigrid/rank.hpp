#pragma once

// Frequency ranks and the écart rank-deviation metric.
//
// The écart of a symbol is (reference rank - observed rank); the écart of a
// text is the mean absolute écart over the n ranked symbols. Its maximum over
// all rankings is reached by the order-reversing permutation and equals
// (n-1)/2 + floor(n/2)/n.
//
// RankTable is templated on the key so that letter and word écart share one
// code path (Symbol keys and std::string keys respectively).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "frequency.hpp"
#include "rational.hpp"

namespace lexigrid {

template <class Key>
class RankTable {
public:
    RankTable() = default;

    /// `order[0]` gets rank 1.
    explicit RankTable(std::vector<Key> order) {
        for (auto& k : order) append(std::move(k));
    }

    std::size_t size() const noexcept { return order_.size(); }
    bool empty() const noexcept { return order_.empty(); }
    std::span<const Key> symbols() const noexcept { return order_; }
    bool contains(const Key& k) const { return rank_.contains(k); }

    std::optional<std::size_t> rank_of(const Key& k) const {
        auto it = rank_.find(k);
        if (it == rank_.end()) return std::nullopt;
        return it->second;
    }

    /// Appends at the lowest rank ("biggest order").
    void append(Key k) {
        if (rank_.contains(k)) throw Error(Errc::parse, "rank table lists a symbol twice");
        rank_.emplace(k, order_.size() + 1);
        order_.push_back(std::move(k));
    }

    friend bool operator==(const RankTable& a, const RankTable& b) { return a.order_ == b.order_; }

private:
    std::vector<Key> order_;
    std::map<Key, std::size_t> rank_;
};

using LetterRanks = RankTable<Symbol>;
using WordRanks = RankTable<std::string>;

/// Ranks entries by descending count. Ties go to the reference order when a
/// reference is given (keys it lacks come after those it has), otherwise to
/// the order of `entries`. Zero-count keys land last under the same rule.
template <class Key>
RankTable<Key> rank_by_count(std::span<const std::pair<Key, std::uint64_t>> entries, const RankTable<Key>* reference = nullptr) {
    constexpr auto unranked = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> idx(entries.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto tie_rank = [&](std::size_t i) {
        if (!reference) return unranked;
        return reference->rank_of(entries[i].first).value_or(unranked);
    };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (entries[a].second != entries[b].second) return entries[a].second > entries[b].second;
        return tie_rank(a) < tie_rank(b);
    });
    RankTable<Key> table;
    for (std::size_t i : idx) table.append(entries[i].first);
    return table;
}

inline LetterRanks build_rank_table(const FrequencyTable& table, const LetterRanks* reference = nullptr) {
    std::vector<std::pair<Symbol, std::uint64_t>> entries;
    const auto& symbols = table.alphabet().symbols;
    for (std::size_t i = 0; i < symbols.size(); ++i) entries.emplace_back(symbols[i], table.counts()[i]);
    return rank_by_count<Symbol>(entries, reference);
}

inline WordRanks build_rank_table(const TokenTally& tally, const WordRanks* reference = nullptr) {
    return rank_by_count<std::string>(tally.entries(), reference);
}

inline Rational ecart_bound(std::size_t n) {
    if (n == 0) throw Error(Errc::precondition_violated, "écart bound needs n >= 1");
    const auto nn = static_cast<std::int64_t>(n);
    return Rational(nn - 1, 2) + Rational(nn / 2, nn);
}

template <class Key>
struct EcartReport {
    std::vector<std::pair<Key, std::int64_t>> per_symbol; // in reference order
    std::int64_t sum_abs = 0;
    std::size_t n = 0;
    Rational mean_abs;
    Rational upper_bound;
    std::vector<Key> injected_into_observed;  // reference symbols missing from the text
    std::vector<Key> injected_into_reference; // text symbols missing from the reference
};

/// Symbols missing on one side are first appended to that side, in the order
/// of the side that has them.
template <class Key>
EcartReport<Key> text_ecart(const RankTable<Key>& reference, const RankTable<Key>& observed) {
    if (reference.empty() || observed.empty()) throw Error(Errc::empty_input, "écart needs two non-empty rank tables");
    const bool overlap = std::any_of(reference.symbols().begin(), reference.symbols().end(),
                                     [&](const Key& k) { return observed.contains(k); });
    if (!overlap) throw Error(Errc::symbol_set_mismatch, "reference and observed rank disjoint symbol sets");

    EcartReport<Key> report;
    RankTable<Key> ref = reference;
    RankTable<Key> obs = observed;
    for (const Key& k : reference.symbols())
        if (!observed.contains(k)) {
            obs.append(k);
            report.injected_into_observed.push_back(k);
        }
    for (const Key& k : observed.symbols())
        if (!reference.contains(k)) {
            ref.append(k);
            report.injected_into_reference.push_back(k);
        }

    report.n = ref.size();
    for (const Key& k : ref.symbols()) {
        const auto delta = static_cast<std::int64_t>(*ref.rank_of(k)) - static_cast<std::int64_t>(*obs.rank_of(k));
        report.per_symbol.emplace_back(k, delta);
        report.sum_abs += delta < 0 ? -delta : delta;
    }
    report.mean_abs = Rational(report.sum_abs, static_cast<std::int64_t>(report.n));
    report.upper_bound = ecart_bound(report.n);
    return report;
}

struct OracleResult {
    Rational max_mean;
    bool reversal_attains = false;
    std::uint64_t permutations = 0;
};

/// Exhaustive maximum of (1/n) sum |i - sigma(i)| over all permutations.
inline OracleResult max_ecart_oracle(std::size_t n) {
    if (n == 0) throw Error(Errc::precondition_violated, "oracle needs n >= 1");
    if (n > 8) throw Error(Errc::too_large, "exhaustive search is limited to n <= 8");
    std::vector<std::int64_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::int64_t{1});
    auto displacement = [&](const std::vector<std::int64_t>& s) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < s.size(); ++i) d += std::llabs(static_cast<std::int64_t>(i + 1) - s[i]);
        return d;
    };
    std::int64_t best = 0;
    OracleResult result;
    do {
        best = std::max(best, displacement(sigma));
        ++result.permutations;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::vector<std::int64_t> reversal(n);
    std::iota(reversal.rbegin(), reversal.rend(), std::int64_t{1});
    const auto nn = static_cast<std::int64_t>(n);
    result.max_mean = Rational(best, nn);
    result.reversal_attains = displacement(reversal) == best;
    return result;
}

/// Grouped rank list: lines `label: SYM[,SYM...]` in descending frequency
/// order; '#' comments. A line without a colon is a single group.
inline std::vector<std::vector<std::string>> parse_grouped_ranks(std::string_view text) {
    std::vector<std::vector<std::string>> groups;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (const std::size_t colon = line.find(':'); colon != std::string_view::npos) line = line.substr(colon + 1);
        std::vector<std::string> group;
        while (true) {
            const std::size_t comma = line.find(',');
            const std::string_view item = trim(line.substr(0, comma));
            if (item.empty()) throw Error(Errc::parse, "rank list line " + std::to_string(line_no) + ": empty symbol");
            group.emplace_back(item);
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        groups.push_back(std::move(group));
    }
    if (groups.empty()) throw Error(Errc::parse, "rank list is empty");
    return groups;
}

/// Expands tied groups to strict ranks by their listed within-group order.
inline std::vector<std::string> expand_groups(const std::vector<std::vector<std::string>>& groups) {
    std::vector<std::string> out;
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

inline LetterRanks letter_ranks(const std::vector<std::string>& symbols) {
    LetterRanks ranks;
    for (const auto& s : symbols) ranks.append(parse_symbol(s));
    return ranks;
}

} // namespace lexigrid

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace lexigrid {

/// Symbol counts over a declared alphabet. Every alphabet symbol has an entry,
/// absent ones at zero. Counts may also be published percentages scaled to
/// integers (thousandths of a percent); probabilities renormalize either way.
class FrequencyTable {
public:
    explicit FrequencyTable(Alphabet alphabet) : alphabet_(std::move(alphabet)), counts_(alphabet_.size(), 0) {}

    FrequencyTable(Alphabet alphabet, std::vector<std::uint64_t> counts)
        : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
        if (counts_.size() != alphabet_.size())
            throw Error(Errc::precondition_violated, "count vector does not match alphabet size");
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts_) t += c;
        return t;
    }

    std::uint64_t count(Symbol s) const {
        auto i = alphabet_.index_of(s);
        return i ? counts_[*i] : 0;
    }

    double probability(Symbol s) const {
        const std::uint64_t t = total();
        if (t == 0) throw Error(Errc::empty_input, "frequency table is empty");
        return static_cast<double>(count(s)) / static_cast<double>(t);
    }

    std::vector<double> probabilities() const {
        const std::uint64_t t = total();
        if (t == 0) throw Error(Errc::empty_input, "frequency table is empty");
        std::vector<double> p;
        p.reserve(counts_.size());
        for (auto c : counts_) p.push_back(static_cast<double>(c) / static_cast<double>(t));
        return p;
    }

    void add(Symbol s, std::uint64_t n = 1) {
        auto i = alphabet_.index_of(s);
        if (!i) throw Error(Errc::precondition_violated, "symbol outside alphabet '" + alphabet_.name + "'");
        counts_[*i] += n;
    }

    FrequencyTable& merge(const FrequencyTable& other) {
        if (other.alphabet_.symbols != alphabet_.symbols)
            throw Error(Errc::precondition_violated, "cannot merge tables over different alphabets");
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        return *this;
    }

    /// Projection onto `keep` (order of `keep` preserved); other counts drop out.
    FrequencyTable restricted_to(std::span<const Symbol> keep) const {
        Alphabet sub{alphabet_.name + "-restricted", {}, {}, {}};
        std::vector<std::uint64_t> counts;
        for (Symbol s : keep) {
            if (!alphabet_.contains(s) || sub.contains(s)) continue;
            sub.symbols.push_back(s);
            if (alphabet_.is_vowel(s)) sub.vowels.push_back(s);
            counts.push_back(count(s));
        }
        return FrequencyTable(std::move(sub), std::move(counts));
    }

    /// Entries in descending count, ties in alphabet order.
    std::vector<std::pair<Symbol, std::uint64_t>> sorted_entries() const {
        std::vector<std::pair<Symbol, std::uint64_t>> e;
        for (std::size_t i = 0; i < counts_.size(); ++i) e.emplace_back(alphabet_.symbols[i], counts_[i]);
        std::stable_sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
        return e;
    }

private:
    Alphabet alphabet_;
    std::vector<std::uint64_t> counts_;
};

inline FrequencyTable letter_frequencies(std::span<const Symbol> stream, const Alphabet& alphabet) {
    FrequencyTable table(alphabet);
    for (Symbol s : stream) table.add(s);
    return table;
}

/// Share of vowels in percent, exact.
inline Rational vowel_ratio(const FrequencyTable& table) {
    const std::uint64_t t = table.total();
    if (t == 0) throw Error(Errc::empty_input, "frequency table is empty");
    std::uint64_t v = 0;
    for (Symbol s : table.alphabet().vowels) v += table.count(s);
    return Rational(static_cast<std::int64_t>(100 * v), static_cast<std::int64_t>(t));
}

inline Rational consonant_ratio(const FrequencyTable& table) { return Rational(100) - vowel_ratio(table); }

/// Token counts with first-occurrence order remembered.
class TokenTally {
public:
    TokenTally() = default;
    explicit TokenTally(std::span<const std::string> tokens) {
        for (const auto& t : tokens) add(t);
    }

    void add(const std::string& token, std::uint64_t n = 1) {
        auto [it, inserted] = index_.try_emplace(token, entries_.size());
        if (inserted) entries_.emplace_back(token, 0);
        entries_[it->second].second += n;
    }

    /// (token, count) in first-occurrence order.
    std::span<const std::pair<std::string, std::uint64_t>> entries() const noexcept { return entries_; }
    std::size_t distinct() const noexcept { return entries_.size(); }

    std::uint64_t count(const std::string& token) const {
        auto it = index_.find(token);
        return it == index_.end() ? 0 : entries_[it->second].second;
    }

    std::vector<std::uint64_t> counts() const {
        std::vector<std::uint64_t> c;
        c.reserve(entries_.size());
        for (const auto& e : entries_) c.push_back(e.second);
        return c;
    }

private:
    std::vector<std::pair<std::string, std::uint64_t>> entries_;
    std::map<std::string, std::size_t> index_;
};

/// The k most frequent tokens outside `stoplist`, ties by first occurrence.
inline std::vector<std::pair<std::string, std::uint64_t>> keyword_top_k(std::span<const std::string> tokens, std::size_t k,
                                                                        const std::set<std::string>& stoplist = {}) {
    if (k == 0) throw Error(Errc::precondition_violated, "k must be at least 1");
    TokenTally tally;
    for (const auto& t : tokens)
        if (!stoplist.contains(t)) tally.add(t);
    std::vector<std::pair<std::string, std::uint64_t>> ranked(tally.entries().begin(), tally.entries().end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

} // namespace lexigrid

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "text.hpp"

namespace lexigrid {

/// Weighted support over values; proportions are weight / total. Weights are
/// occurrence counts or published percentages in thousandths.
template <class Value>
class Distribution {
public:
    void add(const Value& v, std::uint64_t weight = 1) { weights_[v] += weight; }

    const std::map<Value, std::uint64_t>& weights() const noexcept { return weights_; }
    bool empty() const noexcept { return total() == 0; }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [v, w] : weights_) t += w;
        return t;
    }

    double proportion(const Value& v) const {
        const std::uint64_t t = total();
        if (t == 0) throw Error(Errc::empty_input, "distribution is empty");
        auto it = weights_.find(v);
        return it == weights_.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(t);
    }

private:
    std::map<Value, std::uint64_t> weights_;
};

inline double distribution_mean(const Distribution<long>& dist) {
    const std::uint64_t t = dist.total();
    if (t == 0) throw Error(Errc::empty_input, "distribution is empty");
    long double acc = 0;
    for (const auto& [v, w] : dist.weights()) acc += static_cast<long double>(v) * static_cast<long double>(w);
    return static_cast<double>(acc / static_cast<long double>(t));
}

enum class LengthMeasure { letters, syllables };

inline Distribution<long> length_distribution(std::span<const std::string> tokens, LengthMeasure measure,
                                              const Alphabet& alphabet, const SyllableLexicon* lexicon = nullptr) {
    if (tokens.empty()) throw Error(Errc::empty_input, "no tokens");
    Distribution<long> dist;
    for (const auto& t : tokens) {
        const long len = measure == LengthMeasure::letters ? static_cast<long>(letter_count(t))
                                                           : static_cast<long>(syllable_count(t, alphabet, lexicon).count);
        dist.add(len);
    }
    return dist;
}

struct AnnotatedToken {
    std::string surface;
    std::map<std::string, std::string> attributes;
};

/// One token per line: `surface<TAB>key=value[,key=value...]`; '#' starts a
/// comment line. The attribute column is optional.
inline std::vector<AnnotatedToken> parse_annotated(std::string_view text) {
    std::vector<AnnotatedToken> tokens;
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
        AnnotatedToken tok;
        tok.surface = std::string(line.substr(0, tab));
        if (tok.surface.empty()) throw Error(Errc::parse, "annotated line " + std::to_string(line_no) + ": empty surface");
        if (tab != std::string_view::npos) {
            std::string_view attrs = line.substr(tab + 1);
            while (!attrs.empty()) {
                const std::size_t comma = attrs.find(',');
                const std::string_view pair = attrs.substr(0, comma);
                const std::size_t eq = pair.find('=');
                if (eq == std::string_view::npos || eq == 0)
                    throw Error(Errc::parse, "annotated line " + std::to_string(line_no) + ": expected key=value");
                tok.attributes[std::string(pair.substr(0, eq))] = std::string(pair.substr(eq + 1));
                if (comma == std::string_view::npos) break;
                attrs.remove_prefix(comma + 1);
            }
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

inline Distribution<std::string> attribute_distribution(std::span<const AnnotatedToken> tokens, const std::string& key) {
    Distribution<std::string> dist;
    for (const auto& t : tokens)
        if (auto it = t.attributes.find(key); it != t.attributes.end()) dist.add(it->second);
    if (dist.empty()) throw Error(Errc::missing_key, "no token carries attribute '" + key + "'");
    return dist;
}

/// Share of "full" words (nouns, verbs in predicative moods, adjectives,
/// adverbs) in percent, read from the `pos` attribute. Non-predicative verb
/// forms should be tagged with a different pos value.
inline double full_word_share(std::span<const AnnotatedToken> tokens) {
    const auto pos = attribute_distribution(tokens, "pos");
    std::uint64_t full = 0;
    for (const auto& [value, count] : pos.weights())
        if (value == "noun" || value == "verb" || value == "adjective" || value == "adverb") full += count;
    return 100.0 * static_cast<double>(full) / static_cast<double>(pos.total());
}

} // namespace lexigrid

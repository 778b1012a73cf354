#pragma once

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lexigrid/error.hpp"
#include "lexigrid/rational.hpp"

namespace lexigrid::cli {

struct Report {
    std::string command;
    std::vector<std::string> inputs;
    nlohmann::json results = nlohmann::json::object();
    std::vector<std::string> warnings;
};

inline nlohmann::json to_json(const Report& r) {
    return {{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"warnings", r.warnings}};
}

/// {"exact": "32/23", "value": 1.391304...} - exact form plus a double.
inline nlohmann::json rational_json(const Rational& r) {
    return {{"exact", to_fraction_string(r)}, {"value", to_double(r)}};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(Errc::io, "read failed for '" + path + "'");
    return ss.str();
}

namespace detail {

inline std::string scalar_text(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_float()) {
        std::ostringstream ss;
        ss.precision(6);
        ss << j.get<double>();
        return ss.str();
    }
    return j.dump();
}

inline bool is_scalar_array(const nlohmann::json& j) {
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

inline void render(const nlohmann::json& j, int depth, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() && !value.empty()) {
                out << pad << key << ":\n";
                render(value, depth + 1, out);
            } else if (value.is_array() && !value.empty() && !is_scalar_array(value)) {
                out << pad << key << ":\n";
                render(value, depth + 1, out);
            } else if (value.is_array()) {
                out << pad << key << ": ";
                bool first = true;
                for (const auto& e : value) {
                    out << (first ? "" : ", ") << scalar_text(e);
                    first = false;
                }
                out << '\n';
            } else {
                out << pad << key << ": " << scalar_text(value) << '\n';
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object()) {
                // one line per record keeps tables readable
                out << pad << "-";
                for (const auto& [key, value] : e.items())
                    out << ' ' << key << '=' << (value.is_structured() ? value.dump() : scalar_text(value));
                out << '\n';
            } else {
                out << pad << "- " << (e.is_structured() ? e.dump() : scalar_text(e)) << '\n';
            }
        }
    } else {
        out << pad << scalar_text(j) << '\n';
    }
}

} // namespace detail

inline void emit(const Report& r, bool as_json, std::ostream& out) {
    if (as_json) {
        out << to_json(r).dump(2) << '\n';
        return;
    }
    out << "command: " << r.command << '\n';
    if (!r.inputs.empty()) {
        out << "inputs:";
        for (const auto& i : r.inputs) out << ' ' << i;
        out << '\n';
    }
    detail::render(r.results, 0, out);
    if (!r.warnings.empty()) {
        out << "warnings:\n";
        for (const auto& w : r.warnings) out << "  - " << w << '\n';
    }
}

} // namespace lexigrid::cli

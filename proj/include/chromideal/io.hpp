/*
   Copyright 2026 The chromideal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHROMIDEAL_IO_HPP
#define CHROMIDEAL_IO_HPP

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "colorideal.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "poly_io.hpp"
#include "polynomial.hpp"

namespace chromideal::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

inline json parse_json(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string(what) + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Graphs: {"n": int, "edges": [[u, v], ...]}, 1-based

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.n()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_unsigned() || !j["edges"].is_array())
        throw input_error("graph JSON must look like {\"n\": int, \"edges\": [[u, v], ...]}");
    Graph g(j["n"].get<std::size_t>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw input_error("graph JSON edge must be a pair of integers");
        const auto u = e[0].get<long long>(), v = e[1].get<long long>();
        if (u < 1 || v < 1) throw input_error("graph JSON endpoints are 1-based");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

/// Reads a .col (DIMACS) or .json graph, chosen by extension.
inline Graph read_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr) {
    const auto text = read_file(path);
    if (ends_with(path, ".col")) return parse_dimacs(text, warnings);
    if (ends_with(path, ".json")) return graph_from_json(parse_json(text, path));
    throw input_error("cannot tell the graph format of '" + path + "' (expected .col or .json)");
}

// ---------------------------------------------------------------------------
// Polynomial lists

template <Field K>
json polys_to_json(const std::vector<Polynomial<K>>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(format_poly(p));
    return out;
}

template <Field K>
std::vector<Polynomial<K>> polys_from_json(const json& arr, std::size_t nvars, const K& field, MonomialOrder ord) {
    if (!arr.is_array()) throw input_error("expected a JSON list of polynomial strings");
    std::vector<Polynomial<K>> out;
    out.reserve(arr.size());
    for (const auto& s : arr) {
        if (!s.is_string()) throw input_error("polynomial entries must be strings");
        out.push_back(parse_poly(s.get<std::string>(), nvars, field, ord));
    }
    return out;
}

/// Largest variable index mentioned in a list of polynomial strings.
inline std::size_t max_variable_index(const json& arr) {
    std::size_t best = 0;
    for (const auto& s : arr) {
        if (!s.is_string()) continue;
        const auto& str = s.get_ref<const std::string&>();
        for (std::size_t i = 0; i < str.size(); ++i) {
            if (str[i] != 'x') continue;
            std::size_t j = i + 1, v = 0;
            while (j < str.size() && str[j] >= '0' && str[j] <= '9') v = v * 10 + static_cast<std::size_t>(str[j++] - '0');
            best = std::max(best, v);
        }
    }
    return best;
}

/// Generator files: {"nvars", "k", "field", "order", "generators": [...]}, or a bare list.
struct GeneratorFile {
    std::size_t nvars = 0;
    std::optional<std::uint32_t> k;
    std::optional<std::string> field;
    std::optional<std::string> order;
    json generators = json::array();
};

inline GeneratorFile generator_file_from_json(const json& j) {
    GeneratorFile f;
    if (j.is_array()) {
        f.generators = j;
        f.nvars = max_variable_index(j);
        return f;
    }
    if (!j.is_object() || !j.contains("generators")) throw input_error("generator file needs a \"generators\" list");
    f.generators = j["generators"];
    f.nvars = j.contains("nvars") ? j["nvars"].get<std::size_t>() : max_variable_index(f.generators);
    if (j.contains("k")) f.k = j["k"].get<std::uint32_t>();
    if (j.contains("field")) f.field = j["field"].get<std::string>();
    if (j.contains("order")) f.order = j["order"].get<std::string>();
    return f;
}

// ---------------------------------------------------------------------------
// Certificates
//
// Infeasibility: a JSON list of cofactor strings aligned with the generators.
// Coloring: {"k": int, "coloring": {"1": c1, "2": c2, ...}}.

inline json coloring_to_json(const Coloring& c) {
    json out = json::object();
    for (std::size_t v = 0; v < c.colors.size(); ++v) out[std::to_string(v + 1)] = c.colors[v];
    return out;
}

inline Coloring coloring_from_json(const json& j, std::size_t n) {
    if (!j.is_object()) throw input_error("coloring must be an object {vertex: color}");
    Coloring c;
    c.colors.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (const auto& [key, value] : j.items()) {
        std::size_t v = 0;
        try {
            v = std::stoul(key);
        } catch (const std::exception&) {
            throw input_error("coloring key '" + key + "' is not a vertex number");
        }
        if (v == 0 || v > n || !value.is_number_unsigned()) throw input_error("coloring entry '" + key + "' is out of range");
        c.colors[v - 1] = value.get<std::uint32_t>();
        seen[v - 1] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw input_error("coloring misses vertex " + std::to_string(v + 1));
    return c;
}

template <Field K>
json certificate_to_json(const Certificate<K>& cert) {
    if (const auto* col = std::get_if<ColoringCertificate>(&cert))
        return {{"k", col->k}, {"coloring", coloring_to_json(col->coloring)}};
    return polys_to_json(std::get<InfeasibilityCertificate<K>>(cert).cofactors);
}

template <Field K>
Certificate<K> certificate_from_json(const json& j, std::size_t nvars, const K& field, MonomialOrder ord) {
    if (j.is_array()) return InfeasibilityCertificate<K>{polys_from_json(j, nvars, field, ord)};
    if (j.is_object() && j.contains("coloring") && j.contains("k"))
        return ColoringCertificate{coloring_from_json(j["coloring"], nvars), j["k"].get<std::uint32_t>()};
    throw input_error("certificate must be a cofactor list or {\"k\", \"coloring\"}");
}

}  // namespace chromideal::io

#endif  // CHROMIDEAL_IO_HPP

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

#ifndef CHROMIDEAL_GRAPH_HPP
#define CHROMIDEAL_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace chromideal {

/// Undirected edge {u, v}, stored with u < v. Vertices are 1-based.
struct Edge {
    std::size_t u = 0, v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n: no loops, no parallel edges.
class Graph {
   public:
    explicit Graph(std::size_t n = 0) : adj_(n) {}

    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    /// Inserts {u, v}; a repeated edge is ignored. Returns whether it was new.
    bool add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw self_loop_error("self-loop at vertex " + std::to_string(u));
        if (u == 0 || v == 0 || u > n() || v > n())
            throw input_error("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} has an endpoint outside 1.." +
                              std::to_string(n()));
        if (u > v) std::swap(u, v);
        const Edge e{u, v};
        const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) return false;
        edges_.insert(it, e);
        adj_[u - 1].insert(std::lower_bound(adj_[u - 1].begin(), adj_[u - 1].end(), v), v);
        adj_[v - 1].insert(std::lower_bound(adj_[v - 1].begin(), adj_[v - 1].end(), u), u);
        return true;
    }

    std::size_t n() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in ascending (min, max) order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbours of v.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v - 1); }
    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

    bool adjacent(std::size_t u, std::size_t v) const {
        if (u == 0 || u > n() || v == 0 || v > n()) return false;
        const auto& a = adj_[u - 1];
        return std::binary_search(a.begin(), a.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n() == b.n() && a.edges_ == b.edges_; }

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// colors[v - 1] is the color index of vertex v.
struct Coloring {
    std::vector<std::uint32_t> colors;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Every edge joins two differently colored vertices and the size matches.
inline bool is_proper(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.n()) return false;
    return std::ranges::all_of(g.edges(), [&](const Edge& e) { return c.colors[e.u - 1] != c.colors[e.v - 1]; });
}

inline std::size_t colors_used(const Coloring& c) {
    auto sorted = c.colors;
    std::ranges::sort(sorted);
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// ---------------------------------------------------------------------------
// DIMACS .col

/**
 * Reads "c" comment lines, one "p edge <n> <m>" line, then "e <u> <v>" lines.
 * Duplicate edges are merged. The declared m is advisory; a mismatch with the
 * real count is reported through warnings.
 */
inline Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr) {
    std::optional<Graph> g;
    std::size_t declared_m = 0;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [&](const std::string& msg) { throw input_error("DIMACS line " + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (g) fail("second problem line");
            std::string format;
            long long n = -1, m = -1;
            if (!(ls >> format >> n >> m) || n < 0 || m < 0) fail("malformed problem line");
            if (format != "edge" && format != "col") fail("unsupported problem format '" + format + "'");
            g.emplace(static_cast<std::size_t>(n));
            declared_m = static_cast<std::size_t>(m);
        } else if (tag == "e") {
            if (!g) fail("edge before the problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g->n() || static_cast<std::size_t>(v) > g->n())
                fail("endpoint out of range");
            if (u == v) throw self_loop_error("DIMACS line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
            g->add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (!g) throw input_error("DIMACS input has no problem line");
    if (warnings && declared_m != g->edge_count())
        warnings->push_back("problem line declares " + std::to_string(declared_m) + " edges, found " +
                            std::to_string(g->edge_count()));
    return *g;
}

inline std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Generators

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw input_error("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

/// n rim vertices 1..n plus the hub n + 1.
inline Graph wheel_graph(std::size_t n) {
    if (n < 3) throw input_error("wheel needs at least 3 rim vertices");
    Graph g(n + 1);
    for (std::size_t v = 1; v <= n; ++v) {
        g.add_edge(v, v % n + 1);
        g.add_edge(v, n + 1);
    }
    return g;
}

/// Outer 5-cycle 1..5, inner pentagram 6..10, spokes v -- v + 5.
inline Graph petersen_graph() {
    Graph g(10);
    for (std::size_t v = 1; v <= 5; ++v) {
        g.add_edge(v, v % 5 + 1);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, (v + 1) % 5 + 6);
    }
    return g;
}

namespace detail {

/// Unbiased draw from [0, bound) that does not depend on the standard library's distributions.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<std::size_t>(x % b);
}

}  // namespace detail

/**
 * Random maximal planar graph by face insertion: start from the triangle
 * {1, 2, 3} (two triangular faces) and repeatedly drop vertex t into a
 * uniformly chosen face, joining it to the three corners. Always 3n - 6 edges.
 */
inline Graph maximal_planar_graph(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw input_error("maximal planar graph needs at least 3 vertices");
    Graph g(n);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    std::vector<std::array<std::size_t, 3>> faces{{1, 2, 3}, {1, 2, 3}};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 4; t <= n; ++t) {
        const std::size_t f = detail::uniform_index(rng, faces.size());
        const auto [a, b, c] = faces[f];
        g.add_edge(a, t);
        g.add_edge(b, t);
        g.add_edge(c, t);
        faces[f] = {a, b, t};
        faces.push_back({b, c, t});
        faces.push_back({a, c, t});
    }
    return g;
}

/**
 * Builds a graph from "family[:args]": complete:N, cycle:N, wheel:N, path:N,
 * empty:N, petersen, maximal_planar:N[:SEED]. The seed argument, when absent,
 * comes from default_seed.
 */
inline Graph generate(std::string_view spec, std::uint64_t default_seed = 0) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = spec.find(':', start);
        parts.emplace_back(spec.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    const std::string& family = parts[0];
    auto number = [&](std::size_t i) -> std::uint64_t {
        if (i >= parts.size()) throw input_error("generator '" + family + "' needs more arguments");
        const auto& s = parts[i];
        if (s.empty() || !std::ranges::all_of(s, [](char c) { return c >= '0' && c <= '9'; }))
            throw input_error("bad generator argument '" + s + "'");
        return std::stoull(s);
    };
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi) throw input_error("wrong argument count for generator '" + family + "'");
    };
    if (family == "complete") return arity(1, 1), complete_graph(number(1));
    if (family == "cycle") return arity(1, 1), cycle_graph(number(1));
    if (family == "wheel") return arity(1, 1), wheel_graph(number(1));
    if (family == "path") return arity(1, 1), path_graph(number(1));
    if (family == "empty") return arity(1, 1), empty_graph(number(1));
    if (family == "petersen") return arity(0, 0), petersen_graph();
    if (family == "maximal_planar") {
        arity(1, 2);
        return maximal_planar_graph(number(1), parts.size() > 2 ? number(2) : default_seed);
    }
    throw input_error("unknown graph family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Checks and the coloring oracle

struct EulerCheck {
    /// |E| <= 3n - 6. Necessary for planarity, not sufficient.
    bool within_bound = true;
    /// n < 3: the bound does not apply and within_bound is trivially true.
    bool trivial = false;
};

inline EulerCheck euler_bound_check(const Graph& g) {
    if (g.n() < 3) return {true, true};
    return {g.edge_count() <= 3 * g.n() - 6, false};
}

/**
 * Backtracking search over vertices 1..n, colors ascending, rejecting a color
 * as soon as an earlier neighbour holds it. Returns the lexicographically
 * first proper k-coloring, or nothing.
 */
inline std::optional<Coloring> brute_force_color(const Graph& g, std::uint32_t k) {
    const std::size_t n = g.n();
    if (n == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    std::vector<std::uint32_t> color(n, 0);
    std::vector<std::uint32_t> next(n, 0);  // next color to try at each depth
    std::size_t v = 0;
    while (true) {
        bool placed = false;
        while (next[v] < k) {
            const std::uint32_t c = next[v]++;
            const bool clash = std::ranges::any_of(g.neighbors(v + 1), [&](std::size_t u) { return u - 1 < v && color[u - 1] == c; });
            if (!clash) {
                color[v] = c;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (v + 1 == n) return Coloring{color};
            next[++v] = 0;
        } else {
            if (v == 0) return std::nullopt;
            --v;
        }
    }
}

}  // namespace chromideal

#endif  // CHROMIDEAL_GRAPH_HPP

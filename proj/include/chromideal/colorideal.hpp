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

#ifndef CHROMIDEAL_COLORIDEAL_HPP
#define CHROMIDEAL_COLORIDEAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "groebner.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace chromideal {

// ---------------------------------------------------------------------------
// Encoding

/// x_v^k - 1: x_v is a k-th root of unity.
template <Field K>
Polynomial<K> vertex_poly(const K& field, std::size_t nvars, std::size_t v, std::uint32_t k,
                          MonomialOrder ord = MonomialOrder::grevlex) {
    if (k == 0) throw input_error("color count must be at least 1");
    auto p = Polynomial<K>::term(field, field.one(), Monomial::variable(nvars, v, k), ord);
    return p - Polynomial<K>::one(field, nvars, ord);
}

/**
 * sum_{a+b=k-1} x_u^a x_v^b = (x_u^k - x_v^k) / (x_u - x_v). Vanishes at two
 * k-th roots of unity exactly when they differ.
 */
template <Field K>
Polynomial<K> edge_poly(const K& field, std::size_t nvars, std::size_t u, std::size_t v, std::uint32_t k,
                        MonomialOrder ord = MonomialOrder::grevlex) {
    if (u == v) throw self_loop_error("edge polynomial for a self-loop at vertex " + std::to_string(u));
    if (k == 0) throw input_error("color count must be at least 1");
    std::vector<Term<K>> terms;
    terms.reserve(k);
    for (std::uint32_t a = 0; a < k; ++a)
        terms.push_back({field.one(), Monomial::variable(nvars, u, k - 1 - a) * Monomial::variable(nvars, v, a)});
    return Polynomial<K>::from_terms(field, nvars, ord, std::move(terms));
}

/// Vertex polynomials for 1..n, then edge polynomials in ascending edge order.
template <Field K>
std::vector<Polynomial<K>> encode_graph(const Graph& g, std::uint32_t k, const K& field,
                                        MonomialOrder ord = MonomialOrder::grevlex) {
    std::vector<Polynomial<K>> gens;
    gens.reserve(g.n() + g.edge_count());
    for (std::size_t v = 1; v <= g.n(); ++v) gens.push_back(vertex_poly(field, g.n(), v, k, ord));
    for (const auto& e : g.edges()) gens.push_back(edge_poly(field, g.n(), e.u, e.v, k, ord));
    return gens;
}

/// The field element standing for color c: a k-th root of unity, distinct per color.
inline Residue color_root(const PrimeField& field, std::uint32_t k, std::uint32_t c) { return field.root_of_unity(k, c); }

inline mpq_class color_root(const RationalField&, std::uint32_t k, std::uint32_t c) {
    if (k == 1) return 1;
    if (k == 2) return c % 2 ? -1 : 1;
    throw unsupported_error("the rationals contain no primitive " + std::to_string(k) +
                            "-th root of unity; use a prime field with p = 1 mod k");
}

/// The default evaluation field for k colors: GF(p) for the smallest prime p = 1 (mod k).
inline PrimeField default_prime_field(std::uint32_t k) { return PrimeField(smallest_prime_one_mod(k)); }

// ---------------------------------------------------------------------------
// Instances and decisions

template <Field K>
struct ColoringInstance {
    Graph graph;
    std::uint32_t k = 4;
    K field;
    MonomialOrder order = MonomialOrder::grevlex;
    BuchbergerOptions budget{};

    ColoringInstance(Graph g, std::uint32_t colors, K f, MonomialOrder ord = MonomialOrder::grevlex,
                     BuchbergerOptions opts = {})
        : graph(std::move(g)), k(colors), field(std::move(f)), order(ord), budget(opts) {
        if (k == 0) throw input_error("color count must be at least 1");
        if constexpr (std::is_same_v<K, PrimeField>)
            if ((field.modulus() - 1) % k != 0)
                throw field_error("GF(" + std::to_string(field.modulus()) + ") lacks the " + std::to_string(k) +
                                  "-th roots of unity (need p = 1 mod k)");
    }

    std::vector<Polynomial<K>> generators() const { return encode_graph(graph, k, field, order); }
};

template <Field K>
struct Decision {
    bool colorable = false;
    GroebnerBasis<K> basis;
    BuchbergerStats stats;
};

namespace detail {

inline Polynomial<PrimeField> to_prime_field(const Polynomial<RationalField>& f, const PrimeField& target) {
    std::vector<Term<PrimeField>> terms;
    for (const auto& t : f.terms()) terms.push_back({target.lift(t.coeff), t.mono});
    return Polynomial<PrimeField>::from_terms(target, f.nvars(), f.order(), std::move(terms));
}

inline void accumulate(BuchbergerStats& total, const BuchbergerStats& s) {
    total.pairs_created += s.pairs_created;
    total.pairs_reduced += s.pairs_reduced;
    total.skipped_coprime += s.skipped_coprime;
    total.skipped_chain += s.skipped_chain;
    total.zero_reductions += s.zero_reductions;
    total.unit_found = total.unit_found || s.unit_found;
}

/**
 * Number of monomials outside the leading-monomial ideal of gb, or nothing
 * when some variable has no pure power among the leading monomials below
 * max_exponent or the count passes limit.
 */
template <Field K>
std::optional<std::size_t> count_standard_monomials(const GroebnerBasis<K>& gb, std::size_t nvars, exponent_t max_exponent,
                                                    std::size_t limit) {
    std::vector<Monomial> lms;
    for (const auto& f : gb.elements) lms.push_back(f.leading_monomial());
    auto divisible = [&](const Monomial& m) { return std::ranges::any_of(lms, [&](const Monomial& l) { return l.divides(m); }); };
    std::size_t count = 0;
    bool bounded = true;
    std::vector<exponent_t> e(nvars, 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (!bounded) return;
        if (i == nvars) {
            if (++count > limit) bounded = false;
            return;
        }
        for (exponent_t x = 0;; ++x) {
            if (x > max_exponent) {
                bounded = false;
                break;
            }
            e[i] = x;
            if (x > 0 && divisible(Monomial(std::span<const exponent_t>(e)))) break;
            self(self, i + 1);
            if (!bounded) break;
        }
        e[i] = 0;
    };
    if (nvars > 0 && divisible(Monomial(nvars))) return 0;
    walk(walk, 0);
    if (!bounded) return std::nullopt;
    return count;
}

/// Wang's rational reconstruction of a mod m: r/s with |r|, s <= sqrt(m/2), or nothing.
inline std::optional<mpq_class> reconstruct_rational(const mpz_class& a, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (abs(r1) > bound) {
        const mpz_class q = r0 / r1;
        mpz_class t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class out(r1, s1);
    out.canonicalize();
    return out;
}

/// A reduced basis over GF(p) kept as integer residues modulo the product of the primes used so far.
struct LiftedBasis {
    std::vector<std::vector<Monomial>> support;
    std::vector<std::vector<mpz_class>> residue;
    mpz_class modulus = 1;
};

inline bool same_shape(const LiftedBasis& lifted, const GroebnerBasis<PrimeField>& gb) {
    if (lifted.support.size() != gb.elements.size()) return false;
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        if (!(lifted.support[i].front() == gb.elements[i].leading_monomial())) return false;
    return true;
}

/// CRT step. Terms missing on either side count as zero there.
inline void combine(LiftedBasis& lifted, const GroebnerBasis<PrimeField>& gb, std::uint32_t p) {
    const mpz_class pz(p);
    mpz_class inv;
    const mpz_class mmod = lifted.modulus % pz;
    mpz_invert(inv.get_mpz_t(), mmod.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        const auto terms = gb.elements[i].terms();
        const auto& old_support = lifted.support[i];
        const auto& old_residue = lifted.residue[i];
        std::vector<Monomial> support;
        std::vector<mpz_class> residue;
        const auto ord = gb.order;
        std::size_t a = 0, b = 0;
        auto push = [&](const Monomial& m, const mpz_class& x, std::uint32_t r) {
            mpz_class delta = (mpz_class(r) - x) % pz;
            if (delta < 0) delta += pz;
            delta = delta * inv % pz;
            support.push_back(m);
            residue.push_back(x + lifted.modulus * delta);
        };
        while (a < old_support.size() || b < terms.size()) {
            if (b == terms.size() || (a < old_support.size() && compare(old_support[a], terms[b].mono, ord) > 0)) {
                push(old_support[a], old_residue[a], 0);
                ++a;
            } else if (a == old_support.size() || compare(old_support[a], terms[b].mono, ord) < 0) {
                push(terms[b].mono, 0, terms[b].coeff.value);
                ++b;
            } else {
                push(terms[b].mono, old_residue[a], terms[b].coeff.value);
                ++a;
                ++b;
            }
        }
        lifted.support[i] = std::move(support);
        lifted.residue[i] = std::move(residue);
    }
    lifted.modulus *= pz;
}

inline LiftedBasis start_lift(const GroebnerBasis<PrimeField>& gb) {
    LiftedBasis lifted;
    lifted.support.resize(gb.elements.size());
    lifted.residue.resize(gb.elements.size());
    return lifted;
}

inline std::optional<GroebnerBasis<RationalField>> reconstruct(const LiftedBasis& lifted, std::size_t nvars,
                                                               MonomialOrder ord) {
    const RationalField q;
    GroebnerBasis<RationalField> out{{}, ord, true};
    for (std::size_t i = 0; i < lifted.support.size(); ++i) {
        std::vector<Term<RationalField>> terms;
        for (std::size_t t = 0; t < lifted.support[i].size(); ++t) {
            auto c = reconstruct_rational(lifted.residue[i][t], lifted.modulus);
            if (!c) return std::nullopt;
            if (*c != 0) terms.push_back({std::move(*c), lifted.support[i][t]});
        }
        out.elements.push_back(Polynomial<RationalField>::from_terms(q, nvars, ord, std::move(terms)));
    }
    return out;
}

/**
 * The reduced basis of a coloring ideal over the rationals, assembled from
 * reduced bases over GF(p) for large primes p = 1 (mod k) and then checked
 * exactly: every generator reduces to zero (I is inside <G>), G is a reduced
 * Groebner basis, and G has as many standard monomials as the GF(p) basis.
 * The ideal contains x_v^k - 1 for every v, so it is radical over both fields
 * and both quotients have dimension equal to the number of proper colorings;
 * equal counts then force I = <G>. Returns nothing when the lift does not
 * settle within the prime budget or when every prime says {1}.
 */
inline std::optional<Decision<RationalField>> lift_rational_decision(const ColoringInstance<RationalField>& inst,
                                                                     const BuchbergerOptions& opts) {
    constexpr int max_primes = 24;
    const std::size_t n = inst.graph.n();
    const auto gens = inst.generators();
    Decision<RationalField> out;
    std::optional<LiftedBasis> lifted;
    std::optional<GroebnerBasis<RationalField>> previous;
    std::size_t standard = 0;
    std::uint64_t p = 0x7fffffffULL / inst.k * inst.k + 1;
    for (int used = 0; used < max_primes;) {
        do p -= inst.k;
        while (!is_prime(p));
        const PrimeField f(static_cast<std::uint32_t>(p));
        std::vector<Polynomial<PrimeField>> reduced_gens;
        reduced_gens.reserve(gens.size());
        for (const auto& g : gens) reduced_gens.push_back(to_prime_field(g, f));
        auto res = buchberger(reduced_gens, inst.order, opts);
        accumulate(out.stats, res.stats);
        ++used;
        if (is_trivial(res.basis)) return std::nullopt;
        const auto count = count_standard_monomials(res.basis, n, inst.k, std::numeric_limits<std::size_t>::max());
        if (!count) return std::nullopt;
        if (!lifted || !same_shape(*lifted, res.basis)) {
            lifted = start_lift(res.basis);
            previous.reset();
            standard = *count;
        }
        combine(*lifted, res.basis, f.modulus());
        auto candidate = reconstruct(*lifted, n, inst.order);
        if (!candidate) continue;
        const bool stable = previous && previous->elements == candidate->elements;
        previous = std::move(candidate);
        if (!stable) continue;
        const auto& g = *previous;
        if (!is_reduced(g) || !satisfies_groebner_criterion(g)) continue;
        if (!std::ranges::all_of(gens, [&](const auto& f0) { return is_member(f0, g); })) continue;
        const auto rational_count = count_standard_monomials(g, n, inst.k, standard);
        if (!rational_count || *rational_count != standard) continue;
        out.colorable = true;
        out.basis = g;
        return out;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Colorable iff the reduced Groebner basis of the coloring ideal is not {1}.
 * Over the rationals the basis of a colorable instance is lifted from prime
 * fields and verified exactly (see detail::lift_rational_decision); a
 * non-colorable instance is still settled by Buchberger over the rationals.
 */
template <Field K>
Decision<K> decide_colorable(const ColoringInstance<K>& inst) {
    if (inst.graph.n() == 0) {
        // No variables: the ideal is zero, the empty coloring is proper.
        return {true, {{}, inst.order, true}, {}};
    }
    auto opts = inst.budget;
    opts.track_cofactors = false;
    opts.reduce = true;
    if constexpr (std::is_same_v<K, RationalField>) {
        if (auto lifted = detail::lift_rational_decision(inst, opts)) return std::move(*lifted);
    }
    auto res = buchberger(inst.generators(), inst.order, opts);
    const bool trivial = is_trivial(res.basis);
    return {!trivial, std::move(res.basis), res.stats};
}

// ---------------------------------------------------------------------------
// Degeneracy peeling and greedy coloring

struct EliminationOrder {
    std::vector<std::size_t> order;
    /// Largest degree seen at removal time.
    std::size_t degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex (smallest index on ties).
inline EliminationOrder elimination_order(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    for (std::size_t v = 1; v <= n; ++v) deg[v - 1] = g.degree(v);
    EliminationOrder out;
    out.order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!removed[i] && (best == n || deg[i] < deg[best])) best = i;
        removed[best] = 1;
        out.order.push_back(best + 1);
        out.degeneracy = std::max(out.degeneracy, deg[best]);
        for (auto u : g.neighbors(best + 1))
            if (!removed[u - 1]) --deg[u - 1];
    }
    return out;
}

struct GreedyColoring {
    Coloring coloring;
    std::size_t colors_used = 0;
};

/// Colors vertices in reverse of order, each with the smallest index free among colored neighbours.
inline GreedyColoring greedy_color(const Graph& g, std::span<const std::size_t> order) {
    const std::size_t n = g.n();
    std::vector<char> seen(n, 0);
    if (order.size() != n) throw input_error("order is not a permutation of the vertices");
    for (auto v : order) {
        if (v == 0 || v > n || seen[v - 1]) throw input_error("order is not a permutation of the vertices");
        seen[v - 1] = 1;
    }
    constexpr auto uncolored = std::numeric_limits<std::uint32_t>::max();
    GreedyColoring out;
    out.coloring.colors.assign(n, uncolored);
    std::vector<char> taken;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        taken.assign(g.degree(*it) + 1, 0);
        for (auto u : g.neighbors(*it)) {
            const auto c = out.coloring.colors[u - 1];
            if (c != uncolored && c < taken.size()) taken[c] = 1;
        }
        std::uint32_t c = 0;
        while (taken[c]) ++c;
        out.coloring.colors[*it - 1] = c;
        out.colors_used = std::max<std::size_t>(out.colors_used, c + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extraction

/**
 * A proper k-coloring found by specialization: walk the vertices in
 * elimination order, and for each try colors in ascending index, adjoining
 * x_v - root(c) and keeping the first color for which the ideal stays proper.
 */
template <Field K>
Coloring extract_coloring(const ColoringInstance<K>& inst, Decision<K> decision) {
    const std::size_t n = inst.graph.n();
    if constexpr (std::is_same_v<K, RationalField>)
        if (inst.k > 2)
            throw unsupported_error("coloring extraction over the rationals needs k <= 2; use a prime field");
    if (!decision.colorable) throw infeasible_error("graph has no proper " + std::to_string(inst.k) + "-coloring");
    if (n == 0) return {};

    auto opts = inst.budget;
    opts.track_cofactors = false;
    opts.reduce = true;
    std::vector<Polynomial<K>> current = std::move(decision.basis.elements);
    Coloring out;
    out.colors.assign(n, 0);
    for (auto v : elimination_order(inst.graph).order) {
        bool fixed = false;
        for (std::uint32_t c = 0; c < inst.k && !fixed; ++c) {
            auto lin = Polynomial<K>::variable(inst.field, n, v, inst.order) -
                       Polynomial<K>::constant(inst.field, n, color_root(inst.field, inst.k, c), inst.order);
            auto trial = current;
            trial.push_back(std::move(lin));
            auto res = buchberger(trial, inst.order, opts);
            if (!is_trivial(res.basis)) {
                current = std::move(res.basis.elements);
                out.colors[v - 1] = c;
                fixed = true;
            }
        }
        if (!fixed) throw error("specialization found no admissible color for vertex " + std::to_string(v));
    }
    return out;
}

template <Field K>
Coloring extract_coloring(const ColoringInstance<K>& inst) {
    if constexpr (std::is_same_v<K, RationalField>)
        if (inst.k > 2)
            throw unsupported_error("coloring extraction over the rationals needs k <= 2; use a prime field");
    return extract_coloring(inst, decide_colorable(inst));
}

// ---------------------------------------------------------------------------
// Certificates

struct ColoringCertificate {
    Coloring coloring;
    std::uint32_t k = 4;
};

/// One cofactor per generator; sum(cofactors[i] * generators[i]) = 1.
template <Field K>
struct InfeasibilityCertificate {
    std::vector<Polynomial<K>> cofactors;
};

template <Field K>
using Certificate = std::variant<ColoringCertificate, InfeasibilityCertificate<K>>;

template <Field K>
InfeasibilityCertificate<K> infeasibility_certificate(const ColoringInstance<K>& inst) {
    if (inst.graph.n() == 0) throw no_certificate_error("the empty graph is colorable");
    const auto gens = inst.generators();
    auto opts = inst.budget;
    opts.track_cofactors = true;
    opts.reduce = true;
    auto res = buchberger(gens, inst.order, opts);
    if (!is_trivial(res.basis))
        throw no_certificate_error("graph is " + std::to_string(inst.k) + "-colorable; no infeasibility certificate exists");
    return {std::move(res.trace->rows.front())};
}

namespace detail {

template <Field K>
bool verify_coloring(std::span<const Polynomial<K>> generators, const ColoringCertificate& cert) {
    if (cert.k == 0) return false;
    const std::size_t n = generators.empty() ? cert.coloring.colors.size() : generators[0].nvars();
    if (cert.coloring.colors.size() != n) return false;
    for (auto c : cert.coloring.colors)
        if (c >= cert.k) return false;

    auto check = [&](const PrimeField& ev, auto&& convert) {
        std::vector<Residue> point;
        point.reserve(n);
        for (auto c : cert.coloring.colors) {
            const auto z = color_root(ev, cert.k, c);
            if (!ev.is_one(ev.pow(z, cert.k))) return false;
            point.push_back(z);
        }
        for (const auto& f : generators)
            if (f.nvars() != n || !ev.is_zero(convert(f).evaluate(point))) return false;
        return true;
    };
    if constexpr (std::is_same_v<K, PrimeField>) {
        if (generators.empty()) return true;
        const auto& ev = generators[0].field();
        if ((ev.modulus() - 1) % cert.k != 0) return false;
        for (const auto& f : generators)
            if (!(f.field() == ev)) return false;
        return check(ev, [](const Polynomial<PrimeField>& f) -> const Polynomial<PrimeField>& { return f; });
    } else {
        const auto ev = default_prime_field(cert.k);
        return check(ev, [&](const Polynomial<RationalField>& f) { return to_prime_field(f, ev); });
    }
}

}  // namespace detail

/**
 * Checks a certificate against a generator list without any Groebner work.
 * Infeasibility: expands sum(phi_i f_i) and compares with 1.
 * Coloring: maps colors to k-th roots of unity in GF(p) (the generators' own
 * prime field, or the smallest p = 1 mod k for rational generators) and checks
 * every generator vanishes there. Malformed certificates yield false.
 */
template <Field K>
bool verify_certificate(std::span<const Polynomial<K>> generators, const Certificate<K>& cert) {
    try {
        if (const auto* col = std::get_if<ColoringCertificate>(&cert)) return detail::verify_coloring(generators, *col);
        const auto& inf = std::get<InfeasibilityCertificate<K>>(cert);
        if (generators.empty() || inf.cofactors.size() != generators.size()) return false;
        const auto sum = expand_combination(generators, std::span<const Polynomial<K>>(inf.cofactors));
        return sum == Polynomial<K>::one(generators[0].field(), generators[0].nvars(), generators[0].order());
    } catch (const error&) {
        return false;
    }
}

template <Field K>
bool verify_certificate(const std::vector<Polynomial<K>>& generators, const Certificate<K>& cert) {
    return verify_certificate(std::span<const Polynomial<K>>(generators), cert);
}

}  // namespace chromideal

#endif  // CHROMIDEAL_COLORIDEAL_HPP

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

#ifndef CHROMIDEAL_GROEBNER_HPP
#define CHROMIDEAL_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace chromideal {

template <Field K>
struct GroebnerBasis {
    std::vector<Polynomial<K>> elements;
    MonomialOrder order = MonomialOrder::grevlex;
    bool reduced = false;
};

/// rows[i][j] is the multiplier of original generator j in basis element i.
template <Field K>
struct CofactorTrace {
    std::vector<std::vector<Polynomial<K>>> rows;
};

template <Field K>
struct DivisionResult {
    Polynomial<K> remainder;
    std::vector<Polynomial<K>> quotients;
};

struct BuchbergerOptions {
    bool track_cofactors = false;
    /// Reduce the result before returning it.
    bool reduce = true;
    std::size_t max_pairs = 5'000'000;
    std::size_t max_terms = 50'000'000;
};

struct BuchbergerStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t skipped_coprime = 0;
    std::size_t skipped_chain = 0;
    std::size_t zero_reductions = 0;
    bool unit_found = false;
};

template <Field K>
struct BuchbergerResult {
    GroebnerBasis<K> basis;
    std::optional<CofactorTrace<K>> trace;
    BuchbergerStats stats;
};

namespace detail {

/**
 * The dividend of a running division: a max-heap of indices into a term pool.
 * Terms with equal monomials are summed when they reach the top, so each
 * reduction step costs O(|g| log size) instead of a full merge.
 */
template <Field K>
class Dividend {
   public:
    using element = typename K::element;

    explicit Dividend(const Polynomial<K>& f) : field_(f.field()), ord_(f.order()) {
        pool_.reserve(f.size() * 4);
        for (const auto& t : f.terms()) push(t.coeff, t.mono);
    }

    /// Brings the largest surviving term to the front; false once exhausted.
    bool settle() {
        while (!heap_.empty()) {
            const std::uint32_t top = pop_index();
            Term<K>& t = pool_[top];
            while (!heap_.empty() && pool_[heap_.front()].mono == t.mono) t.coeff = field_.add(t.coeff, pool_[pop_index()].coeff);
            if (!field_.is_zero(t.coeff)) {
                lead_ = top;
                return true;
            }
        }
        return false;
    }

    /// Valid after settle() returned true.
    Term<K>& lead() { return pool_[lead_]; }

    /// dividend -= c * m * g, where c * m * LT(g) cancels the current lead.
    void cancel_lead(const element& c, const Monomial& m, const Polynomial<K>& g) {
        const auto gt = g.terms();
        const element negc = field_.neg(c);
        for (std::size_t k = 1; k < gt.size(); ++k) push(field_.mul(negc, gt[k].coeff), gt[k].mono * m);
    }

   private:
    bool less(std::uint32_t a, std::uint32_t b) const { return compare(pool_[a].mono, pool_[b].mono, ord_) < 0; }

    void push(element c, Monomial m) {
        pool_.push_back({std::move(c), std::move(m)});
        heap_.push_back(static_cast<std::uint32_t>(pool_.size() - 1));
        std::push_heap(heap_.begin(), heap_.end(), [this](std::uint32_t a, std::uint32_t b) { return less(a, b); });
    }

    std::uint32_t pop_index() {
        std::pop_heap(heap_.begin(), heap_.end(), [this](std::uint32_t a, std::uint32_t b) { return less(a, b); });
        const auto i = heap_.back();
        heap_.pop_back();
        return i;
    }

    K field_;
    MonomialOrder ord_;
    std::vector<Term<K>> pool_;
    std::vector<std::uint32_t> heap_;
    std::uint32_t lead_ = 0;
};

template <Field K>
void check_divisors(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
    for (const auto& d : divisors) {
        if (d.is_zero()) throw input_error("zero polynomial in divisor list");
        if (d.nvars() != f.nvars()) throw dimension_error("divisor variable count mismatch");
        if (!(d.field() == f.field())) throw field_error("divisor field mismatch");
    }
}

/**
 * Multivariate division of f by divisors, all already sorted under f's order.
 * Each step reduces the lead by the first divisor whose leading monomial
 * divides it; a lead that no divisor divides moves to the remainder.
 */
template <Field K>
DivisionResult<K> divide(const Polynomial<K>& f, std::span<const Polynomial<K>* const> divisors, bool want_quotients,
                         bool full = true) {
    const K& field = f.field();
    const auto ord = f.order();
    DivisionResult<K> res{Polynomial<K>(field, f.nvars(), ord), {}};
    if (want_quotients) res.quotients.assign(divisors.size(), Polynomial<K>(field, f.nvars(), ord));
    std::vector<typename K::element> inv_lc;
    inv_lc.reserve(divisors.size());
    for (const auto* d : divisors) inv_lc.push_back(field.inv(d->leading_coeff()));

    Dividend<K> p(f);
    bool reducing = true;
    while (p.settle()) {
        auto& lt = p.lead();
        std::size_t i = 0;
        if (reducing)
            while (i < divisors.size() && !divisors[i]->leading_monomial().divides(lt.mono)) ++i;
        if (!reducing || i == divisors.size()) {
            res.remainder.append_term(std::move(lt.coeff), std::move(lt.mono));
            reducing = full;
            continue;
        }
        const auto c = field.mul(lt.coeff, inv_lc[i]);
        const Monomial m = lt.mono / divisors[i]->leading_monomial();
        if (want_quotients) res.quotients[i].append_term(c, m);
        p.cancel_lead(c, m, *divisors[i]);
    }
    return res;
}

template <Field K>
std::vector<const Polynomial<K>*> pointers(std::span<const Polynomial<K>> ps) {
    std::vector<const Polynomial<K>*> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(&p);
    return out;
}

}  // namespace detail

/**
 * Divides f by the divisor list under ord. Postcondition:
 * f = sum(quotients[i] * divisors[i]) + remainder, and no remainder term is
 * divisible by any divisor's leading monomial.
 */
template <Field K>
DivisionResult<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors, MonomialOrder ord) {
    detail::check_divisors(f, divisors);
    std::vector<Polynomial<K>> sorted;
    sorted.reserve(divisors.size());
    for (const auto& d : divisors) sorted.push_back(d.reorder(ord));
    const auto ptrs = detail::pointers(std::span<const Polynomial<K>>(sorted));
    return detail::divide(f.reorder(ord), std::span<const Polynomial<K>* const>(ptrs), true);
}

template <Field K>
DivisionResult<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors, MonomialOrder ord) {
    return normal_form(f, std::span<const Polynomial<K>>(divisors), ord);
}

/// (lcm / LT(f)) f - (lcm / LT(g)) g, with lcm taken over the leading monomials.
template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, MonomialOrder ord) {
    if (f.is_zero() || g.is_zero()) throw empty_polynomial_error("S-polynomial of the zero polynomial");
    const auto fo = f.reorder(ord), go = g.reorder(ord);
    const K& field = fo.field();
    const Monomial l = lcm(fo.leading_monomial(), go.leading_monomial());
    auto s = fo.mul_term(field.inv(fo.leading_coeff()), l / fo.leading_monomial());
    s.sub_mul_term(field.inv(go.leading_coeff()), l / go.leading_monomial(), go);
    return s;
}

template <Field K>
bool is_trivial(const GroebnerBasis<K>& gb) {
    return gb.elements.size() == 1 && gb.elements.front().is_constant() && !gb.elements.front().is_zero();
}

template <Field K>
bool is_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    if (f.is_zero()) return true;
    if (gb.elements.empty()) return false;
    return normal_form(f, gb.elements, gb.order).remainder.is_zero();
}

/// Every S-polynomial of every pair reduces to zero modulo the basis.
template <Field K>
bool satisfies_groebner_criterion(const GroebnerBasis<K>& gb) {
    const auto& g = gb.elements;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!normal_form(s_polynomial(g[i], g[j], gb.order), g, gb.order).remainder.is_zero()) return false;
    return true;
}

/// Monic, no term of any element divisible by another element's leading monomial.
template <Field K>
bool is_reduced(const GroebnerBasis<K>& gb) {
    const auto& g = gb.elements;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero() || !g[i].field().is_one(g[i].leading_coeff())) return false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : g[i].terms())
                if (g[j].leading_monomial().divides(t.mono)) return false;
        }
    }
    return true;
}

namespace detail {

/// row_a * a - sum(q_i * rows[i]), the cofactor update for h = a - sum(q_i g_i).
template <Field K>
std::vector<Polynomial<K>> combine_rows(const std::vector<Polynomial<K>>& start,
                                        std::span<const Polynomial<K>> quotients,
                                        std::span<const std::vector<Polynomial<K>>> rows,
                                        std::span<const std::size_t> row_index) {
    auto out = start;
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (quotients[i].is_zero()) continue;
        const auto& row = rows[row_index[i]];
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!row[j].is_zero()) out[j] -= quotients[i] * row[j];
    }
    return out;
}

template <Field K>
std::vector<Polynomial<K>> scale_row(std::vector<Polynomial<K>> row, const typename K::element& c) {
    for (auto& p : row) p = p.scale(c);
    return row;
}

}  // namespace detail

/**
 * Turns a Groebner basis into the reduced one: monic, inter-reduced, sorted by
 * descending leading monomial. Each element is replaced by its normal form
 * modulo the others (dropped when that is zero) until nothing changes, so the
 * ideal is preserved even for inputs that are not yet minimal. When trace is
 * given, its rows are rewritten to describe the new elements.
 */
template <Field K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& gb, CofactorTrace<K>* trace = nullptr) {
    const auto ord = gb.order;
    std::vector<Polynomial<K>> g;
    std::vector<std::vector<Polynomial<K>>> rows;
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        if (gb.elements[i].is_zero()) continue;
        const auto p = gb.elements[i].reorder(ord);
        const auto inv = p.field().inv(p.leading_coeff());
        g.push_back(p.scale(inv));
        if (trace) rows.push_back(detail::scale_row(trace->rows.at(i), inv));
    }

    auto by_leading = [&](std::vector<std::size_t>& idx, bool ascending) {
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const auto c = compare(g[a].leading_monomial(), g[b].leading_monomial(), ord);
            return ascending ? c < 0 : c > 0;
        });
    };

    std::vector<char> alive(g.size(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (alive[i]) idx.push_back(i);
        by_leading(idx, true);
        for (auto i : idx) {
            std::vector<const Polynomial<K>*> others;
            std::vector<std::size_t> other_rows;
            for (auto j : idx)
                if (j != i && alive[j]) {
                    others.push_back(&g[j]);
                    other_rows.push_back(j);
                }
            auto div = detail::divide(g[i], std::span<const Polynomial<K>* const>(others), trace != nullptr);
            if (div.remainder == g[i]) continue;
            changed = true;
            if (div.remainder.is_zero()) {
                alive[i] = 0;
                continue;
            }
            const auto inv = div.remainder.field().inv(div.remainder.leading_coeff());
            if (trace)
                rows[i] = detail::scale_row(
                    detail::combine_rows(rows[i], std::span<const Polynomial<K>>(div.quotients),
                                         std::span<const std::vector<Polynomial<K>>>(rows),
                                         std::span<const std::size_t>(other_rows)),
                    inv);
            g[i] = div.remainder.scale(inv);
        }
    }

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (alive[i]) idx.push_back(i);
    by_leading(idx, false);
    GroebnerBasis<K> out{{}, ord, true};
    CofactorTrace<K> out_trace;
    for (auto i : idx) {
        out.elements.push_back(std::move(g[i]));
        if (trace) out_trace.rows.push_back(std::move(rows[i]));
    }
    if (trace) *trace = std::move(out_trace);
    return out;
}

/**
 * Buchberger's algorithm.
 *
 * Pairs are taken by the normal strategy: smallest total degree of the lcm
 * first, ties to the lexicographically smallest index pair. New pairs pass
 * through the Gebauer-Moeller update, which applies the coprime-lcm criterion
 * and the chain criterion (a pair whose lcm is a proper multiple of a third
 * element's leading monomial, with both partner lcms different, is dropped).
 * Elements whose leading monomial becomes divisible by a newer one leave the
 * active set used for reduction and pairing. A nonzero constant remainder
 * ends the run at once with the basis {1}.
 *
 * Throws budget_exceeded when the pair or stored-term cap is hit.
 */
template <Field K>
BuchbergerResult<K> buchberger(std::span<const Polynomial<K>> generators, MonomialOrder ord,
                               const BuchbergerOptions& opts = {}) {
    std::optional<K> field;
    std::size_t nvars = 0;
    for (const auto& f : generators) {
        if (f.is_zero()) continue;
        if (!field) {
            field = f.field();
            nvars = f.nvars();
        } else if (f.nvars() != nvars) {
            throw dimension_error("generator variable count mismatch");
        } else if (!(f.field() == *field)) {
            throw field_error("generator field mismatch");
        }
    }
    if (!field) throw input_error("no nonzero generators");

    const bool tracked = opts.track_cofactors;
    const std::size_t m = generators.size();
    const Polynomial<K> zero(*field, nvars, ord);

    BuchbergerResult<K> result;
    auto& stats = result.stats;
    std::vector<Polynomial<K>> g;                   // every element ever added
    std::vector<std::vector<Polynomial<K>>> rows;   // cofactor rows, parallel to g
    std::vector<Monomial> lms;
    std::vector<std::size_t> active;                // indices into g, ascending
    std::vector<const Polynomial<K>*> reducers;     // &g[active[..]], rebuilt after each update
    std::size_t stored_terms = 0;

    auto finish_with_unit = [&](const std::vector<Polynomial<K>>& row, const typename K::element& c) {
        stats.unit_found = true;
        result.basis = {{Polynomial<K>::one(*field, nvars, ord)}, ord, true};
        if (tracked) result.trace = CofactorTrace<K>{{detail::scale_row(row, field->inv(c))}};
        return result;
    };

    struct Pair {
        exponent_t degree;
        std::size_t i, j;
        auto operator<=>(const Pair&) const = default;
    };
    std::set<Pair> queue;

    // Gebauer-Moeller update for the new element t.
    auto update = [&](std::size_t t) {
        const Monomial& lt = lms[t];
        struct Candidate {
            std::size_t i;
            Monomial l;
            bool coprime;
            bool keep = true;
        };
        std::vector<Candidate> cand;
        cand.reserve(active.size());
        for (auto i : active) cand.push_back({i, lcm(lms[i], lt), coprime(lms[i], lt)});
        stats.pairs_created += cand.size();

        // Chain criterion among the new pairs: drop (i, t) when another new
        // pair's lcm divides its lcm. Coprime pairs are kept here so they can
        // still knock out others; equal lcms keep the first.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (cand[a].coprime) continue;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || !cand[b].keep) continue;
                if (cand[b].l.divides(cand[a].l) && (!(cand[b].l == cand[a].l) || b < a || cand[b].coprime)) {
                    cand[a].keep = false;
                    ++stats.skipped_chain;
                    break;
                }
            }
        }
        // Among survivors with the same lcm, one coprime member means all can go.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!cand[a].keep) continue;
            if (cand[a].coprime) {
                cand[a].keep = false;
                ++stats.skipped_coprime;
            }
        }

        // Chain criterion on old pairs.
        for (auto it = queue.begin(); it != queue.end();) {
            const Monomial l = lcm(lms[it->i], lms[it->j]);
            if (lt.divides(l) && !(lcm(lms[it->i], lt) == l) && !(lcm(lms[it->j], lt) == l)) {
                it = queue.erase(it);
                ++stats.skipped_chain;
            } else {
                ++it;
            }
        }
        for (const auto& c : cand)
            if (c.keep) queue.insert({c.l.degree(), c.i, t});

        std::vector<std::size_t> still;
        still.reserve(active.size() + 1);
        for (auto i : active)
            if (!lt.divides(lms[i])) still.push_back(i);
        still.push_back(t);
        active = std::move(still);
        reducers.clear();
        for (auto i : active) reducers.push_back(&g[i]);
    };

    auto add_element = [&](Polynomial<K> h, std::vector<Polynomial<K>> row) {
        stored_terms += h.size();
        if (stored_terms > opts.max_terms)
            throw budget_exceeded("term budget of " + std::to_string(opts.max_terms) + " exceeded");
        lms.push_back(h.leading_monomial());
        g.push_back(std::move(h));
        if (tracked) rows.push_back(std::move(row));
        update(g.size() - 1);
    };

    for (std::size_t k = 0; k < m; ++k) {
        if (generators[k].is_zero()) continue;
        auto f = generators[k].reorder(ord);
        std::vector<Polynomial<K>> row;
        if (tracked) {
            row.assign(m, zero);
            row[k] = Polynomial<K>::one(*field, nvars, ord);
        }
        const auto lc = f.leading_coeff();
        if (f.is_constant()) return finish_with_unit(row, lc);
        const auto inv = field->inv(lc);
        add_element(f.scale(inv), tracked ? detail::scale_row(std::move(row), inv) : std::move(row));
    }

    while (!queue.empty()) {
        const Pair pr = *queue.begin();
        queue.erase(queue.begin());

        if (++stats.pairs_reduced > opts.max_pairs)
            throw budget_exceeded("pair budget of " + std::to_string(opts.max_pairs) + " exceeded");

        const Monomial l = lcm(lms[pr.i], lms[pr.j]);
        const Monomial ui = l / lms[pr.i], uj = l / lms[pr.j];
        auto s = g[pr.i].mul_term(field->one(), ui);
        s.sub_mul_term(field->one(), uj, g[pr.j]);
        // Top reduction only: tails are cleaned up by the final inter-reduction,
        // and skipping them here keeps rational coefficients from swelling.
        auto div = detail::divide(s, std::span<const Polynomial<K>* const>(reducers), tracked, false);
        if (div.remainder.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }

        std::vector<Polynomial<K>> row;
        if (tracked) {
            // s = ui g_i - uj g_j, so its row is ui row_i - uj row_j.
            row.reserve(m);
            for (std::size_t c = 0; c < m; ++c) {
                auto r = rows[pr.i][c].mul_term(field->one(), ui);
                r.sub_mul_term(field->one(), uj, rows[pr.j][c]);
                row.push_back(std::move(r));
            }
            row = detail::combine_rows(row, std::span<const Polynomial<K>>(div.quotients),
                                       std::span<const std::vector<Polynomial<K>>>(rows),
                                       std::span<const std::size_t>(active));
        }
        const auto lc = div.remainder.leading_coeff();
        if (div.remainder.is_constant()) return finish_with_unit(row, lc);
        const auto inv = field->inv(lc);
        add_element(div.remainder.scale(inv), tracked ? detail::scale_row(std::move(row), inv) : std::move(row));
    }

    result.basis.order = ord;
    for (auto i : active) result.basis.elements.push_back(g[i]);
    if (tracked) {
        result.trace.emplace();
        for (auto i : active) result.trace->rows.push_back(rows[i]);
    }
    if (opts.reduce) result.basis = reduce_basis(result.basis, tracked ? &*result.trace : nullptr);
    return result;
}

template <Field K>
BuchbergerResult<K> buchberger(const std::vector<Polynomial<K>>& generators, MonomialOrder ord,
                               const BuchbergerOptions& opts = {}) {
    return buchberger(std::span<const Polynomial<K>>(generators), ord, opts);
}

/// Expands sum(row[j] * generators[j]).
template <Field K>
Polynomial<K> expand_combination(std::span<const Polynomial<K>> generators, std::span<const Polynomial<K>> row) {
    if (generators.empty() || row.size() != generators.size()) throw input_error("cofactor row does not match generators");
    Polynomial<K> sum(generators[0].field(), generators[0].nvars(), generators[0].order());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero() && !generators[j].is_zero()) sum += row[j] * generators[j];
    return sum;
}

}  // namespace chromideal

#endif  // CHROMIDEAL_GROEBNER_HPP

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

#ifndef CHROMIDEAL_POLYNOMIAL_HPP
#define CHROMIDEAL_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace chromideal {

template <Field K>
struct Term {
    typename K::element coeff;
    Monomial mono;
};

/**
 * A multivariate polynomial over K in nvars variables.
 *
 * Terms are kept strictly descending under the polynomial's monomial order,
 * with no zero coefficients and no repeated monomials; the zero polynomial has
 * no terms. Every operation returns a polynomial in this canonical form.
 */
template <Field K>
class Polynomial {
   public:
    using field_type = K;
    using element = typename K::element;
    using term_type = Term<K>;

    Polynomial(K field, std::size_t nvars, MonomialOrder ord = MonomialOrder::grevlex)
        : field_(std::move(field)), nvars_(nvars), order_(ord) {}

    /// Builds a canonical polynomial from arbitrary terms (any order, repeats and zeros allowed).
    static Polynomial from_terms(K field, std::size_t nvars, MonomialOrder ord, std::vector<term_type> terms) {
        Polynomial p(std::move(field), nvars, ord);
        for (const auto& t : terms)
            if (t.mono.nvars() != nvars) throw dimension_error("term has the wrong variable count");
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    static Polynomial constant(K field, std::size_t nvars, element c, MonomialOrder ord = MonomialOrder::grevlex) {
        Polynomial p(field, nvars, ord);
        if (!field.is_zero(c)) p.terms_.push_back({std::move(c), Monomial(nvars)});
        return p;
    }

    static Polynomial one(K field, std::size_t nvars, MonomialOrder ord = MonomialOrder::grevlex) {
        auto c = field.one();
        return constant(std::move(field), nvars, std::move(c), ord);
    }

    /// c * m.
    static Polynomial term(K field, element c, Monomial m, MonomialOrder ord = MonomialOrder::grevlex) {
        Polynomial p(field, m.nvars(), ord);
        if (!field.is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    /// x_index (1-based).
    static Polynomial variable(K field, std::size_t nvars, std::size_t index, MonomialOrder ord = MonomialOrder::grevlex) {
        auto c = field.one();
        return term(std::move(field), std::move(c), Monomial::variable(nvars, index), ord);
    }

    const K& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    MonomialOrder order() const noexcept { return order_; }
    std::span<const term_type> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const term_type& leading_term() const {
        if (terms_.empty()) throw empty_polynomial_error("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const element& leading_coeff() const { return leading_term().coeff; }

    exponent_t total_degree() const {
        exponent_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    /// The same polynomial with its terms sorted under ord.
    Polynomial reorder(MonomialOrder ord) const {
        Polynomial p = *this;
        if (ord != order_) {
            p.order_ = ord;
            p.sort_terms();
        }
        return p;
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff = field_.neg(t.coeff);
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_, a.order_);
        const Polynomial& rhs = b.order_ == a.order_ ? b : b.reorder(a.order_);
        std::vector<term_type> prod;
        prod.reserve(a.size() * rhs.size());
        for (const auto& s : a.terms_)
            for (const auto& t : rhs.terms_) prod.push_back({a.field_.mul(s.coeff, t.coeff), s.mono * t.mono});
        Polynomial r(a.field_, a.nvars_, a.order_);
        r.terms_ = std::move(prod);
        r.canonicalize();
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    /// c * f.
    Polynomial scale(const element& c) const {
        if (field_.is_zero(c)) return Polynomial(field_, nvars_, order_);
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff = field_.mul(t.coeff, c);
        return p;
    }

    /// c * m * f. Monomial orders are multiplicative, so no re-sort is needed.
    Polynomial mul_term(const element& c, const Monomial& m) const {
        if (field_.is_zero(c)) return Polynomial(field_, nvars_, order_);
        Polynomial p(field_, nvars_, order_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({field_.mul(t.coeff, c), t.mono * m});
        return p;
    }

    /// this -= c * m * g, merging in one pass.
    void sub_mul_term(const element& c, const Monomial& m, const Polynomial& g) {
        check_compatible(g);
        if (field_.is_zero(c) || g.is_zero()) return;
        if (g.order_ != order_) {
            sub_mul_term(c, m, g.reorder(order_));
            return;
        }
        const element negc = field_.neg(c);
        std::vector<term_type> out;
        out.reserve(terms_.size() + g.terms_.size());
        auto it = terms_.begin();
        const auto end = terms_.end();
        for (const auto& gt : g.terms_) {
            Monomial pm = gt.mono * m;
            while (it != end && compare(it->mono, pm, order_) > 0) out.push_back(std::move(*it++));
            if (it != end && it->mono == pm) {
                element s = field_.add(it->coeff, field_.mul(negc, gt.coeff));
                if (!field_.is_zero(s)) out.push_back({std::move(s), std::move(pm)});
                ++it;
            } else {
                out.push_back({field_.mul(negc, gt.coeff), std::move(pm)});
            }
        }
        while (it != end) out.push_back(std::move(*it++));
        terms_ = std::move(out);
    }

    /// Divides through by the leading coefficient. The zero polynomial stays zero.
    Polynomial monic() const {
        if (is_zero()) return *this;
        return scale(field_.inv(leading_coeff()));
    }

    /// Appends a term below the current last one. Zero coefficients are dropped.
    void append_term(element c, Monomial m) {
        if (field_.is_zero(c)) return;
        if (m.nvars() != nvars_) throw dimension_error("term has the wrong variable count");
        if (!terms_.empty() && compare(terms_.back().mono, m, order_) <= 0)
            throw input_error("append_term would break the descending term order");
        terms_.push_back({std::move(c), std::move(m)});
    }

    /// Drops the leading term.
    void pop_leading() {
        if (terms_.empty()) throw empty_polynomial_error("pop from the zero polynomial");
        terms_.erase(terms_.begin());
    }

    /// Value at the point (x_1, ..., x_n) = point.
    element evaluate(std::span<const element> point) const {
        if (point.size() != nvars_) throw dimension_error("evaluation point has the wrong dimension");
        element sum = field_.zero();
        for (const auto& t : terms_) {
            element v = t.coeff;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (exponent_t e = 0; e < t.mono[i]; ++e) v = field_.mul(v, point[i]);
            sum = field_.add(sum, v);
        }
        return sum;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_) || a.size() != b.size()) return false;
        const Polynomial& rhs = b.order_ == a.order_ ? b : b.reorder(a.order_);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a.terms_[i].mono == rhs.terms_[i].mono) || !a.field_.equal(a.terms_[i].coeff, rhs.terms_[i].coeff))
                return false;
        return true;
    }

    /// Canonical-form check; used by tests and by certificate loading.
    bool is_canonical() const {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (field_.is_zero(terms_[i].coeff) || terms_[i].mono.nvars() != nvars_) return false;
            if (i > 0 && compare(terms_[i - 1].mono, terms_[i].mono, order_) <= 0) return false;
        }
        return true;
    }

   private:
    void check_compatible(const Polynomial& b) const {
        if (nvars_ != b.nvars_)
            throw dimension_error("variable count mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(b.nvars_));
        if (!(field_ == b.field_)) throw field_error("field mismatch: " + field_.name() + " vs " + b.field_.name());
    }

    Polynomial combine(const Polynomial& b, bool subtract) const {
        check_compatible(b);
        const Polynomial& rhs = b.order_ == order_ ? b : b.reorder(order_);
        Polynomial r(field_, nvars_, order_);
        r.terms_.reserve(size() + rhs.size());
        auto i = terms_.begin(), j = rhs.terms_.begin();
        while (i != terms_.end() || j != rhs.terms_.end()) {
            const auto c = i == terms_.end()       ? std::strong_ordering::less
                           : j == rhs.terms_.end() ? std::strong_ordering::greater
                                                   : compare(i->mono, j->mono, order_);
            if (c > 0) {
                r.terms_.push_back(*i++);
            } else if (c < 0) {
                r.terms_.push_back({subtract ? field_.neg(j->coeff) : j->coeff, j->mono});
                ++j;
            } else {
                auto s = subtract ? field_.sub(i->coeff, j->coeff) : field_.add(i->coeff, j->coeff);
                if (!field_.is_zero(s)) r.terms_.push_back({std::move(s), i->mono});
                ++i, ++j;
            }
        }
        return r;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [ord = order_](const term_type& a, const term_type& b) { return compare(a.mono, b.mono, ord) > 0; });
    }

    void canonicalize() {
        sort_terms();
        std::vector<term_type> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = field_.add(out.back().coeff, t.coeff);
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [this](const term_type& t) { return field_.is_zero(t.coeff); });
        terms_ = std::move(out);
    }

    K field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<term_type> terms_;
};

/// The maximal term of f under ord, which need not be f's own order.
template <Field K>
Term<K> leading_term(const Polynomial<K>& f, MonomialOrder ord) {
    if (f.is_zero()) throw empty_polynomial_error("leading term of the zero polynomial");
    if (ord == f.order()) return f.terms().front();
    const auto ts = f.terms();
    return *std::max_element(ts.begin(), ts.end(),
                             [ord](const Term<K>& a, const Term<K>& b) { return compare(a.mono, b.mono, ord) < 0; });
}

}  // namespace chromideal

#endif  // CHROMIDEAL_POLYNOMIAL_HPP

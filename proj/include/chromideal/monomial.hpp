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

#ifndef CHROMIDEAL_MONOMIAL_HPP
#define CHROMIDEAL_MONOMIAL_HPP

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace chromideal {

/// Variable 1 is the greatest variable under every order.
enum class MonomialOrder { lex, grlex, grevlex };

inline std::string_view to_string(MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::lex: return "lex";
        case MonomialOrder::grlex: return "grlex";
        case MonomialOrder::grevlex: return "grevlex";
    }
    return "?";
}

inline MonomialOrder parse_order(std::string_view s) {
    if (s == "lex") return MonomialOrder::lex;
    if (s == "grlex") return MonomialOrder::grlex;
    if (s == "grevlex") return MonomialOrder::grevlex;
    throw input_error("unknown monomial order '" + std::string(s) + "'");
}

using exponent_t = std::uint32_t;

/// Dense exponent vector over a fixed number of variables, with its total degree cached.
class Monomial {
   public:
    using storage = boost::container::small_vector<exponent_t, 12>;

    Monomial() = default;

    /// The monomial 1 in nvars variables.
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    Monomial(std::initializer_list<exponent_t> exps) : Monomial(std::span<const exponent_t>(exps.begin(), exps.size())) {}

    explicit Monomial(std::span<const exponent_t> exps) : exps_(exps.begin(), exps.end()) {
        for (auto e : exps_) degree_ = checked_add(degree_, e);
        refresh_support();
    }

    /// x_index (1-based) in nvars variables.
    static Monomial variable(std::size_t nvars, std::size_t index, exponent_t power = 1) {
        if (index == 0 || index > nvars)
            throw dimension_error("variable x" + std::to_string(index) + " out of range for " + std::to_string(nvars) +
                                  " variables");
        Monomial m(nvars);
        m.exps_[index - 1] = power;
        m.degree_ = power;
        m.refresh_support();
        return m;
    }

    std::size_t nvars() const noexcept { return exps_.size(); }
    exponent_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// Exponent of variable x_{i+1}.
    exponent_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::span<const exponent_t> exponents() const noexcept { return {exps_.data(), exps_.size()}; }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && std::equal(a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        Monomial r;
        r.exps_.resize(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
        r.degree_ = checked_add(a.degree_, b.degree_);
        r.support_ = a.support_ | b.support_;
        return r;
    }

    /// True iff this monomial divides m.
    bool divides(const Monomial& m) const {
        check_same(*this, m);
        if (degree_ > m.degree_ || (support_ & ~m.support_)) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    /// Exact quotient m / d; d must divide m.
    friend Monomial operator/(const Monomial& m, const Monomial& d) {
        if (!d.divides(m)) throw dimension_error("monomial quotient is not exact");
        Monomial r;
        r.exps_.resize(m.nvars());
        for (std::size_t i = 0; i < m.nvars(); ++i) r.exps_[i] = m.exps_[i] - d.exps_[i];
        r.degree_ = m.degree_ - d.degree_;
        r.refresh_support();
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        Monomial r;
        r.exps_.resize(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
        }
        r.support_ = a.support_ | b.support_;
        return r;
    }

    /// No variable occurs in both.
    friend bool coprime(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        if (a.nvars() <= 64) return (a.support_ & b.support_) == 0;
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exps_[i] && b.exps_[i]) return false;
        return true;
    }

    std::size_t hash() const noexcept {
        std::size_t h = exps_.size();
        for (auto e : exps_) h = h * 1000003u ^ e;
        return h;
    }

   private:
    // Bit i % 64 is set when variable i + 1 occurs; a cheap divisibility filter.
    void refresh_support() noexcept {
        support_ = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i]) support_ |= std::uint64_t{1} << (i % 64);
    }

    static exponent_t checked_add(exponent_t a, exponent_t b) {
        exponent_t r;
        if (__builtin_add_overflow(a, b, &r)) throw dimension_error("exponent overflow");
        return r;
    }

    static void check_same(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars())
            throw dimension_error("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                                  std::to_string(b.nvars()));
    }

    storage exps_;
    exponent_t degree_ = 0;
    std::uint64_t support_ = 0;
};

/// Three-way comparison of two monomials under ord.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (a.nvars() != b.nvars())
        throw dimension_error("variable count mismatch: " + std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()));
    const auto n = a.nvars();
    switch (ord) {
        case MonomialOrder::grlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            [[fallthrough]];
        case MonomialOrder::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] <=> b[i];
            return std::strong_ordering::equal;
        case MonomialOrder::grevlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return b[i] <=> a[i];
            return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace chromideal

#endif  // CHROMIDEAL_MONOMIAL_HPP

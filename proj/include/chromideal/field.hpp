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

#ifndef CHROMIDEAL_FIELD_HPP
#define CHROMIDEAL_FIELD_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace chromideal {

/*
 * Coefficient fields are stateless-or-tiny context objects that carry out the
 * arithmetic on plain element values. A polynomial keeps a copy of its field,
 * so residues stay four bytes and the modulus lives in one place.
 */

template <class K>
concept Field = std::equality_comparable<K> && requires(const K& k, const typename K::element& a,
                                                        const typename K::element& b) {
    typename K::element;
    { k.zero() } -> std::same_as<typename K::element>;
    { k.one() } -> std::same_as<typename K::element>;
    { k.from_integer(std::int64_t{}) } -> std::same_as<typename K::element>;
    { k.add(a, b) } -> std::same_as<typename K::element>;
    { k.sub(a, b) } -> std::same_as<typename K::element>;
    { k.mul(a, b) } -> std::same_as<typename K::element>;
    { k.neg(a) } -> std::same_as<typename K::element>;
    { k.inv(a) } -> std::same_as<typename K::element>;
    { k.is_zero(a) } -> std::same_as<bool>;
    { k.is_one(a) } -> std::same_as<bool>;
    { k.equal(a, b) } -> std::same_as<bool>;
    { k.name() } -> std::same_as<std::string>;
};

// ---------------------------------------------------------------------------
// Number theory helpers

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % mod);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
        exp >>= 1;
    }
    return result;
}

constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p with p = 1 (mod k), i.e. the smallest prime field holding all k-th roots of unity.
constexpr std::uint32_t smallest_prime_one_mod(std::uint32_t k) {
    if (k == 0) throw field_error("root-of-unity order must be positive");
    for (std::uint64_t p = static_cast<std::uint64_t>(k) + 1;; p += k)
        if (is_prime(p)) {
            if (p > 0x7fffffffULL) throw field_error("no prime below 2^31 for k = " + std::to_string(k));
            return static_cast<std::uint32_t>(p);
        }
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Smallest generator of the multiplicative group of GF(p).
inline std::uint32_t primitive_root(std::uint32_t p) {
    if (!is_prime(p)) throw field_error("modulus " + std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    const auto factors = distinct_prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto q : factors)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        if (generator) return g;
    }
    throw field_error("no primitive root found");  // unreachable for prime p
}

// ---------------------------------------------------------------------------
// Q

class RationalField {
   public:
    using element = mpq_class;

    element zero() const { return element(0); }
    element one() const { return element(1); }
    element from_integer(std::int64_t v) const { return element(mpz_class(std::to_string(v))); }
    element from_fraction(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw field_error("zero denominator");
        element q(num, den);
        q.canonicalize();
        return q;
    }

    element add(const element& a, const element& b) const { return a + b; }
    element sub(const element& a, const element& b) const { return a - b; }
    element mul(const element& a, const element& b) const { return a * b; }
    element neg(const element& a) const { return -a; }
    element inv(const element& a) const {
        if (a == 0) throw field_error("inverse of zero");
        return 1 / a;
    }
    element div(const element& a, const element& b) const { return mul(a, inv(b)); }

    bool is_zero(const element& a) const { return sgn(a) == 0; }
    bool is_one(const element& a) const { return a == 1; }
    bool equal(const element& a, const element& b) const { return a == b; }

    /// Sign and magnitude text ("2/3"), used by the polynomial printer.
    std::pair<bool, std::string> signed_text(const element& a) const {
        return {sgn(a) < 0, element(abs(a)).get_str()};
    }

    /// Reduction of an integer-coefficient value into this field; identity here.
    element lift(const element& a) const { return a; }

    std::string name() const { return "rational"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

// ---------------------------------------------------------------------------
// GF(p)

/// A residue in [0, p); the modulus is held by the owning PrimeField.
struct Residue {
    std::uint32_t value = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

class PrimeField {
   public:
    using element = Residue;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw field_error("modulus " + std::to_string(p) + " is not prime");
        if (p > 0x7fffffffU) throw field_error("modulus must be below 2^31");
    }

    std::uint32_t modulus() const noexcept { return p_; }

    element zero() const { return {0}; }
    element one() const { return {1 % p_}; }
    element from_integer(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }
    element from_fraction(const mpz_class& num, const mpz_class& den) const {
        if (den == 0) throw field_error("zero denominator");
        const mpz_class p(p_);
        mpz_class n = num % p, d = den % p;
        if (n < 0) n += p;
        if (d < 0) d += p;
        if (d == 0) throw field_error("denominator divisible by the modulus " + std::to_string(p_));
        return mul({static_cast<std::uint32_t>(n.get_ui())}, inv({static_cast<std::uint32_t>(d.get_ui())}));
    }

    element add(element a, element b) const {
        std::uint32_t s = a.value + b.value;
        return {s >= p_ ? s - p_ : s};
    }
    element sub(element a, element b) const { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
    element mul(element a, element b) const {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    element neg(element a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
    element inv(element a) const {
        if (a.value == 0) throw field_error("inverse of zero");
        return {static_cast<std::uint32_t>(pow_mod(a.value, p_ - 2, p_))};
    }
    element div(element a, element b) const { return mul(a, inv(b)); }
    element pow(element a, std::uint64_t e) const { return {static_cast<std::uint32_t>(pow_mod(a.value, e, p_))}; }

    bool is_zero(element a) const { return a.value == 0; }
    bool is_one(element a) const { return a.value == 1 % p_; }
    bool equal(element a, element b) const { return a.value == b.value; }

    /// Symmetric representative, so that p - 1 prints as "-1".
    std::pair<bool, std::string> signed_text(element a) const {
        if (a.value > p_ / 2) return {true, std::to_string(p_ - a.value)};
        return {false, std::to_string(a.value)};
    }

    /// Image of a rational under the reduction map Z_(p) -> GF(p).
    element lift(const mpq_class& q) const { return from_fraction(q.get_num(), q.get_den()); }

    std::string name() const { return "gf:" + std::to_string(p_); }

    /**
     * The color-to-root map: color c goes to g^(c (p-1)/k) for the smallest
     * primitive root g. Requires k | p - 1; distinct colors give distinct roots.
     */
    element root_of_unity(std::uint32_t k, std::uint32_t c) const {
        if (k == 0 || (p_ - 1) % k != 0)
            throw field_error("GF(" + std::to_string(p_) + ") has no primitive " + std::to_string(k) + "-th root of unity");
        const std::uint64_t step = (p_ - 1) / k;
        return {static_cast<std::uint32_t>(pow_mod(primitive_root(p_), step * (c % k), p_))};
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint32_t p_;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

}  // namespace chromideal

#endif  // CHROMIDEAL_FIELD_HPP

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

#ifndef CHROMIDEAL_POLY_IO_HPP
#define CHROMIDEAL_POLY_IO_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace chromideal {

namespace detail {

/*
 * Recursive-descent reader for
 *   poly     ::= [sign] term (sign term)*
 *   term     ::= [coeff] [monomial]        (at least one present)
 *   coeff    ::= integer | integer "/" positive-integer
 *   monomial ::= var ("*" var)*,  var ::= "x" index ["^" exp]
 * Whitespace is skipped everywhere. A "*" between coefficient and monomial
 * is tolerated on input.
 */
template <Field K>
class PolyReader {
   public:
    PolyReader(std::string_view text, std::size_t nvars, const K& field, MonomialOrder ord)
        : text_(text), nvars_(nvars), field_(field), ord_(ord) {}

    Polynomial<K> read() {
        std::vector<Term<K>> terms;
        skip_ws();
        if (at_end()) throw syntax_error("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = get() == '-';
        terms.push_back(read_term(negative));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') throw syntax_error(std::string("unexpected '") + c + "'", pos_);
            ++pos_;
            terms.push_back(read_term(c == '-'));
        }
        return Polynomial<K>::from_terms(field_, nvars_, ord_, std::move(terms));
    }

   private:
    Term<K> read_term(bool negative) {
        skip_ws();
        const std::size_t start = pos_;
        typename K::element coeff = field_.one();
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const mpz_class num = read_integer();
            mpz_class den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t den_pos = pos_;
                den = read_integer();
                if (den == 0) throw syntax_error("zero denominator", den_pos);
            }
            coeff = field_.from_fraction(num, den);
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'x') throw syntax_error("expected variable after '*'", pos_);
            }
        }
        Monomial mono(nvars_);
        skip_ws();
        if (!at_end() && peek() == 'x') {
            mono = read_var();
            while (true) {
                skip_ws();
                if (at_end() || peek() != '*') break;
                ++pos_;
                skip_ws();
                mono = mono * read_var();
            }
        } else if (!have_coeff) {
            throw syntax_error(at_end() ? "expected term" : std::string("unexpected '") + peek() + "'", start);
        }
        if (negative) coeff = field_.neg(coeff);
        return {std::move(coeff), std::move(mono)};
    }

    Monomial read_var() {
        if (at_end() || peek() != 'x') throw syntax_error("expected variable", pos_);
        const std::size_t var_pos = pos_;
        ++pos_;
        skip_ws();
        const mpz_class index = read_integer();
        if (index == 0 || index > nvars_)
            throw dimension_error("variable x" + index.get_str() + " at position " + std::to_string(var_pos) +
                                  " out of range for " + std::to_string(nvars_) + " variables");
        exponent_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t exp_pos = pos_;
            const mpz_class e = read_integer();
            if (!e.fits_uint_p()) throw syntax_error("exponent too large", exp_pos);
            power = static_cast<exponent_t>(e.get_ui());
        }
        return Monomial::variable(nvars_, index.get_ui(), power);
    }

    mpz_class read_integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw syntax_error("expected integer", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    std::string_view text_;
    std::size_t nvars_;
    const K& field_;
    MonomialOrder ord_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <Field K>
Polynomial<K> parse_poly(std::string_view text, std::size_t nvars, const K& field,
                         MonomialOrder ord = MonomialOrder::grevlex) {
    return detail::PolyReader<K>(text, nvars, field, ord).read();
}

inline std::string format_monomial(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

/// Text form in the grammar accepted by parse_poly, e.g. "x1^4 - 1" or "2/3x1*x2".
template <Field K>
std::string format_poly(const Polynomial<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        auto [negative, magnitude] = f.field().signed_text(t.coeff);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const bool unit = magnitude == "1";
        if (t.mono.is_one())
            out += magnitude;
        else
            out += (unit ? std::string() : magnitude) + format_monomial(t.mono);
    }
    return out;
}

template <Field K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& f) {
    return os << format_poly(f);
}

}  // namespace chromideal

#endif  // CHROMIDEAL_POLY_IO_HPP

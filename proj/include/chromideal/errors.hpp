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

#ifndef CHROMIDEAL_ERRORS_HPP
#define CHROMIDEAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromideal {

/// Base of every error raised by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Mismatched variable counts, out-of-range indices, exponent overflow.
class dimension_error : public error {
   public:
    using error::error;
};

/// Operands live in different coefficient fields, or the field itself is invalid.
class field_error : public error {
   public:
    using error::error;
};

/// An operation that needs a leading term was handed the zero polynomial.
class empty_polynomial_error : public error {
   public:
    using error::error;
};

/// Malformed arguments: zero divisors, empty generator lists, bad permutations.
class input_error : public error {
   public:
    using error::error;
};

class syntax_error : public error {
   public:
    syntax_error(const std::string& what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

class self_loop_error : public input_error {
   public:
    using input_error::input_error;
};

/// A Groebner computation hit its pair or term cap. The answer is unknown.
class budget_exceeded : public error {
   public:
    using error::error;
};

/// A coloring was requested for a graph that has none.
class infeasible_error : public error {
   public:
    using error::error;
};

/// An infeasibility certificate was requested for a colorable graph.
class no_certificate_error : public error {
   public:
    using error::error;
};

class unsupported_error : public error {
   public:
    using error::error;
};

}  // namespace chromideal

#endif  // CHROMIDEAL_ERRORS_HPP

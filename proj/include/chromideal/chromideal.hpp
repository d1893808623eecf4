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

#ifndef CHROMIDEAL_CHROMIDEAL_HPP
#define CHROMIDEAL_CHROMIDEAL_HPP

#include "colorideal.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "groebner.hpp"
#include "monomial.hpp"
#include "poly_io.hpp"
#include "polynomial.hpp"

#endif  // CHROMIDEAL_CHROMIDEAL_HPP

/*
   Copyright 2026 The ecirr Authors

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

// Internal helpers shared by the polynomial translation units.

#ifndef ECIRR_POLY_KERNELS_HPP
#define ECIRR_POLY_KERNELS_HPP

#include "ecirr/poly.hpp"

namespace ecirr::detail {

/// How many products of two residues mod p can be summed into a u64 before
/// a reduction is needed.
u64 accumulation_budget(u64 p) noexcept;

/// Throws ContextMismatch unless both polynomials live over the same field.
void require_same_field(const Poly& f, const Poly& g);

}  // namespace ecirr::detail

#endif  // ECIRR_POLY_KERNELS_HPP

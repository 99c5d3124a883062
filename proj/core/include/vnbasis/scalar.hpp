// Copyright 2026 The vnbasis Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "vnbasis/complexf.hpp"
#include "vnbasis/cyclo.hpp"

namespace vnbasis {

/// True for the exact cyclotomic backend, false for the float backend.
template <typename S>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<Cyclo> = true;

/// Zero test dispatch: exact for Cyclo (the tolerance is unused), absolute
/// tolerance for ComplexF.
inline bool scalar_is_zero(const Cyclo& s, double /*tol*/) { return s.is_zero(); }
inline bool scalar_is_zero(const ComplexF& s, double tol) { return s.is_zero(tol); }

inline bool scalar_equals(const Cyclo& a, const Cyclo& b, double /*tol*/) {
  return a.equals(b);
}
inline bool scalar_equals(const ComplexF& a, const ComplexF& b, double tol) {
  return a.equals(b, tol);
}

}  // namespace vnbasis

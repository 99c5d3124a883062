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

#include <complex>
#include <vector>

#include "vnbasis/rational.hpp"

namespace vnbasis {

/// Exact element of the cyclotomic field Q(zeta_L), zeta_L = e^{2*pi*i/L}.
///
/// The value is stored as a rational-coefficient residue modulo x^L - 1:
/// coeffs[t] is the coefficient of zeta_L^t. The representation is not
/// unique (the residue ring has dimension L, the field only phi(L));
/// multiplication is plain cyclic convolution and canonicalization happens
/// only inside is_zero()/equals(), which divide by the L-th cyclotomic
/// polynomial. Two values of the same order are equal iff their difference
/// reduces to zero modulo Phi_L.
///
/// Values are immutable after construction; all operations are pure.
class Cyclo {
 public:
  /// Zero of the given order.
  explicit Cyclo(long order);
  Cyclo(long order, std::vector<Rational> coeffs);

  static Cyclo zero(long order = 1) { return Cyclo(order); }
  static Cyclo one(long order = 1) { return from_rational(Rational(1), order); }
  static Cyclo from_rational(const Rational& r, long order = 1);

  /// zeta_order^(exponent mod order). Negative exponents wrap.
  static Cyclo root_of_unity(long order, long exponent);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same field element expressed in Q(zeta_target); order() must divide
  /// target_order.
  Cyclo lifted(long target_order) const;

  Cyclo conj() const;
  Cyclo scaled(const Rational& r) const;

  /// Certified exact zero test: divides the coefficient polynomial by
  /// Phi_L and checks that the remainder vanishes.
  bool is_zero() const;

  /// Mathematical equality; operands of different orders are lifted to the
  /// lcm of the two orders first.
  bool equals(const Cyclo& other) const;

  std::complex<double> to_complex() const;

  /// Number of nonzero stored coefficients (representation-dependent).
  long support_size() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);

  /// *this += a * b without allocating an intermediate product; the hot
  /// path of matrix products and trace inner products.
  void add_mul(const Cyclo& a, const Cyclo& b);
  /// *this += a * conj(b).
  void add_mul_conj(const Cyclo& a, const Cyclo& b);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a);

 private:
  void check_same_order(const Cyclo& o) const;

  long order_;
  std::vector<Rational> coeffs_;
};

/// The L-th cyclotomic polynomial Phi_L as an ascending integer coefficient
/// vector (size = degree + 1 = phi(L) + 1, monic). Computed through the
/// identity x^L - 1 = prod_{e | L} Phi_e and memoized; safe to call
/// concurrently.
const std::vector<mpz_class>& cyclotomic_polynomial(long L);

/// Euler totient, the degree of Phi_L.
long euler_phi(long L);

}  // namespace vnbasis

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

#include <cmath>
#include <complex>

#include "vnbasis/rational.hpp"

namespace vnbasis {

/// Default absolute tolerance for zero tests in the floating-point backend.
inline constexpr double kDefaultFloatTol = 1e-10;

/// Double-precision complex scalar sharing the Cyclo surface, so the
/// algebra, construction and verification templates instantiate for both
/// backends. Order bookkeeping degenerates: order() is 1 and lifted() is a
/// copy.
struct ComplexF {
  double re = 0.0;
  double im = 0.0;

  ComplexF() = default;
  ComplexF(double r, double i) : re(r), im(i) {}
  explicit ComplexF(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  static ComplexF zero(long /*order*/ = 1) { return {}; }
  static ComplexF one(long /*order*/ = 1) { return {1.0, 0.0}; }
  static ComplexF from_rational(const Rational& r, long /*order*/ = 1) {
    return {r.to_double(), 0.0};
  }
  static ComplexF root_of_unity(long order, long exponent);

  long order() const { return 1; }
  ComplexF lifted(long /*target_order*/) const { return *this; }

  ComplexF conj() const { return {re, -im}; }
  ComplexF scaled(const Rational& r) const {
    const double f = r.to_double();
    return {re * f, im * f};
  }

  bool is_zero(double tol = kDefaultFloatTol) const {
    return std::abs(re) <= tol && std::abs(im) <= tol;
  }
  bool equals(const ComplexF& o, double tol = kDefaultFloatTol) const {
    return (*this - o).is_zero(tol);
  }

  std::complex<double> to_complex() const { return {re, im}; }

  ComplexF& operator+=(const ComplexF& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexF& operator-=(const ComplexF& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  void add_mul(const ComplexF& a, const ComplexF& b) {
    re += a.re * b.re - a.im * b.im;
    im += a.re * b.im + a.im * b.re;
  }
  void add_mul_conj(const ComplexF& a, const ComplexF& b) {
    re += a.re * b.re + a.im * b.im;
    im += a.im * b.re - a.re * b.im;
  }

  friend ComplexF operator+(ComplexF a, const ComplexF& b) { return a += b; }
  friend ComplexF operator-(ComplexF a, const ComplexF& b) { return a -= b; }
  friend ComplexF operator*(const ComplexF& a, const ComplexF& b) {
    return ComplexF(a.to_complex() * b.to_complex());
  }
  friend ComplexF operator-(const ComplexF& a) { return {-a.re, -a.im}; }
};

inline ComplexF ComplexF::root_of_unity(long order, long exponent) {
  long e = exponent % order;
  if (e < 0) e += order;
  const double angle =
      2.0 * M_PI * static_cast<double>(e) / static_cast<double>(order);
  return ComplexF(std::polar(1.0, angle));
}

}  // namespace vnbasis

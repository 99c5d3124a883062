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

#include "vnbasis/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace vnbasis {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : v_(std::move(num), std::move(den)) {
  if (sgn(v_.get_den()) == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (sgn(v.get_den()) == 0) {
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace vnbasis

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

#include "vnbasis/cyclo.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace vnbasis {

namespace {

// Exact division of integer polynomials (ascending coefficients), used by
// the Phi_L recursion. The divisor is monic in every call site, so plain
// synthetic division stays integral; a nonzero remainder would indicate a
// logic error and throws.
std::vector<mpz_class> exact_poly_div(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
  const long dn = static_cast<long>(num.size()) - 1;
  const long dd = static_cast<long>(den.size()) - 1;
  if (dd < 0 || den.back() != 1) {
    throw std::logic_error("exact_poly_div: divisor must be monic");
  }
  std::vector<mpz_class> quot(dn - dd + 1);
  for (long t = dn; t >= dd; --t) {
    if (num[t] == 0) continue;
    const mpz_class q = num[t];
    quot[t - dd] = q;
    for (long j = 0; j <= dd; ++j) {
      if (den[j] != 0) {
        mpz_submul(num[t - dd + j].get_mpz_t(), q.get_mpz_t(), den[j].get_mpz_t());
      }
    }
  }
  for (const auto& c : num) {
    if (c != 0) throw std::logic_error("exact_poly_div: nonzero remainder");
  }
  return quot;
}

std::vector<mpz_class> substitute_power(const std::vector<mpz_class>& poly, long p) {
  std::vector<mpz_class> out((poly.size() - 1) * p + 1);
  for (std::size_t i = 0; i < poly.size(); ++i) out[i * p] = poly[i];
  return out;
}

std::map<long, std::vector<mpz_class>>& phi_cache() {
  static std::map<long, std::vector<mpz_class>> cache;
  return cache;
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

// Prime ladder: Phi_1 = x - 1, Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x) for a
// new prime p, and Phi_L(x) = Phi_rad(L)(x^{L / rad(L)}).
std::vector<mpz_class> compute_phi(long L) {
  std::vector<mpz_class> phi{-1, 1};
  long rest = L;
  long rad = 1;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    phi = exact_poly_div(substitute_power(phi, p), phi);
    rad *= p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) {
    phi = exact_poly_div(substitute_power(phi, rest), phi);
    rad *= rest;
  }
  if (L / rad > 1) phi = substitute_power(phi, L / rad);
  return phi;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long L) {
  if (L < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto it = phi_cache().find(L);
    if (it != phi_cache().end()) return it->second;
  }
  std::vector<mpz_class> phi = compute_phi(L);
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_cache().emplace(L, std::move(phi)).first->second;
}

namespace {

// Canonical representatives of the high monomials: rows[i] holds
// x^{phi(L)+i} mod Phi_L as phi(L) integer coefficients. Reduces is_zero
// to one table row per nonzero coefficient. Tables for a few orders are
// kept alive at a time (enumerations process one order in bursts).
struct ReductionTable {
  std::vector<std::vector<mpz_class>> rows;
};

std::shared_ptr<const ReductionTable> reduction_table(long L) {
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const ReductionTable>> cache;
  static std::deque<long> fifo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
  }

  const std::vector<mpz_class>& phi = cyclotomic_polynomial(L);
  const long dphi = static_cast<long>(phi.size()) - 1;
  auto table = std::make_shared<ReductionTable>();
  table->rows.resize(L - dphi);
  for (long i = 0; i < L - dphi; ++i) {
    std::vector<mpz_class>& row = table->rows[i];
    row.resize(dphi);
    if (i == 0) {
      for (long j = 0; j < dphi; ++j) row[j] = -phi[j];
    } else {
      const std::vector<mpz_class>& prev = table->rows[i - 1];
      const mpz_class& lead = prev[dphi - 1];
      for (long j = dphi - 1; j > 0; --j) row[j] = prev[j - 1];
      if (lead != 0) {
        for (long j = 0; j < dphi; ++j) {
          if (phi[j] != 0) {
            mpz_submul(row[j].get_mpz_t(), lead.get_mpz_t(), phi[j].get_mpz_t());
          }
        }
      }
    }
  }

  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(L, std::move(table));
  if (inserted) {
    fifo.push_back(L);
    while (fifo.size() > 6) {
      cache.erase(fifo.front());
      fifo.pop_front();
    }
  }
  return it->second;
}

}  // namespace

long euler_phi(long L) {
  return static_cast<long>(cyclotomic_polynomial(L).size()) - 1;
}

Cyclo::Cyclo(long order) : order_(order), coeffs_(order) {
  if (order < 1) throw std::invalid_argument("Cyclo: order must be >= 1");
}

Cyclo::Cyclo(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("Cyclo: order must be >= 1");
  if (static_cast<long>(coeffs_.size()) != order) {
    throw std::invalid_argument("Cyclo: coefficient count must equal order");
  }
}

Cyclo Cyclo::from_rational(const Rational& r, long order) {
  Cyclo c(order);
  c.coeffs_[0] = r;
  return c;
}

Cyclo Cyclo::root_of_unity(long order, long exponent) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
  Cyclo c(order);
  long e = exponent % order;
  if (e < 0) e += order;
  c.coeffs_[e] = Rational(1);
  return c;
}

void Cyclo::check_same_order(const Cyclo& o) const {
  if (order_ != o.order_) {
    throw std::invalid_argument("Cyclo: mismatched orders (lift first)");
  }
}

Cyclo Cyclo::lifted(long target_order) const {
  if (target_order % order_ != 0) {
    throw std::invalid_argument("Cyclo: target order not a multiple of order");
  }
  if (target_order == order_) return *this;
  const long f = target_order / order_;
  Cyclo out(target_order);
  for (long t = 0; t < order_; ++t) {
    if (!coeffs_[t].is_zero()) out.coeffs_[t * f] = coeffs_[t];
  }
  return out;
}

Cyclo Cyclo::conj() const {
  Cyclo out(order_);
  for (long t = 0; t < order_; ++t) {
    if (!coeffs_[t].is_zero()) out.coeffs_[(order_ - t) % order_] = coeffs_[t];
  }
  return out;
}

Cyclo Cyclo::scaled(const Rational& r) const {
  if (r.is_zero()) return Cyclo(order_);
  Cyclo out(order_);
  for (long t = 0; t < order_; ++t) {
    if (!coeffs_[t].is_zero()) out.coeffs_[t] = coeffs_[t] * r;
  }
  return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  check_same_order(o);
  for (long t = 0; t < order_; ++t) {
    if (!o.coeffs_[t].is_zero()) coeffs_[t] += o.coeffs_[t];
  }
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  check_same_order(o);
  for (long t = 0; t < order_; ++t) {
    if (!o.coeffs_[t].is_zero()) coeffs_[t] -= o.coeffs_[t];
  }
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.check_same_order(b);
  const long L = a.order_;
  Cyclo out(L);
  // Cyclic convolution, skipping zero coefficients. Constructed values are
  // monomial-sparse, which keeps this near O(support(a) * support(b)).
  for (long s = 0; s < L; ++s) {
    const Rational& as = a.coeffs_[s];
    if (as.is_zero()) continue;
    for (long t = 0; t < L; ++t) {
      const Rational& bt = b.coeffs_[t];
      if (bt.is_zero()) continue;
      long r = s + t;
      if (r >= L) r -= L;
      out.coeffs_[r] += as * bt;
    }
  }
  return out;
}

Cyclo operator-(const Cyclo& a) {
  Cyclo out(a.order_);
  for (long t = 0; t < a.order_; ++t) {
    if (!a.coeffs_[t].is_zero()) out.coeffs_[t] = -a.coeffs_[t];
  }
  return out;
}

void Cyclo::add_mul(const Cyclo& a, const Cyclo& b) {
  check_same_order(a);
  a.check_same_order(b);
  const long L = order_;
  for (long s = 0; s < L; ++s) {
    const Rational& as = a.coeffs_[s];
    if (as.is_zero()) continue;
    for (long t = 0; t < L; ++t) {
      const Rational& bt = b.coeffs_[t];
      if (bt.is_zero()) continue;
      long r = s + t;
      if (r >= L) r -= L;
      coeffs_[r] += as * bt;
    }
  }
}

void Cyclo::add_mul_conj(const Cyclo& a, const Cyclo& b) {
  check_same_order(a);
  a.check_same_order(b);
  const long L = order_;
  for (long s = 0; s < L; ++s) {
    const Rational& as = a.coeffs_[s];
    if (as.is_zero()) continue;
    for (long t = 0; t < L; ++t) {
      const Rational& bt = b.coeffs_[t];
      if (bt.is_zero()) continue;
      // conj(b) carries coefficient bt on exponent L - t.
      long r = s + ((L - t) % L);
      if (r >= L) r -= L;
      coeffs_[r] += as * bt;
    }
  }
}

bool Cyclo::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  if (order_ == 1) return false;

  // Clear denominators, then reduce the integer coefficient vector modulo
  // the monic Phi_L via the cached monomial table; the element vanishes
  // iff the canonical remainder is zero.
  mpz_class den_lcm(1);
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }

  const long dphi = euler_phi(order_);
  const auto table = reduction_table(order_);
  std::vector<mpz_class> acc(dphi);
  mpz_class scaled;
  for (long t = 0; t < order_; ++t) {
    const Rational& c = coeffs_[t];
    if (c.is_zero()) continue;
    scaled = c.num() * (den_lcm / c.den());
    if (t < dphi) {
      acc[t] += scaled;
    } else {
      const std::vector<mpz_class>& row = table->rows[t - dphi];
      for (long j = 0; j < dphi; ++j) {
        if (row[j] != 0) {
          mpz_addmul(acc[j].get_mpz_t(), scaled.get_mpz_t(), row[j].get_mpz_t());
        }
      }
    }
  }
  for (long j = 0; j < dphi; ++j) {
    if (acc[j] != 0) return false;
  }
  return true;
}

bool Cyclo::equals(const Cyclo& other) const {
  const long L = lcm_long(order_, other.order_);
  return (lifted(L) - other.lifted(L)).is_zero();
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
  for (long t = 0; t < order_; ++t) {
    if (coeffs_[t].is_zero()) continue;
    acc += coeffs_[t].to_double() * std::polar(1.0, step * static_cast<double>(t));
  }
  return acc;
}

long Cyclo::support_size() const {
  long n = 0;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) ++n;
  }
  return n;
}

}  // namespace vnbasis

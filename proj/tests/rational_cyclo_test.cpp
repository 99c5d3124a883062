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

#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "vnbasis/cyclo.hpp"
#include "vnbasis/rational.hpp"

using namespace vnbasis;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(2, 4).num() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and strings") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(Rational(3, 5).str() == "3/5");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational::from_string("3/5") == Rational(3, 5));
  CHECK(Rational::from_string("-12") == Rational(-12));
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
}

TEST_CASE("root_of_unity basics") {
  CHECK(Cyclo::root_of_unity(1, 0).equals(Cyclo::one(1)));
  CHECK(Cyclo::root_of_unity(2, 1).equals(Cyclo::from_rational(Rational(-1), 2)));
  CHECK_THROWS_AS(Cyclo::root_of_unity(0, 1), std::invalid_argument);
  // zeta_4^2 = -1: frozen from reducing x^2 mod Phi_4 = x^2 + 1.
  CHECK(Cyclo::root_of_unity(4, 2).equals(Cyclo::from_rational(Rational(-1), 4)));
  auto rem = oracle::poly_mod({Rational(0), Rational(0), Rational(1)},
                              {Rational(1), Rational(0), Rational(1)});
  REQUIRE(rem.size() == 1);
  CHECK(rem[0] == Rational(-1));
  // exponent additivity
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      CHECK((Cyclo::root_of_unity(12, a) * Cyclo::root_of_unity(12, b))
                .equals(Cyclo::root_of_unity(12, a + b)));
    }
  }
}

TEST_CASE("cyclo field operations") {
  const Cyclo z3 = Cyclo::root_of_unity(3, 1);
  const Cyclo z4 = Cyclo::root_of_unity(4, 1);
  // zeta_3 + zeta_3^2 = -1: frozen; the oracle reduction of x + x^2 by
  // Phi_3 = 1 + x + x^2 gives the same.
  CHECK((z3 + Cyclo::root_of_unity(3, 2)).equals(Cyclo::from_rational(Rational(-1), 3)));
  auto rem = oracle::poly_mod({Rational(0), Rational(1), Rational(1)},
                              {Rational(1), Rational(1), Rational(1)});
  REQUIRE(rem.size() == 1);
  CHECK(rem[0] == Rational(-1));

  CHECK((z4 * z4).equals(Cyclo::from_rational(Rational(-1), 4)));
  CHECK(Cyclo::root_of_unity(5, 1).conj().equals(Cyclo::root_of_unity(5, 4)));
  CHECK_THROWS_AS(z3 + z4, std::invalid_argument);
  CHECK_THROWS_AS(z3 * z4, std::invalid_argument);
  CHECK(z3.scaled(Rational(2, 3)).coeffs()[1] == Rational(2, 3));
}

TEST_CASE("lift_order") {
  CHECK(Cyclo::root_of_unity(2, 1).lifted(4).equals(Cyclo::root_of_unity(4, 2)));
  CHECK(Cyclo::root_of_unity(3, 1).lifted(6).equals(Cyclo::root_of_unity(6, 2)));
  const Cyclo one5 = Cyclo::one(1).lifted(5);
  CHECK(one5.order() == 5);
  CHECK(one5.equals(Cyclo::one(5)));
  CHECK_THROWS_AS(Cyclo::root_of_unity(4, 1).lifted(6), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials, small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  // Phi_6 frozen from dividing x^6 - 1 by Phi_1 Phi_2 Phi_3 with the
  // rational division oracle: remainder of x^6 - 1 by their product
  // vanishes and the quotient is 1 - x + x^2.
  std::vector<Rational> prod{Rational(1)};
  for (long e : {1L, 2L, 3L}) {
    std::vector<Rational> f;
    for (const auto& c : cyclotomic_polynomial(e)) f.emplace_back(mpz_class(c), mpz_class(1));
    std::vector<Rational> next(prod.size() + f.size() - 1);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
    }
    prod = std::move(next);
  }
  std::vector<Rational> x6m1(7);
  x6m1[0] = Rational(-1);
  x6m1[6] = Rational(1);
  CHECK(oracle::poly_mod(x6m1, prod).empty());
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials match brute-force root products") {
  for (long L = 1; L <= 30; ++L) {
    const auto& phi = cyclotomic_polynomial(L);
    const auto brute = oracle::phi_bruteforce(L);
    REQUIRE(phi.size() == brute.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
      CHECK(phi[i] == brute[i]);
    }
  }
}

TEST_CASE("is_zero certifies vanishing sums") {
  // Geometric sum of all 5th roots of unity vanishes.
  Cyclo sum = Cyclo::zero(5);
  for (long t = 0; t < 5; ++t) sum += Cyclo::root_of_unity(5, t);
  CHECK(sum.is_zero());

  CHECK_FALSE(Cyclo::root_of_unity(8, 1).is_zero());

  Cyclo s3 = Cyclo::one(3) + Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(3, 2);
  CHECK(s3.is_zero());
  CHECK(oracle::reduce_mod_phi(s3.coeffs(), cyclotomic_polynomial(3)).empty());
}

TEST_CASE("vanishing-sum law across orders") {
  for (long L = 1; L <= 64; ++L) {
    for (long r = 1; r <= 2 * L; ++r) {
      Cyclo sum = Cyclo::zero(L);
      for (long t = 0; t < L; ++t) sum += Cyclo::root_of_unity(L, r * t);
      if (r % L == 0) {
        CHECK(sum.equals(Cyclo::from_rational(Rational(L), L)));
      } else {
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("zero-test soundness on random values") {
  std::mt19937 rng(20260809);
  int nonzero_checked = 0;
  while (nonzero_checked < 1000) {
    const long L = 1 + static_cast<long>(rng() % 24);
    const Cyclo x = oracle::random_cyclo(rng, L);
    if (std::abs(x.to_complex()) > 1e-6) {
      CHECK_FALSE(x.is_zero());
      ++nonzero_checked;
    }
  }
  // Multiples of Phi_L reduce to zero.
  for (int trial = 0; trial < 200; ++trial) {
    const long L = 2 + static_cast<long>(rng() % 23);
    const auto& phi = cyclotomic_polynomial(L);
    std::vector<Rational> phic(L);
    for (std::size_t i = 0; i < phi.size(); ++i) phic[i] = Rational(mpz_class(phi[i]), mpz_class(1));
    const Cyclo f = oracle::random_cyclo(rng, L);
    CHECK((f * Cyclo(L, phic)).is_zero());
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const long L = 1 + static_cast<long>(rng() % 24);
    const Cyclo a = oracle::random_cyclo(rng, L);
    const Cyclo b = oracle::random_cyclo(rng, L);
    const Cyclo c = oracle::random_cyclo(rng, L);
    CHECK(((a + b) + c).equals(a + (b + c)));
    CHECK(((a * b) * c).equals(a * (b * c)));
    CHECK((a * (b + c)).equals(a * b + a * c));
    CHECK((a * b).equals(b * a));
    CHECK((a + b).equals(b + a));
    CHECK((a - a).is_zero());
    CHECK((a * Cyclo::one(L)).equals(a));
  }
}

TEST_CASE("to_complex evaluation and homomorphism") {
  CHECK(std::abs(Cyclo::root_of_unity(4, 1).to_complex() - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(Cyclo::from_rational(Rational(-1), 2).to_complex() -
                 std::complex<double>(-1, 0)) < 1e-15);
  const double s = std::sqrt(2.0) / 2.0;
  CHECK(std::abs(Cyclo::root_of_unity(8, 1).to_complex() - std::complex<double>(s, s)) < 1e-15);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const long L = 1 + static_cast<long>(rng() % 64);
    const Cyclo a = oracle::random_cyclo(rng, L);
    const Cyclo b = oracle::random_cyclo(rng, L);
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12);
    CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12);
    CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-12);
  }
}

TEST_CASE("conjugation is an involution and fixes rationals") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const long L = 1 + static_cast<long>(rng() % 24);
    const Cyclo a = oracle::random_cyclo(rng, L);
    CHECK(a.conj().conj().equals(a));
  }
  CHECK(Cyclo::from_rational(Rational(3, 7), 12).conj().equals(
      Cyclo::from_rational(Rational(3, 7), 12)));
}

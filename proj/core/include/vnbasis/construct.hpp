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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vnbasis/algebra.hpp"

namespace vnbasis {

/// Fourier (DFT) matrix of size n. The exact backend cannot represent the
/// 1/sqrt(n) column normalization (it is irrational), so it returns the
/// bare Vandermonde of roots of unity, G[j][t] = zeta_n^{jt}, with
/// unit_normalized = false; the float backend returns the unitary G/sqrt(n)
/// with unit_normalized = true.
template <typename S>
struct FourierResult {
  Matrix<S> mat;
  bool unit_normalized;
};

template <typename S>
FourierResult<S> fourier(long n) {
  if (n < 1) throw std::invalid_argument("fourier: n must be >= 1");
  Matrix<S> g(n, n, S::zero(n));
  for (long j = 0; j < n; ++j) {
    for (long t = 0; t < n; ++t) g(j, t) = S::root_of_unity(n, j * t);
  }
  if constexpr (is_exact_scalar_v<S>) {
    return {std::move(g), false};
  } else {
    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    g.for_each([inv](S& s) { s = ComplexF(s.re * inv, s.im * inv); });
    return {std::move(g), true};
  }
}

/// Circulant matrix with the prescribed spectrum: eigenvalue lams[p] on the
/// Fourier vector (zeta_n^{tp})_t. Entries come from expanding
/// F_n diag(lams) F_n^* with the two 1/sqrt(n) factors fused into a single
/// rational 1/n, so the exact backend stays inside Q(zeta_L):
///   C[j][t] = (1/n) * sum_p lams[p] * zeta_n^{(j-t)p}.
template <typename S>
Matrix<S> circulant_from_eigenvalues(const std::vector<S>& lams) {
  const long n = static_cast<long>(lams.size());
  if (n < 1) throw std::invalid_argument("circulant_from_eigenvalues: need >= 1 eigenvalue");
  long L = n;
  for (const S& lam : lams) L = lcm_long(L, lam.order());

  // One value per difference class s = (j - t) mod n.
  std::vector<S> val;
  val.reserve(n);
  for (long s = 0; s < n; ++s) {
    S acc = S::zero(L);
    for (long p = 0; p < n; ++p) {
      acc += lams[p].lifted(L) * S::root_of_unity(n, s * p).lifted(L);
    }
    val.push_back(acc.scaled(Rational(1, n)));
  }

  Matrix<S> c(n, n, S::zero(L));
  for (long j = 0; j < n; ++j) {
    for (long t = 0; t < n; ++t) c(j, t) = val[((j - t) % n + n) % n];
  }
  return c;
}

/// Outcome of the proportionality test behind the existence theorem: either
/// the constant c with n_i = c * k_i for every block, or a witness pair of
/// 1-based block indices whose ratios n/k differ.
struct Proportionality {
  std::optional<Rational> constant;
  std::pair<long, long> witness{0, 0};

  bool exists() const { return constant.has_value(); }
};

inline Proportionality existence_check(const AlgebraSpec& spec) {
  const auto& blocks = spec.blocks();
  const Rational c(blocks[0].n, blocks[0].k);
  for (long i = 1; i < spec.num_blocks(); ++i) {
    if (Rational(blocks[i].n, blocks[i].k) != c) return {std::nullopt, {1, i + 1}};
  }
  return {c, {0, 0}};
}

/// Thrown when a construction requires the proportionality constant and the
/// spec has none.
class NotProportionalError : public std::runtime_error {
 public:
  NotProportionalError(std::pair<long, long> witness)
      : std::runtime_error("no orthonormal unitary basis: blocks " +
                           std::to_string(witness.first) + " and " +
                           std::to_string(witness.second) +
                           " have different n/k ratios"),
        witness_(witness) {}

  std::pair<long, long> witness() const { return witness_; }

 private:
  std::pair<long, long> witness_;
};

/// U, V and the power-product family (U^k V^k)_{k=0..d-1}, d = sum n_i^2.
template <typename S>
struct ConstructionResult {
  BlockMatrix<S> U;
  BlockMatrix<S> V;
  std::vector<BlockMatrix<S>> basis;
  std::vector<long> offsets;
};

/// The power products U^k V^k for k = 0..count-1, via U^k V^k =
/// U (U^{k-1} V^{k-1}) V. Element 0 is the identity.
template <typename S>
std::vector<BlockMatrix<S>> product_basis(const BlockMatrix<S>& U,
                                          const BlockMatrix<S>& V, long count,
                                          double tol = kDefaultFloatTol) {
  detail::check_same_spec(U, V);
  if (!is_unitary(U, tol) || !is_unitary(V, tol)) {
    throw std::invalid_argument("product_basis: U and V must be unitary");
  }
  std::vector<BlockMatrix<S>> out;
  if (count < 1) return out;
  out.reserve(count);
  const long L = lcm_long(U.order(), V.order());
  out.push_back(BlockMatrix<S>::identity(U.spec()).lifted(L));
  for (long k = 1; k < count; ++k) {
    out.push_back(block_mul(block_mul(U, out.back()), V));
  }
  return out;
}

/// The diagonal/block-circulant unitary pair:
///   block i of U is omega^{s_i} diag(1, omega^{n_i}, ..., omega^{(n_i-1) n_i}),
///   block i of V is the circulant with eigenvalues 1, omega, ..., omega^{n_i - 1},
/// with omega = zeta_d, d = sum n_i^2 and offsets s_1 = 0,
/// s_i = sum_{j<i} n_j^2. Blocks depend on the n_i only; the multiplicities
/// k_i enter through the spec carried by the result. Exact scalars are
/// lifted to the common order L = lcm(d, n_1, ..., n_m).
template <typename S>
ConstructionResult<S> build_uv(const AlgebraSpec& spec) {
  const long d = spec.alg_dim();
  long L = d;
  std::vector<long> offsets;
  offsets.reserve(spec.num_blocks());
  long running = 0;
  for (const auto& b : spec.blocks()) {
    offsets.push_back(running);
    running += b.n * b.n;
    L = lcm_long(L, b.n);
  }

  std::vector<Matrix<S>> ublocks, vblocks;
  for (long i = 0; i < spec.num_blocks(); ++i) {
    const long n = spec.blocks()[i].n;
    Matrix<S> u(n, n, S::zero(d));
    for (long j = 0; j < n; ++j) {
      u(j, j) = S::root_of_unity(d, offsets[i] + n * j);
    }
    ublocks.push_back(std::move(u));

    std::vector<S> lams;
    lams.reserve(n);
    for (long p = 0; p < n; ++p) lams.push_back(S::root_of_unity(d, p));
    vblocks.push_back(circulant_from_eigenvalues(lams));
  }

  BlockMatrix<S> U = BlockMatrix<S>(spec, std::move(ublocks)).lifted(L);
  BlockMatrix<S> V = BlockMatrix<S>(spec, std::move(vblocks)).lifted(L);
  std::vector<BlockMatrix<S>> basis = product_basis(U, V, d);
  return {std::move(U), std::move(V), std::move(basis), std::move(offsets)};
}

/// Orthonormal unitary basis of the algebra under its normalized trace.
/// Exists iff the spec passes existence_check; otherwise throws
/// NotProportionalError carrying the witness pair. The construction is the
/// build_uv family: its blocks depend only on the n_i, and proportionality
/// n_i = c k_i is exactly what makes the multiplicity change
/// trace-preserving, so orthogonality transfers to the given spec.
template <typename S>
std::vector<BlockMatrix<S>> unitary_basis(const AlgebraSpec& spec) {
  const Proportionality p = existence_check(spec);
  if (!p.exists()) throw NotProportionalError(p.witness);
  return build_uv<S>(spec).basis;
}

/// Element together with its squared norm under the unnormalized trace.
/// Norms are kept out of the elements because their square roots are
/// irrational; downstream checks only ever consume the squares.
template <typename S>
struct WeightedElement {
  BlockMatrix<S> element;
  Rational norm_squared;
};

/// Matrix-unit family: for each block s and each (i, j), the element with
/// e_ij in block s and zero elsewhere (the compressed form of I_{k_s}
/// tensor e_ij). Squared unnormalized-trace norm is k_s; dividing by its
/// square root would recover the orthonormal family. Pairwise orthogonal
/// under every trace form. Order: blocks first, then (i, j) row-major.
template <typename S>
std::vector<WeightedElement<S>> matrix_unit_basis(const AlgebraSpec& spec) {
  std::vector<WeightedElement<S>> out;
  out.reserve(spec.alg_dim());
  for (long s = 0; s < spec.num_blocks(); ++s) {
    const auto [k, n] = spec.blocks()[s];
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        BlockMatrix<S> e = BlockMatrix<S>::zero_element(spec);
        std::vector<Matrix<S>> blocks = e.blocks();
        blocks[s](i, j) = S::one();
        out.push_back({BlockMatrix<S>(spec, std::move(blocks)), Rational(k)});
      }
    }
  }
  return out;
}

}  // namespace vnbasis

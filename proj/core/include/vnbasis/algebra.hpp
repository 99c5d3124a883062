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

#include <stdexcept>
#include <utility>
#include <vector>

#include "vnbasis/matrix.hpp"
#include "vnbasis/rational.hpp"
#include "vnbasis/scalar.hpp"

namespace vnbasis {

/// Shape of the block algebra: an ordered list of (multiplicity k_i,
/// block dimension n_i) pairs describing the direct sum of k_i-fold copies
/// of full n_i x n_i matrix blocks inside the ambient D x D matrices,
/// D = sum k_i * n_i. The algebra itself has dimension sum n_i^2.
class AlgebraSpec {
 public:
  struct Block {
    long k;
    long n;
    friend bool operator==(const Block&, const Block&) = default;
  };

  explicit AlgebraSpec(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
      throw std::invalid_argument("AlgebraSpec: block list must be non-empty");
    }
    for (const auto& b : blocks_) {
      if (b.k < 1 || b.n < 1) {
        throw std::invalid_argument("AlgebraSpec: multiplicities and dimensions must be >= 1");
      }
      ambient_dim_ += b.k * b.n;
      alg_dim_ += b.n * b.n;
    }
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  long num_blocks() const { return static_cast<long>(blocks_.size()); }

  /// D, the size of the ambient dense matrices.
  long ambient_dim() const { return ambient_dim_; }

  /// Linear dimension of the algebra, sum n_i^2.
  long alg_dim() const { return alg_dim_; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  long ambient_dim_ = 0;
  long alg_dim_ = 0;
};

enum class TraceForm {
  Unnormalized,  // sum_i k_i Tr(A_i)
  Normalized,    // the above divided by the ambient dimension
  Markov,        // sum_i (n_i / alg_dim) Tr(A_i), multiplicity-independent
};

/// Minimal-projection traces (n_i / alg_dim)_i of the Markov trace for the
/// scalars sitting inside the abstract algebra.
std::vector<Rational> markov_weights(const AlgebraSpec& spec);

/// Element of the block algebra, stored compressed: one dense n_i x n_i
/// matrix per block plus the spec (which carries the multiplicities). The
/// k_i identical copies are never materialized outside embed().
///
/// In exact mode all entries are lifted to one common cyclotomic order on
/// construction, so entrywise arithmetic never sees mixed orders.
template <typename S>
class BlockMatrix {
 public:
  BlockMatrix(AlgebraSpec spec, std::vector<Matrix<S>> blocks)
      : spec_(std::move(spec)), blocks_(std::move(blocks)) {
    if (static_cast<long>(blocks_.size()) != spec_.num_blocks()) {
      throw std::invalid_argument("BlockMatrix: block count does not match spec");
    }
    for (long i = 0; i < spec_.num_blocks(); ++i) {
      const long n = spec_.blocks()[i].n;
      if (blocks_[i].rows() != n || blocks_[i].cols() != n) {
        throw std::invalid_argument("BlockMatrix: block size does not match spec");
      }
    }
    order_ = 1;
    for (auto& b : blocks_) {
      b.for_each([this](S& s) { order_ = lcm_long(order_, s.order()); });
    }
    for (auto& b : blocks_) {
      b.for_each([this](S& s) { s = s.lifted(order_); });
    }
  }

  static BlockMatrix identity(const AlgebraSpec& spec) {
    return diagonal_constant(spec, S::one());
  }

  static BlockMatrix zero_element(const AlgebraSpec& spec) {
    std::vector<Matrix<S>> blocks;
    for (const auto& b : spec.blocks()) blocks.emplace_back(b.n, b.n, S::zero());
    return BlockMatrix(spec, std::move(blocks));
  }

  /// c * identity.
  static BlockMatrix diagonal_constant(const AlgebraSpec& spec, const S& c) {
    std::vector<Matrix<S>> blocks;
    for (const auto& b : spec.blocks()) {
      Matrix<S> m(b.n, b.n, S::zero(c.order()));
      for (long j = 0; j < b.n; ++j) m(j, j) = c;
      blocks.push_back(std::move(m));
    }
    return BlockMatrix(spec, std::move(blocks));
  }

  const AlgebraSpec& spec() const { return spec_; }
  long order() const { return order_; }
  const Matrix<S>& block(long i) const { return blocks_[i]; }
  const std::vector<Matrix<S>>& blocks() const { return blocks_; }

  BlockMatrix lifted(long target_order) const {
    BlockMatrix out(*this);
    out.order_ = lcm_long(order_, target_order);
    for (auto& b : out.blocks_) {
      b.for_each([&out](S& s) { s = s.lifted(out.order_); });
    }
    return out;
  }

 private:
  AlgebraSpec spec_;
  std::vector<Matrix<S>> blocks_;
  long order_ = 1;
};

namespace detail {

template <typename S>
void check_same_spec(const BlockMatrix<S>& x, const BlockMatrix<S>& y) {
  if (!(x.spec() == y.spec())) {
    throw std::invalid_argument("BlockMatrix: operands live in different algebras");
  }
}

/// Lifts both operands to their common cyclotomic order (no-op for floats).
template <typename S>
std::pair<BlockMatrix<S>, BlockMatrix<S>> aligned(const BlockMatrix<S>& x,
                                                  const BlockMatrix<S>& y) {
  check_same_spec(x, y);
  const long L = lcm_long(x.order(), y.order());
  return {x.lifted(L), y.lifted(L)};
}

}  // namespace detail

template <typename S>
BlockMatrix<S> block_mul(const BlockMatrix<S>& x, const BlockMatrix<S>& y) {
  auto [a, b] = detail::aligned(x, y);
  std::vector<Matrix<S>> blocks;
  for (long i = 0; i < a.spec().num_blocks(); ++i) {
    blocks.push_back(a.block(i) * b.block(i));
  }
  return BlockMatrix<S>(a.spec(), std::move(blocks));
}

template <typename S>
BlockMatrix<S> block_add(const BlockMatrix<S>& x, const BlockMatrix<S>& y) {
  auto [a, b] = detail::aligned(x, y);
  std::vector<Matrix<S>> blocks;
  for (long i = 0; i < a.spec().num_blocks(); ++i) {
    const long n = a.spec().blocks()[i].n;
    Matrix<S> m = a.block(i);
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) m(r, c) += b.block(i)(r, c);
    }
    blocks.push_back(std::move(m));
  }
  return BlockMatrix<S>(a.spec(), std::move(blocks));
}

/// Conjugate transpose, blockwise.
template <typename S>
BlockMatrix<S> block_adjoint(const BlockMatrix<S>& x) {
  std::vector<Matrix<S>> blocks;
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    const long n = x.spec().blocks()[i].n;
    Matrix<S> m(n, n, S::zero(x.order()));
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) m(c, r) = x.block(i)(r, c).conj();
    }
    blocks.push_back(std::move(m));
  }
  return BlockMatrix<S>(x.spec(), std::move(blocks));
}

template <typename S>
BlockMatrix<S> block_identity(const AlgebraSpec& spec) {
  return BlockMatrix<S>::identity(spec);
}

template <typename S>
BlockMatrix<S> block_scaled(const BlockMatrix<S>& x, const Rational& w) {
  std::vector<Matrix<S>> blocks;
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    Matrix<S> m = x.block(i);
    m.for_each([&w](S& s) { s = s.scaled(w); });
    blocks.push_back(std::move(m));
  }
  return BlockMatrix<S>(x.spec(), std::move(blocks));
}

template <typename S>
S trace(const BlockMatrix<S>& x, TraceForm form) {
  const AlgebraSpec& spec = x.spec();
  S acc = S::zero(x.order());
  for (long i = 0; i < spec.num_blocks(); ++i) {
    const auto [k, n] = spec.blocks()[i];
    S block_tr = S::zero(x.order());
    for (long j = 0; j < n; ++j) block_tr += x.block(i)(j, j);
    switch (form) {
      case TraceForm::Unnormalized:
      case TraceForm::Normalized:
        acc += block_tr.scaled(Rational(k));
        break;
      case TraceForm::Markov:
        acc += block_tr.scaled(Rational(n, spec.alg_dim()));
        break;
    }
  }
  if (form == TraceForm::Normalized) acc = acc.scaled(Rational(1, spec.ambient_dim()));
  return acc;
}

/// Trace inner product <x, y> = tau(x y*), conjugate-linear in y. Expanded
/// entrywise (Tr(A B*) = sum_ab A[a][b] conj(B[a][b])) so no block product
/// is formed; this is the hot path of Gram assembly.
template <typename S>
S inner(const BlockMatrix<S>& x, const BlockMatrix<S>& y, TraceForm form) {
  auto [a, b] = detail::aligned(x, y);
  const AlgebraSpec& spec = a.spec();
  S acc = S::zero(a.order());
  for (long i = 0; i < spec.num_blocks(); ++i) {
    const auto [k, n] = spec.blocks()[i];
    S block_acc = S::zero(a.order());
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) {
        block_acc.add_mul_conj(a.block(i)(r, c), b.block(i)(r, c));
      }
    }
    switch (form) {
      case TraceForm::Unnormalized:
      case TraceForm::Normalized:
        acc += block_acc.scaled(Rational(k));
        break;
      case TraceForm::Markov:
        acc += block_acc.scaled(Rational(n, spec.alg_dim()));
        break;
    }
  }
  if (form == TraceForm::Normalized) acc = acc.scaled(Rational(1, spec.ambient_dim()));
  return acc;
}

/// Dense D x D embedding: k_i diagonal copies of each block, in spec order.
template <typename S>
Matrix<S> embed(const BlockMatrix<S>& x) {
  const long D = x.spec().ambient_dim();
  Matrix<S> out(D, D, S::zero(x.order()));
  long base = 0;
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    const auto [k, n] = x.spec().blocks()[i];
    for (long copy = 0; copy < k; ++copy) {
      for (long r = 0; r < n; ++r) {
        for (long c = 0; c < n; ++c) out(base + r, base + c) = x.block(i)(r, c);
      }
      base += n;
    }
  }
  return out;
}

/// x x* = 1, entrywise zero test on the difference (exact in cyclotomic
/// mode, absolute tolerance in float mode).
template <typename S>
bool is_unitary(const BlockMatrix<S>& x, double tol = kDefaultFloatTol) {
  const BlockMatrix<S> p = block_mul(x, block_adjoint(x));
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    const long n = x.spec().blocks()[i].n;
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) {
        S want = (r == c) ? S::one(p.order()) : S::zero(p.order());
        if (!scalar_is_zero(p.block(i)(r, c) - want, tol)) return false;
      }
    }
  }
  return true;
}

/// Entrywise equality across all blocks.
template <typename S>
bool block_equal(const BlockMatrix<S>& x, const BlockMatrix<S>& y,
                 double tol = kDefaultFloatTol) {
  auto [a, b] = detail::aligned(x, y);
  for (long i = 0; i < a.spec().num_blocks(); ++i) {
    const long n = a.spec().blocks()[i].n;
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) {
        if (!scalar_is_zero(a.block(i)(r, c) - b.block(i)(r, c), tol)) return false;
      }
    }
  }
  return true;
}

}  // namespace vnbasis

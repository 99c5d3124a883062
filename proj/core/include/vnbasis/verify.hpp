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

#include <optional>
#include <thread>
#include <vector>

#include "vnbasis/algebra.hpp"

namespace vnbasis {

/// Gram matrix of a candidate family plus verdicts. In exact mode the
/// verdicts carry no tolerance at all: every zero is certified by
/// cyclotomic-polynomial division. spans follows from orthogonality plus
/// nonzero norms plus cardinality = alg_dim, which is a complete criterion
/// for orthogonal families.
template <typename S>
struct GramReport {
  TraceForm form;
  Matrix<S> gram;
  bool is_orthogonal = false;
  std::vector<S> norms_squared;
  bool spans = false;
};

/// Full Gram matrix gram[i][j] = <basis[i], basis[j]> under the given
/// form. Entries are independent; `threads` > 1 spreads them over that
/// many workers.
template <typename S>
GramReport<S> gram(const std::vector<BlockMatrix<S>>& basis, TraceForm form,
                   double tol = kDefaultFloatTol, int threads = 1) {
  const long count = static_cast<long>(basis.size());
  if (count == 0) throw std::invalid_argument("gram: empty basis");
  for (const auto& b : basis) detail::check_same_spec(basis[0], b);

  GramReport<S> report;
  report.form = form;
  report.gram = Matrix<S>(count, count, S::zero());

  const long total = count * count;
  auto worker = [&](long begin, long end) {
    for (long idx = begin; idx < end; ++idx) {
      report.gram(idx / count, idx % count) =
          inner(basis[idx / count], basis[idx % count], form);
    }
  };
  if (threads <= 1 || total < 4) {
    worker(0, total);
  } else {
    const long nw = std::min<long>(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (long w = 0; w < nw; ++w) {
      const long begin = total * w / nw;
      const long end = total * (w + 1) / nw;
      pool.emplace_back([&worker, begin, end] { worker(begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  report.is_orthogonal = true;
  bool norms_nonzero = true;
  for (long i = 0; i < count; ++i) {
    for (long j = 0; j < count; ++j) {
      if (i == j) continue;
      if (!scalar_is_zero(report.gram(i, j), tol)) {
        report.is_orthogonal = false;
      }
    }
  }
  for (long i = 0; i < count; ++i) {
    report.norms_squared.push_back(report.gram(i, i));
    if (scalar_is_zero(report.gram(i, i), tol)) norms_nonzero = false;
  }
  report.spans = report.is_orthogonal && norms_nonzero &&
                 count == basis[0].spec().alg_dim();
  return report;
}

/// sum_i weights[i] * (x_i^* x_i). The weights carry squared normalization
/// factors that the exact scalars cannot absorb (k^{-1/2} is irrational):
/// weight 1/k on an element x is exactly the contribution of the
/// normalized element k^{-1/2} x.
template <typename S>
BlockMatrix<S> lemma_sum(const std::vector<BlockMatrix<S>>& elements,
                         const std::vector<Rational>& weights) {
  if (elements.size() != weights.size()) {
    throw std::invalid_argument("lemma_sum: weights and elements differ in length");
  }
  if (elements.empty()) throw std::invalid_argument("lemma_sum: empty family");
  BlockMatrix<S> acc = BlockMatrix<S>::zero_element(elements[0].spec());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    acc = block_add(acc, block_scaled(block_mul(block_adjoint(elements[i]), elements[i]),
                                      weights[i]));
  }
  return acc;
}

/// The scalar c with x = c * 1 across all blocks, or nullopt.
template <typename S>
std::optional<S> is_scalar_multiple_of_identity(const BlockMatrix<S>& x,
                                                double tol = kDefaultFloatTol) {
  const S c = x.block(0)(0, 0);
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    const long n = x.spec().blocks()[i].n;
    for (long r = 0; r < n; ++r) {
      for (long col = 0; col < n; ++col) {
        const S& e = x.block(i)(r, col);
        if (r == col) {
          if (!scalar_is_zero(e - c, tol)) return std::nullopt;
        } else if (!scalar_is_zero(e, tol)) {
          return std::nullopt;
        }
      }
    }
  }
  return c;
}

template <typename S>
bool is_diagonal(const BlockMatrix<S>& x, double tol = kDefaultFloatTol) {
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    const long n = x.spec().blocks()[i].n;
    for (long r = 0; r < n; ++r) {
      for (long c = 0; c < n; ++c) {
        if (r != c && !scalar_is_zero(x.block(i)(r, c), tol)) return false;
      }
    }
  }
  return true;
}

/// Every block is circulant: entries agree on difference classes
/// (j - i) mod n.
template <typename S>
bool is_circulant_blocks(const BlockMatrix<S>& x, double tol = kDefaultFloatTol) {
  for (long b = 0; b < x.spec().num_blocks(); ++b) {
    const long n = x.spec().blocks()[b].n;
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        const S& rep = x.block(b)(0, ((j - i) % n + n) % n);
        if (!scalar_is_zero(x.block(b)(i, j) - rep, tol)) return false;
      }
    }
  }
  return true;
}

}  // namespace vnbasis

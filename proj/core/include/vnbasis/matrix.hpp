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
#include <vector>

namespace vnbasis {

/// Minimal dense row-major matrix over an arbitrary scalar. Small blocks
/// only; no BLAS ambitions.
template <typename S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols, const S& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  S& operator()(long i, long j) { return data_[i * cols_ + j]; }
  const S& operator()(long i, long j) const { return data_[i * cols_ + j]; }

  const std::vector<S>& data() const { return data_; }

  template <typename F>
  void for_each(F&& f) {
    for (auto& s : data_) f(s);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.data_.empty() || b.data_.empty()) {
      throw std::invalid_argument("Matrix: shape mismatch");
    }
    Matrix out(a.rows_, b.cols_, zero_like(a.data_[0]));
    for (long i = 0; i < a.rows_; ++i) {
      for (long k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        for (long j = 0; j < b.cols_; ++j) out(i, j).add_mul(aik, b(k, j));
      }
    }
    return out;
  }

 private:
  static S zero_like(const S& s) { return S::zero(s.order()); }

  long rows_, cols_;
  std::vector<S> data_;
};

}  // namespace vnbasis

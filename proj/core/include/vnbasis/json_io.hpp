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

#include <string>
#include <vector>

#include <json.hpp>

#include "vnbasis/construct.hpp"
#include "vnbasis/verify.hpp"

namespace vnbasis::io {

// ordered_json keeps insertion order on dump, which together with exact
// string-encoded rationals makes every emitted document byte-deterministic.
using Json = nlohmann::ordered_json;

// Rationals travel as exact strings "p" or "p/q"; cyclotomic coefficients
// as ["num", "den"] string pairs. Floats are plain JSON numbers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const Json& j);

Json to_json(const ComplexF& z);
ComplexF complexf_from_json(const Json& j);

Json to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const Json& j);

std::string trace_form_name(TraceForm form);
TraceForm trace_form_from_name(const std::string& name);

template <typename S>
const char* scalar_tag();
template <>
inline const char* scalar_tag<Cyclo>() {
  return "cyclotomic";
}
template <>
inline const char* scalar_tag<ComplexF>() {
  return "float";
}

template <typename S>
Json to_json(const BlockMatrix<S>& x) {
  Json j;
  j["spec"] = to_json(x.spec());
  j["scalar"] = scalar_tag<S>();
  if constexpr (is_exact_scalar_v<S>) j["order"] = x.order();
  Json blocks = Json::array();
  for (long i = 0; i < x.spec().num_blocks(); ++i) {
    const long n = x.spec().blocks()[i].n;
    Json rows = Json::array();
    for (long r = 0; r < n; ++r) {
      Json row = Json::array();
      for (long c = 0; c < n; ++c) row.push_back(to_json(x.block(i)(r, c)));
      rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(rows));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

template <typename S>
S scalar_from_json(const Json& j);
template <>
inline Cyclo scalar_from_json<Cyclo>(const Json& j) {
  return cyclo_from_json(j);
}
template <>
inline ComplexF scalar_from_json<ComplexF>(const Json& j) {
  return complexf_from_json(j);
}

template <typename S>
BlockMatrix<S> block_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("blocks")) {
    throw std::invalid_argument("block matrix JSON: missing spec/blocks");
  }
  if (j.value("scalar", std::string(scalar_tag<S>())) != scalar_tag<S>()) {
    throw std::invalid_argument("block matrix JSON: scalar backend mismatch");
  }
  AlgebraSpec spec = spec_from_json(j.at("spec"));
  const Json& jblocks = j.at("blocks");
  if (!jblocks.is_array() || static_cast<long>(jblocks.size()) != spec.num_blocks()) {
    throw std::invalid_argument("block matrix JSON: wrong block count");
  }
  std::vector<Matrix<S>> blocks;
  for (long i = 0; i < spec.num_blocks(); ++i) {
    const long n = spec.blocks()[i].n;
    const Json& rows = jblocks.at(i);
    if (static_cast<long>(rows.size()) != n) {
      throw std::invalid_argument("block matrix JSON: wrong block shape");
    }
    Matrix<S> m(n, n, S::zero());
    for (long r = 0; r < n; ++r) {
      const Json& row = rows.at(r);
      if (static_cast<long>(row.size()) != n) {
        throw std::invalid_argument("block matrix JSON: wrong block shape");
      }
      for (long c = 0; c < n; ++c) m(r, c) = scalar_from_json<S>(row.at(c));
    }
    blocks.push_back(std::move(m));
  }
  return BlockMatrix<S>(std::move(spec), std::move(blocks));
}

template <typename S>
Json to_json(const GramReport<S>& report) {
  Json j;
  j["form"] = trace_form_name(report.form);
  Json g = Json::array();
  for (long i = 0; i < report.gram.rows(); ++i) {
    Json row = Json::array();
    for (long c = 0; c < report.gram.cols(); ++c) row.push_back(to_json(report.gram(i, c)));
    g.push_back(std::move(row));
  }
  j["gram"] = std::move(g);
  j["is_orthogonal"] = report.is_orthogonal;
  Json norms = Json::array();
  for (const S& s : report.norms_squared) norms.push_back(to_json(s));
  j["norms_squared"] = std::move(norms);
  j["spans"] = report.spans;
  return j;
}

/// Full construction document: spec, scalar tag, offsets s_i, U, V and the
/// basis (U^k V^k)_k.
template <typename S>
Json to_json(const ConstructionResult<S>& cr) {
  Json j;
  j["spec"] = to_json(cr.U.spec());
  j["scalar"] = scalar_tag<S>();
  if constexpr (is_exact_scalar_v<S>) j["order"] = cr.U.order();
  j["offsets"] = cr.offsets;
  j["U"] = to_json(cr.U);
  j["V"] = to_json(cr.V);
  Json basis = Json::array();
  for (const auto& b : cr.basis) basis.push_back(to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

/// Reads a basis either from a construction document (object with a
/// "basis" array) or from a bare array of block matrices.
template <typename S>
std::vector<BlockMatrix<S>> basis_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("basis") ? j.at("basis") : j;
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument("basis JSON: expected a non-empty array of elements");
  }
  std::vector<BlockMatrix<S>> out;
  out.reserve(arr.size());
  for (const Json& e : arr) out.push_back(block_matrix_from_json<S>(e));
  return out;
}

}  // namespace vnbasis::io

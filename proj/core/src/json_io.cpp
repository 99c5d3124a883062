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

#include "vnbasis/json_io.hpp"

#include <stdexcept>

namespace vnbasis::io {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational JSON: expected string");
  return Rational::from_string(j.get<std::string>());
}

Json to_json(const Cyclo& c) {
  Json j;
  j["order"] = c.order();
  Json coeffs = Json::array();
  for (const Rational& r : c.coeffs()) {
    coeffs.push_back(Json::array({r.num().get_str(), r.den().get_str()}));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Cyclo cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("cyclotomic JSON: expected {order, coeffs}");
  }
  const long order = j.at("order").get<long>();
  const Json& jc = j.at("coeffs");
  if (!jc.is_array() || static_cast<long>(jc.size()) != order) {
    throw std::invalid_argument("cyclotomic JSON: coefficient count must equal order");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(order);
  for (const Json& pair : jc) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("cyclotomic JSON: coefficients are [num, den] pairs");
    }
    coeffs.emplace_back(mpz_class(pair.at(0).get<std::string>()),
                        mpz_class(pair.at(1).get<std::string>()));
  }
  return Cyclo(order, std::move(coeffs));
}

Json to_json(const ComplexF& z) { return Json::array({z.re, z.im}); }

ComplexF complexf_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex JSON: expected [re, im]");
  }
  return ComplexF(j.at(0).get<double>(), j.at(1).get<double>());
}

Json to_json(const AlgebraSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.blocks()) {
    Json jb;
    jb["k"] = b.k;
    jb["n"] = b.n;
    blocks.push_back(std::move(jb));
  }
  Json j;
  j["blocks"] = std::move(blocks);
  return j;
}

AlgebraSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
    throw std::invalid_argument("spec JSON: expected {\"blocks\": [{\"k\":..,\"n\":..}, ...]}");
  }
  std::vector<AlgebraSpec::Block> blocks;
  for (const Json& jb : j.at("blocks")) {
    if (!jb.is_object() || !jb.contains("k") || !jb.contains("n")) {
      throw std::invalid_argument("spec JSON: each block needs integer fields k and n");
    }
    blocks.push_back({jb.at("k").get<long>(), jb.at("n").get<long>()});
  }
  return AlgebraSpec(std::move(blocks));
}

std::string trace_form_name(TraceForm form) {
  switch (form) {
    case TraceForm::Unnormalized:
      return "unnormalized";
    case TraceForm::Normalized:
      return "normalized";
    case TraceForm::Markov:
      return "markov";
  }
  throw std::logic_error("trace_form_name: unreachable");
}

TraceForm trace_form_from_name(const std::string& name) {
  if (name == "unnormalized") return TraceForm::Unnormalized;
  if (name == "normalized") return TraceForm::Normalized;
  if (name == "markov") return TraceForm::Markov;
  throw std::invalid_argument("unknown trace form '" + name + "'");
}

}  // namespace vnbasis::io

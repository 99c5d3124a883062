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

// vnbasis: construct and certify orthonormal unitary bases of block
// matrix algebras under trace inner products.
//
// Exit codes: 0 success, 1 verification failure, 2 no basis exists,
// 64 usage or parse errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "vnbasis/json_io.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitNotExists = 2;
constexpr int kExitUsage = 64;

using vnbasis::io::Json;

struct Options {
  std::string input;        // inline JSON or a file path
  std::string backend = "exact";
  bool backend_given = false;
  double tol = vnbasis::kDefaultFloatTol;
  bool tol_given = false;
  std::string out_path;
  std::string format = "json";
  std::string form = "normalized";
};

int gram_threads() {
  const char* env = std::getenv("VNBASIS_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

Json load_input(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return Json::parse(text);
}

void emit(const Json& j, const Options& opt) {
  const std::string text = (opt.format == "pretty" ? j.dump(2) : j.dump()) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.out_path + "'");
    out << text;
  }
}

void warn_exact_tol(const Options& opt) {
  if (opt.backend == "exact" && opt.tol_given) {
    std::cerr << "warning: --tol has no effect with the exact backend and is ignored\n";
  }
}

Json existence_json(const vnbasis::Proportionality& p) {
  Json j;
  j["exists"] = p.exists();
  if (p.exists()) {
    j["c"] = p.constant->str();
  } else {
    j["witness"] = Json::array({p.witness.first, p.witness.second});
  }
  return j;
}

int cmd_exists(const Options& opt) {
  const vnbasis::AlgebraSpec spec = vnbasis::io::spec_from_json(load_input(opt.input));
  const vnbasis::Proportionality p = vnbasis::existence_check(spec);
  emit(existence_json(p), opt);
  return p.exists() ? 0 : kExitNotExists;
}

template <typename S>
int run_construct(const vnbasis::AlgebraSpec& spec, const Options& opt) {
  const vnbasis::Proportionality p = vnbasis::existence_check(spec);
  if (!p.exists()) {
    emit(existence_json(p), opt);
    return kExitNotExists;
  }
  emit(vnbasis::io::to_json(vnbasis::build_uv<S>(spec)), opt);
  return 0;
}

int cmd_construct(const Options& opt) {
  warn_exact_tol(opt);
  const vnbasis::AlgebraSpec spec = vnbasis::io::spec_from_json(load_input(opt.input));
  if (opt.backend == "float") return run_construct<vnbasis::ComplexF>(spec, opt);
  return run_construct<vnbasis::Cyclo>(spec, opt);
}

/// Shared by verify and gram: the document's "scalar" field picks the
/// backend; an explicitly given --backend must agree.
std::string document_backend(const Json& doc, const Options& opt) {
  std::string tag = "cyclotomic";
  if (doc.is_object() && doc.contains("scalar")) {
    tag = doc.at("scalar").get<std::string>();
  } else if (doc.is_array() && !doc.empty() && doc.at(0).contains("scalar")) {
    tag = doc.at(0).at("scalar").get<std::string>();
  }
  const std::string backend = (tag == "float") ? "float" : "exact";
  if (opt.backend_given && opt.backend != backend) {
    throw std::invalid_argument("--backend " + opt.backend +
                                " does not match the input document's scalar type");
  }
  return backend;
}

template <typename S>
int run_verify(const Json& doc, const Options& opt) {
  const auto basis = vnbasis::io::basis_from_json<S>(doc);
  const vnbasis::TraceForm form = vnbasis::io::trace_form_from_name(opt.form);

  bool all_unitary = true;
  for (const auto& b : basis) {
    if (!vnbasis::is_unitary(b, opt.tol)) all_unitary = false;
  }
  const auto report = vnbasis::gram(basis, form, opt.tol, gram_threads());
  bool norms_one = true;
  for (const S& n : report.norms_squared) {
    if (!vnbasis::scalar_is_zero(n - S::one(n.order()), opt.tol)) norms_one = false;
  }
  const bool pass = all_unitary && report.is_orthogonal && norms_one && report.spans;

  Json j;
  j["backend"] = vnbasis::io::scalar_tag<S>();
  j["form"] = opt.form;
  j["elements"] = basis.size();
  j["all_unitary"] = all_unitary;
  j["is_orthogonal"] = report.is_orthogonal;
  Json norms = Json::array();
  for (const S& n : report.norms_squared) norms.push_back(vnbasis::io::to_json(n));
  j["norms_squared"] = std::move(norms);
  j["norms_one"] = norms_one;
  j["spans"] = report.spans;
  j["pass"] = pass;
  emit(j, opt);
  return pass ? 0 : kExitVerifyFail;
}

int cmd_verify(const Options& opt) {
  const Json doc = load_input(opt.input);
  const std::string backend = document_backend(doc, opt);
  if (backend == "exact") warn_exact_tol(opt);
  if (backend == "float") return run_verify<vnbasis::ComplexF>(doc, opt);
  return run_verify<vnbasis::Cyclo>(doc, opt);
}

template <typename S>
int run_gram(const Json& doc, const Options& opt) {
  const auto basis = vnbasis::io::basis_from_json<S>(doc);
  const vnbasis::TraceForm form = vnbasis::io::trace_form_from_name(opt.form);
  const auto report = vnbasis::gram(basis, form, opt.tol, gram_threads());
  emit(vnbasis::io::to_json(report), opt);
  return 0;
}

int cmd_gram(const Options& opt) {
  const Json doc = load_input(opt.input);
  const std::string backend = document_backend(doc, opt);
  if (backend == "exact") warn_exact_tol(opt);
  if (backend == "float") return run_gram<vnbasis::ComplexF>(doc, opt);
  return run_gram<vnbasis::Cyclo>(doc, opt);
}

int cmd_markov(const Options& opt) {
  const vnbasis::AlgebraSpec spec = vnbasis::io::spec_from_json(load_input(opt.input));
  Json weights = Json::array();
  for (const auto& w : vnbasis::markov_weights(spec)) weights.push_back(w.str());
  Json j;
  j["weights"] = std::move(weights);
  emit(j, opt);
  return 0;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_backend,
                        bool with_form) {
  cmd->add_option("--spec", opt.input,
                  "Input document: inline JSON or a file path")
      ->required();
  cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  if (with_backend) {
    cmd->add_option("--backend", opt.backend, "Scalar backend")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--tol", opt.tol, "Zero tolerance (float backend only)");
  }
  if (with_form) {
    cmd->add_option("--form", opt.form, "Trace form for inner products")
        ->check(CLI::IsMember({"unnormalized", "normalized", "markov"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vnbasis: orthonormal unitary bases of block matrix algebras\n"
      "sum_i I_k x M_n(C), constructed and certified exactly over\n"
      "cyclotomic fields (or approximately in floats)."};
  app.require_subcommand(1);

  Options opt;
  CLI::App* exists = app.add_subcommand(
      "exists", "Check whether an orthonormal unitary basis exists (n_i = c k_i)");
  add_common_options(exists, opt, false, false);
  CLI::App* construct = app.add_subcommand(
      "construct", "Build the basis (U^k V^k)_k for a proportional spec");
  add_common_options(construct, opt, true, false);
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a basis file: unitarity, orthogonality, norms, span");
  add_common_options(verify, opt, true, true);
  CLI::App* gram = app.add_subcommand("gram", "Emit the full Gram matrix of a basis file");
  add_common_options(gram, opt, true, true);
  CLI::App* markov = app.add_subcommand("markov", "Emit the Markov trace weights n_i / dim");
  add_common_options(markov, opt, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (app.count_all() > 0) {
    for (CLI::App* sub : {construct, verify, gram}) {
      if (sub->parsed()) {
        opt.backend_given = sub->count("--backend") > 0;
        opt.tol_given = sub->count("--tol") > 0;
      }
    }
  }

  try {
    if (exists->parsed()) return cmd_exists(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (gram->parsed()) return cmd_gram(opt);
    if (markov->parsed()) return cmd_markov(opt);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

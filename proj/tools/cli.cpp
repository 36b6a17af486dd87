// Copyright 2026 The so4exp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "so4exp/errors.hpp"
#include "so4exp/expm.hpp"
#include "so4exp/oracle.hpp"
#include "so4exp/xorshift.hpp"

namespace so4exp::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::int64_t ns_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

template <std::size_t N>
json residuals_json(const Matrix<double, N>& m) {
  const auto rep = is_special_orthogonal(m);
  return {{"determinant", rep.determinant}, {"orthogonality", rep.orthogonality()}};
}

RMat3 upper_block(const RMat4& x, double& leak) {
  RMat3 out{};
  leak = std::abs(x(3, 3) - 1.0);
  for (std::size_t i = 0; i < 3; ++i) {
    leak = std::max({leak, std::abs(x(i, 3)), std::abs(x(3, i))});
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = x(i, j);
  }
  return out;
}

RMat3 exp_so3_by(const SkewSo3& b, Method method) {
  switch (method) {
    case Method::kClosed:
      return exp_so3(b);
    case Method::kKron: {
      double leak = 0.0;
      const RMat3 r = upper_block(exp_so4_via_kron(embed_so3(b)), leak);
      if (!(leak <= 1e-10)) throw EmbeddingLeak("exp: fourth row/column residual", leak);
      return r;
    }
    case Method::kSeries:
      return oracle::taylor_exp(b.matrix());
  }
  return {};
}

RMat4 exp_so4_by(const SkewSo4& a, Method method) {
  switch (method) {
    case Method::kClosed:
      return exp_so4_closed(a);
    case Method::kKron:
      return exp_so4_via_kron(a);
    case Method::kSeries:
      return oracle::taylor_exp(a.matrix());
  }
  return {};
}

const SkewSo4& require_so4(const MatrixDocument& in, const char* cmd) {
  if (const auto* a = std::get_if<SkewSo4>(&in.value)) return *a;
  throw InputError(std::string("line 1: ") + cmd +
                   " expects so4_coeffs or so4_matrix input, got \"" + in.key + "\"");
}

const RMat4& require_mat4(const MatrixDocument& in, const char* cmd) {
  if (const auto* m = std::get_if<RMat4>(&in.value)) return *m;
  throw InputError(std::string("line 1: ") + cmd + " expects a 4x4 mat4 input, got \"" + in.key +
                   "\"");
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file \"" + path + "\"");
    buf << file.rdbuf();
  }
  return buf.str();
}

template <typename F>
double best_ns_per_op(const std::vector<SkewSo4>& samples, int repeats, F&& f,
                      std::vector<RMat4>& results) {
  results.resize(samples.size());
  double best = 0.0;
  for (int rep = 0; rep < std::max(repeats, 1); ++rep) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i) results[i] = f(samples[i]);
    const double per_op = static_cast<double>(ns_since(start)) / static_cast<double>(samples.size());
    best = rep == 0 ? per_op : std::min(best, per_op);
  }
  return best;
}

double max_deviation(const std::vector<RMat4>& x, const std::vector<RMat4>& y) {
  double dev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dev = std::max(dev, max_abs(x[i] - y[i]));
  return dev;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kClosed:
      return "closed";
    case Method::kKron:
      return "kron";
    case Method::kSeries:
      return "series";
  }
  return "?";
}

json exp_document(const MatrixDocument& in, Method method) {
  json doc;
  doc["method"] = method_name(method);
  if (const auto* a = std::get_if<SkewSo4>(&in.value)) {
    const auto start = Clock::now();
    const RMat4 x = exp_so4_by(*a, method);
    doc["elapsed_ns"] = ns_since(start);
    doc["result"] = matrix_to_json(x);
    doc["residuals"] = residuals_json(x);
    return doc;
  }
  if (const auto* b = std::get_if<SkewSo3>(&in.value)) {
    const auto start = Clock::now();
    const RMat3 x = exp_so3_by(*b, method);
    doc["elapsed_ns"] = ns_since(start);
    doc["result"] = matrix_to_json(x);
    doc["residuals"] = residuals_json(x);
    return doc;
  }
  throw InputError("line 1: exp expects so4_coeffs, so4_matrix or so3_coeffs input, got \"" +
                   in.key + "\"");
}

json decompose_document(const MatrixDocument& in, bool with_factors) {
  const SkewSo4& a = require_so4(in, "decompose");
  const auto start = Clock::now();
  const Su2Pair p = su2_pair_from_so4(a);
  json dec = {{"a", {p.a.x1, p.a.x2, p.a.x3}},
              {"b", {p.b.x1, p.b.x2, p.b.x3}},
              {"norm_a", p.a.norm()},
              {"norm_b", p.b.norm()}};
  if (with_factors) {
    dec["exp_ia"] = matrix_to_json(exp_su2(p.a));
    dec["exp_ib"] = matrix_to_json(exp_su2(p.b));
  }
  const RMat4 rebuilt = so4_from_su2_pair(p).matrix();
  json doc;
  doc["elapsed_ns"] = ns_since(start);
  doc["decomposition"] = std::move(dec);
  doc["method"] = "decompose";
  doc["result"] = matrix_to_json(rebuilt);
  return doc;
}

CheckOutcome check_document(const MatrixDocument& in, double tol) {
  if (!(tol > 0.0)) throw InputError("--tol must be positive");
  CheckOutcome out;
  const auto start = Clock::now();
  OrthogonalityReport rep;
  json result;
  if (const auto* m3 = std::get_if<RMat3>(&in.value)) {
    rep = is_special_orthogonal(*m3, tol);
    result = matrix_to_json(*m3);
  } else {
    const RMat4& m = require_mat4(in, "check");
    rep = is_special_orthogonal(m, tol);
    result = matrix_to_json(m);
  }
  out.passed = rep.ok;
  out.document["elapsed_ns"] = ns_since(start);
  out.document["method"] = "check";
  out.document["passed"] = rep.ok;
  out.document["residuals"] = {{"determinant", rep.determinant},
                               {"orthogonality", rep.orthogonality()}};
  out.document["result"] = std::move(result);
  return out;
}

json log_document(const MatrixDocument& in) {
  const RMat4& x = require_mat4(in, "log");
  const auto start = Clock::now();
  const SkewSo4 a = log_so4(x);
  const double round_trip = max_abs(exp_so4_closed(a) - x);
  json doc;
  doc["elapsed_ns"] = ns_since(start);
  doc["method"] = "log";
  doc["result"] = matrix_to_json(a.matrix());
  doc["round_trip_residual"] = round_trip;
  doc["so4_coeffs"] = coeffs_to_json(a);
  return doc;
}

std::vector<SkewSo4> bench_samples(std::size_t n, std::uint64_t seed, double range) {
  Xorshift64Star rng(seed);
  std::vector<SkewSo4> samples(n);
  for (auto& s : samples) {
    s.f12 = rng.uniform(-range, range);
    s.f13 = rng.uniform(-range, range);
    s.f14 = rng.uniform(-range, range);
    s.f23 = rng.uniform(-range, range);
    s.f24 = rng.uniform(-range, range);
    s.f34 = rng.uniform(-range, range);
  }
  return samples;
}

BenchReport run_bench(const BenchOptions& opts) {
  const auto samples = bench_samples(opts.n, opts.seed, opts.range);
  std::vector<RMat4> closed, kron, series;
  BenchReport r;
  r.options = opts;
  r.closed_ns = best_ns_per_op(samples, opts.repeats, [](const SkewSo4& a) {
    return exp_so4_closed(a);
  }, closed);
  r.kron_ns = best_ns_per_op(samples, opts.repeats, [](const SkewSo4& a) {
    return exp_so4_via_kron(a);
  }, kron);
  r.series_ns = best_ns_per_op(samples, opts.repeats, [](const SkewSo4& a) {
    return oracle::taylor_exp(a.matrix());
  }, series);
  r.max_dev_kron = max_deviation(closed, kron);
  r.max_dev_series = max_deviation(closed, series);
  r.passed = r.max_dev_kron <= kBenchDeviationLimit && r.max_dev_series <= kBenchDeviationLimit;
  return r;
}

json bench_to_json(const BenchReport& r) {
  return {{"max_deviation", {{"kron", r.max_dev_kron}, {"series", r.max_dev_series}}},
          {"n", r.options.n},
          {"ns_per_op", {{"closed", r.closed_ns}, {"kron", r.kron_ns}, {"series", r.series_ns}}},
          {"passed", r.passed},
          {"prng", Xorshift64Star::kName},
          {"range", r.options.range},
          {"seed", r.options.seed},
          {"speedup_vs_series", r.series_ns / r.closed_ns}};
}

std::string bench_to_text(const BenchReport& r) {
  std::ostringstream os;
  os << "so4exp bench: n=" << r.options.n << " seed=" << r.options.seed
     << " range=" << r.options.range << " prng=" << Xorshift64Star::kName << '\n'
     << "  closed  " << fmt("%10.1f", r.closed_ns) << " ns/op\n"
     << "  kron    " << fmt("%10.1f", r.kron_ns) << " ns/op\n"
     << "  series  " << fmt("%10.1f", r.series_ns) << " ns/op\n"
     << "  closed vs series speedup: " << fmt("%.2f", r.series_ns / r.closed_ns) << "x\n"
     << "  max deviation from closed: kron " << fmt("%.3g", r.max_dev_kron) << ", series "
     << fmt("%.3g", r.max_dev_series) << " (limit 1e-10) " << (r.passed ? "PASS" : "FAIL")
     << '\n';
  return os.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Closed-form exponential and logarithm on so(4) and so(3)", "so4exp"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string method = "closed";
  auto* exp_cmd = app.add_subcommand("exp", "Exponentiate an so(4) or so(3) element");
  exp_cmd->add_option("--method", method, "closed | kron | series")
      ->check(CLI::IsMember({"closed", "kron", "series"}));
  exp_cmd->add_option("--input", input, "Input JSON path, or - for stdin");

  bool with_factors = false;
  auto* dec_cmd = app.add_subcommand("decompose", "Split so(4) into its su(2) (+) su(2) parts");
  dec_cmd->add_flag("--with-factors", with_factors, "Also emit e^{ia} and e^{ib}");
  dec_cmd->add_option("--input", input, "Input JSON path, or - for stdin");

  double tol = kDefaultOrthogonalityTol;
  auto* check_cmd = app.add_subcommand("check", "Test SO(4) membership");
  check_cmd->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  check_cmd->add_option("--input", input, "Input JSON path, or - for stdin");

  auto* log_cmd = app.add_subcommand("log", "Logarithm of an SO(4) element");
  log_cmd->add_option("--input", input, "Input JSON path, or - for stdin");

  BenchOptions bench;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form vs kron vs series");
  bench_cmd->add_option("--n", bench.n, "Sample count")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "xorshift64* seed");
  bench_cmd->add_option("--range", bench.range, "Coefficients are uniform in [-R, R)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", bench_json, "Emit a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (bench_cmd->parsed()) {
      const BenchReport r = run_bench(bench);
      out << (bench_json ? to_canonical_json(bench_to_json(r)) : bench_to_text(r));
      return r.passed ? kExitOk : kExitCheckFailed;
    }

    const MatrixDocument doc = parse_matrix_document(read_input(input, in));
    if (exp_cmd->parsed()) {
      const Method m = method == "kron" ? Method::kKron
                       : method == "series" ? Method::kSeries
                                            : Method::kClosed;
      out << to_canonical_json(exp_document(doc, m));
      return kExitOk;
    }
    if (dec_cmd->parsed()) {
      out << to_canonical_json(decompose_document(doc, with_factors));
      return kExitOk;
    }
    if (check_cmd->parsed()) {
      const CheckOutcome c = check_document(doc, tol);
      out << to_canonical_json(c.document);
      return c.passed ? kExitOk : kExitCheckFailed;
    }
    if (log_cmd->parsed()) {
      try {
        out << to_canonical_json(log_document(doc));
        return kExitOk;
      } catch (const NotSpecialOrthogonal& e) {
        err << "so4exp log: NotSpecialOrthogonal: " << e.what() << '\n';
        return kExitCheckFailed;
      } catch (const NotAKroneckerProduct& e) {
        err << "so4exp log: NotAKroneckerProduct: " << e.what() << '\n';
        return kExitCheckFailed;
      }
    }
  } catch (const InputError& e) {
    err << "so4exp: input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "so4exp: internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace so4exp::cli

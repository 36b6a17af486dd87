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

// Acceptance suite. Prints one PASS/FAIL line per criterion with the measured
// value next to its threshold, and exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "so4exp/so4exp.hpp"

#ifndef SO4EXP_CLI_PATH
#error "SO4EXP_CLI_PATH must point at the so4exp executable"
#endif

using namespace so4exp;
using nlohmann::json;

namespace {

constexpr Complex kI{0.0, 1.0};

struct Criterion {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Criterion> g_results;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void report(int id, const std::string& name, bool passed, const std::string& detail) {
  g_results.push_back({id, name, passed, detail});
  std::printf("[%s] %2d  %-34s %s\n", passed ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string bound(const std::string& label, double measured, double limit) {
  return label + " " + sci(measured) + (measured <= limit ? " <= " : " > ") + sci(limit);
}

const std::vector<SkewSo4>& ensemble() {
  static const std::vector<SkewSo4> samples = cli::bench_samples(1000, 20111009, 5.0);
  return samples;
}

Su2Vec random_su2vec(Xorshift64Star& rng, double range) {
  return {rng.uniform(-range, range), rng.uniform(-range, range), rng.uniform(-range, range)};
}

Su2Vec random_direction(Xorshift64Star& rng, double length) {
  Su2Vec v;
  do {
    v = random_su2vec(rng, 1.0);
  } while (v.norm() < 1e-3 || v.norm() > 1.0);
  return (length / v.norm()) * v;
}

double coeff_diff(const SkewSo4& x, const SkewSo4& y) {
  double m = 0.0;
  const auto cx = x.coeffs();
  const auto cy = y.coeffs();
  for (std::size_t i = 0; i < 6; ++i) m = std::max(m, std::abs(cx[i] - cy[i]));
  return m;
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void closed_vs_series() {
  const auto start = std::chrono::steady_clock::now();
  double dev = 0.0;
  for (const auto& a : ensemble()) {
    dev = std::max(dev, max_abs(exp_so4_closed(a) - oracle::taylor_exp(a.matrix())));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, "closed form vs series", dev <= 1e-10,
         bound("max dev", dev, 1e-10) + " (" + sci(secs) + " s)");
}

void closed_vs_kron() {
  double dev = 0.0;
  for (const auto& a : ensemble()) dev = std::max(dev, max_abs(exp_so4_closed(a) - exp_so4_via_kron(a)));
  report(2, "closed form vs R^dag(e^ia x e^ib)R", dev <= 1e-13, bound("max dev", dev, 1e-13));
}

void group_membership() {
  bool all_ok = true;
  double orth = 0.0;
  double det = 0.0;
  for (const auto& a : ensemble()) {
    const auto rep = is_special_orthogonal(exp_so4_closed(a), 1e-12);
    all_ok = all_ok && rep.ok;
    orth = std::max(orth, rep.orthogonality());
    det = std::max(det, rep.determinant);
  }
  report(3, "exp lands in SO(4)", all_ok && det <= 1e-12,
         bound("orth", orth, 1e-12) + ", " + bound("det", det, 1e-12));
}

void algebra_isomorphism() {
  Xorshift64Star rng(4);
  const CMat2 id = CMat2::identity();
  double dev = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const SkewSo4 a{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                    rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Su2Pair p = su2_pair_from_so4(a);
    const CMat4 rhs =
        kI * (kron2(su2vec_to_matrix(p.a), id) + kron2(id, su2vec_to_matrix(p.b)));
    dev = std::max(dev, max_abs(conjugate_so4_to_local(a) - rhs));
  }
  report(4, "R A R^dag = i(a x 1 + 1 x b)", dev <= 1e-14, bound("max dev", dev, 1e-14));
}

void linear_round_trip() {
  Xorshift64Star rng(5);
  double dev_so4 = 0.0;
  double dev_pair = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const SkewSo4 a{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10),
                    rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)};
    dev_so4 = std::max(dev_so4, coeff_diff(so4_from_su2_pair(su2_pair_from_so4(a)), a));

    const Su2Pair p{random_su2vec(rng, 10.0), random_su2vec(rng, 10.0)};
    const Su2Pair q = su2_pair_from_so4(so4_from_su2_pair(p));
    dev_pair = std::max({dev_pair, std::abs(q.a.x1 - p.a.x1), std::abs(q.a.x2 - p.a.x2),
                         std::abs(q.a.x3 - p.a.x3), std::abs(q.b.x1 - p.b.x1),
                         std::abs(q.b.x2 - p.b.x2), std::abs(q.b.x3 - p.b.x3)});
  }
  const bool ok = dev_so4 <= 1e-15 && dev_pair <= 1e-15;
  report(5, "linear maps are inverse", ok,
         bound("so4->pair->so4", dev_so4, 1e-15) + ", " + bound("pair->so4->pair", dev_pair, 1e-15));
}

void homomorphism() {
  Xorshift64Star rng(6);
  double dev = 0.0;
  for (int n = 0; n < 200; ++n) {
    const LocalUnitaryPair x{exp_su2(random_su2vec(rng, 4.0)), exp_su2(random_su2vec(rng, 4.0))};
    const LocalUnitaryPair y{exp_su2(random_su2vec(rng, 4.0)), exp_su2(random_su2vec(rng, 4.0))};
    dev = std::max(dev, max_abs(group_iso_F({x.p * y.p, x.q * y.q}) - group_iso_F(x) * group_iso_F(y)));
  }
  report(6, "F is a homomorphism", dev <= 1e-12, bound("max dev", dev, 1e-12));
}

void so3_exercise() {
  Xorshift64Star rng(7);
  double dev = 0.0;
  double leak = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Su2Vec v = random_direction(rng, rng.uniform(0.0, 20.0));
    const SkewSo3 b{v.x1, v.x2, v.x3};
    const So3Exp e = exp_so3_detailed(b);
    dev = std::max(dev, max_abs(e.rotation - oracle::rodrigues_so3(b)));
    leak = std::max(leak, e.leak);
  }
  report(7, "so(3) by embedding vs Rodrigues", dev <= 1e-12 && leak <= 1e-13,
         bound("max dev", dev, 1e-12) + ", " + bound("leak", leak, 1e-13));
}

void log_round_trip() {
  std::vector<SkewSo4> cases = ensemble();
  Xorshift64Star rng(8);
  const double pi = std::numbers::pi;
  for (int n = 0; n < 25; ++n) {
    const Su2Vec other = random_su2vec(rng, 3.0);
    const Su2Vec near_zero = random_direction(rng, rng.uniform(0.0, 1e-6));
    const Su2Vec near_pi = random_direction(rng, pi + rng.uniform(-1e-6, 1e-6));
    cases.push_back(so4_from_su2_pair({near_zero, other}));
    cases.push_back(so4_from_su2_pair({other, near_zero}));
    cases.push_back(so4_from_su2_pair({near_pi, other}));
    cases.push_back(so4_from_su2_pair({other, near_pi}));
  }
  double dev = 0.0;
  for (const auto& a : cases) {
    const RMat4 x = exp_so4_closed(a);
    dev = std::max(dev, max_abs(exp_so4_closed(log_so4(x)) - x));
  }
  report(8, "exp(log(X)) = X", dev <= 1e-10,
         bound("max dev", dev, 1e-10) + " over " + std::to_string(cases.size()) + " cases");
}

void self_dual() {
  std::size_t inexact = 0;
  double sum_dev = 0.0;
  double comm = 0.0;
  double factor = 0.0;
  for (const auto& a : ensemble()) {
    const auto [sd, asd] = self_dual_split(a);
    if (!(sd + asd == a)) ++inexact;
    sum_dev = std::max(sum_dev, coeff_diff(sd + asd, a));
    const RMat4 ms = sd.matrix();
    const RMat4 ma = asd.matrix();
    comm = std::max(comm, max_abs(ms * ma - ma * ms));
    factor = std::max(factor, max_abs(exp_so4_closed(a) - exp_so4_closed(sd) * exp_so4_closed(asd)));
  }
  const bool ok = inexact == 0 && comm <= 1e-14 && factor <= 1e-12;
  report(9, "self-dual split", ok,
         "sum exact in " + std::to_string(ensemble().size() - inexact) + "/" +
             std::to_string(ensemble().size()) + " (max dev " + sci(sum_dev) + "), " +
             bound("[sd,asd]", comm, 1e-14) + ", " + bound("exp factor", factor, 1e-12));
}

void bench_performance(const std::filesystem::path& tmp) {
  const auto out = tmp / "bench.json";
  const int code = shell(std::string("'") + SO4EXP_CLI_PATH +
                         "' bench --n 10000 --seed 42 --range 5 --json > '" + out.string() + "'");
  bool ok = code == 0;
  std::string detail = "exit " + std::to_string(code);
  try {
    const json doc = json::parse(slurp(out));
    const double closed = doc.at("ns_per_op").at("closed").get<double>();
    const double series = doc.at("ns_per_op").at("series").get<double>();
    const double dev = std::max(doc.at("max_deviation").at("kron").get<double>(),
                                doc.at("max_deviation").at("series").get<double>());
    ok = ok && closed < series && dev <= 1e-10;
    char buf[160];
    std::snprintf(buf, sizeof buf, ", closed %.1f ns/op vs series %.1f ns/op (%.2fx), ", closed,
                  series, series / closed);
    detail += buf + bound("max dev", dev, 1e-10);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string(", bad report: ") + e.what();
  }
  report(10, "bench: closed faster than series", ok, detail);
}

void cli_pipeline(const std::filesystem::path& tmp) {
  const std::string exe = std::string("'") + SO4EXP_CLI_PATH + "'";
  const auto in = tmp / "in.json";
  const auto mid = tmp / "exp.json";
  const auto bad = tmp / "bad.json";
  const auto refl = tmp / "reflection.json";
  std::ofstream(in) << R"({"so4_coeffs": {"f12": 1, "f13": 2, "f14": -3, "f23": 0.5, "f24": 4, "f34": -1}})";
  std::ofstream(bad) << "{\"so4_coeffs\": {\"f12\": 1,";
  std::ofstream(refl) << R"({"mat4": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,-1]]})";

  const int exp_code = shell(exe + " exp --input '" + in.string() + "' > '" + mid.string() + "'");
  const int pipe_code = shell(exe + " exp < '" + in.string() + "' | " + exe + " check > /dev/null");
  const int file_code = shell(exe + " check --input '" + mid.string() + "' > /dev/null");
  const int bad_code = shell(exe + " exp --input '" + bad.string() + "' > /dev/null 2>&1");
  const int refl_code = shell(exe + " check < '" + refl.string() + "' > /dev/null");

  const bool ok = exp_code == 0 && pipe_code == 0 && file_code == 0 && bad_code == 2 && refl_code == 1;
  report(11, "CLI exit codes", ok,
         "exp " + std::to_string(exp_code) + ", exp|check " + std::to_string(pipe_code) +
             " (want 0), malformed " + std::to_string(bad_code) + " (want 2), reflection " +
             std::to_string(refl_code) + " (want 1)");
}

}  // namespace

int main() {
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("so4exp_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);

  const std::vector<std::function<void()>> checks = {
      closed_vs_series, closed_vs_kron,   group_membership, algebra_isomorphism,
      linear_round_trip, homomorphism,    so3_exercise,     log_round_trip,
      self_dual,        [&] { bench_performance(tmp); }, [&] { cli_pipeline(tmp); }};
  for (const auto& check : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      report(static_cast<int>(g_results.size()) + 1, "exception", false, e.what());
    }
  }
  std::filesystem::remove_all(tmp);

  std::size_t failed = 0;
  for (const auto& r : g_results) failed += r.passed ? 0 : 1;
  std::printf("%zu/%zu criteria passed\n", g_results.size() - failed, g_results.size());
  return failed == 0 ? 0 : 1;
}

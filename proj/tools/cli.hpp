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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "document.hpp"

namespace so4exp::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitInternalError = 3,
};

enum class Method { kClosed, kKron, kSeries };

const char* method_name(Method m);

nlohmann::json exp_document(const MatrixDocument& in, Method method);
nlohmann::json decompose_document(const MatrixDocument& in, bool with_factors);

struct CheckOutcome {
  nlohmann::json document;
  bool passed = false;
};
CheckOutcome check_document(const MatrixDocument& in, double tol);

nlohmann::json log_document(const MatrixDocument& in);

struct BenchOptions {
  std::size_t n = 1000;
  std::uint64_t seed = 42;
  double range = 5.0;
  int repeats = 3;  // timing passes per method; the fastest is reported
};

struct BenchReport {
  BenchOptions options;
  double closed_ns = 0.0;
  double kron_ns = 0.0;
  double series_ns = 0.0;
  double max_dev_kron = 0.0;
  double max_dev_series = 0.0;
  bool passed = false;  // both deviations <= kBenchDeviationLimit
};

inline constexpr double kBenchDeviationLimit = 1e-10;

/// Samples f12, f13, f14, f23, f24, f34 (in that order per sample) uniformly
/// in [-range, range) from Xorshift64Star(seed).
std::vector<SkewSo4> bench_samples(std::size_t n, std::uint64_t seed, double range);

BenchReport run_bench(const BenchOptions& opts);
nlohmann::json bench_to_json(const BenchReport& r);
std::string bench_to_text(const BenchReport& r);

/// Entry point shared by main() and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace so4exp::cli

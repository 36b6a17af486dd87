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

#include "so4exp/oracle.hpp"

namespace so4exp::oracle {

double one_minus_cos_over_sq(double t) {
  if (t < kSincTaylorThreshold) return 0.5 - t * t / 24.0;
  // 1 - cos t = 2 sin^2(t/2) avoids the cancellation near zero.
  const double h = sinc(0.5 * t);
  return 0.5 * h * h;
}

RMat3 rodrigues_so3(const SkewSo3& b) {
  const double theta = std::sqrt(b.a * b.a + b.b * b.b + b.c * b.c);
  const RMat3 m = b.matrix();
  return RMat3::identity() + sinc(theta) * m + one_minus_cos_over_sq(theta) * (m * m);
}

}  // namespace so4exp::oracle

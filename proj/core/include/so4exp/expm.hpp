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

#include "so4exp/magic.hpp"
#include "so4exp/mat_core.hpp"

namespace so4exp {

/// Below this argument sinc switches to 1 - t^2/6 + t^4/120.
inline constexpr double kSincTaylorThreshold = 1e-4;

/// sin(t)/t with sinc(0) = 1. Expects t >= 0.
double sinc(double t);

/// e^{iX} = cos|X| 1 + sinc(|X|) iX for X = x1 s1 + x2 s2 + x3 s3.
CMat2 exp_su2(const Su2Vec& x);

/// e^A from the sixteen closed-form entries in terms of the self-dual and
/// anti-self-dual parts (a, b) of A. Regular at |a| = 0 and |b| = 0.
RMat4 exp_so4_closed(const SkewSo4& a);

/// e^A = R^dag (e^{ia} (x) e^{ib}) R, evaluated numerically. Independent of
/// exp_so4_closed except for the shared (a, b) split and exp_su2.
/// Throws NonRealResult if the product has an imaginary part above 1e-10.
RMat4 exp_so4_via_kron(const SkewSo4& a);

/// B = [[0, a, c], [-a, 0, b], [-c, -b, 0]].
struct SkewSo3 {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  RMat3 matrix() const;

  friend constexpr bool operator==(const SkewSo3&, const SkewSo3&) = default;
};

/// diag(B, 0) as an element of so(4).
SkewSo4 embed_so3(const SkewSo3& b);

struct So3Exp {
  RMat3 rotation;
  double leak = 0.0;  // max deviation of the 4th row/column from (0, 0, 0, 1)
};

/// e^B read off the upper-left block of exp_so4_closed(diag(B, 0)).
/// Throws EmbeddingLeak if the leak exceeds 1e-10.
So3Exp exp_so3_detailed(const SkewSo3& b);
RMat3 exp_so3(const SkewSo3& b);

enum class LogPolicy {
  kResolveAxis,  // angle-pi factors get a deterministic axis
  kStrict,       // angle-pi factors raise AxisUndetermined
};

/// Principal logarithm of an SU(2) element: X with e^{iX} = u and |X| in
/// [0, pi]. Near |X| = pi the axis comes from the dominant Pauli component,
/// falling back to (1, 0, 0).
Su2Vec log_su2(const CMat2& u, LogPolicy policy = LogPolicy::kResolveAxis);

/// Some A with exp_so4_closed(A) = x. Not a two-sided inverse of the
/// exponential: the sign chosen for the SU(2) factors picks the branch.
/// Throws NotSpecialOrthogonal (1e-10 check) or NotAKroneckerProduct.
SkewSo4 log_so4(const RMat4& x, LogPolicy policy = LogPolicy::kResolveAxis);

}  // namespace so4exp

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

#include <array>
#include <utility>

#include "so4exp/mat_core.hpp"

namespace so4exp {

/// Element of so(4) stored by its six plane coefficients. The matrix has
/// f_ij above the diagonal, -f_ij below it and zeros on the diagonal.
struct SkewSo4 {
  double f12 = 0.0;
  double f13 = 0.0;
  double f14 = 0.0;
  double f23 = 0.0;
  double f24 = 0.0;
  double f34 = 0.0;

  RMat4 matrix() const;

  /// Reads the strict upper triangle; the lower triangle is ignored.
  static SkewSo4 from_upper(const RMat4& m);

  std::array<double, 6> coeffs() const { return {f12, f13, f14, f23, f24, f34}; }

  friend constexpr bool operator==(const SkewSo4&, const SkewSo4&) = default;
};

constexpr SkewSo4 operator+(const SkewSo4& x, const SkewSo4& y) {
  return {x.f12 + y.f12, x.f13 + y.f13, x.f14 + y.f14,
          x.f23 + y.f23, x.f24 + y.f24, x.f34 + y.f34};
}
constexpr SkewSo4 operator*(double s, const SkewSo4& x) {
  return {s * x.f12, s * x.f13, s * x.f14, s * x.f23, s * x.f24, s * x.f34};
}
constexpr SkewSo4 operator-(const SkewSo4& x) { return -1.0 * x; }

/// The pair (a, b) with A = R^dag i(a (x) 1 + 1 (x) b) R. `a` is the
/// self-dual part of A and `b` the anti-self-dual part.
struct Su2Pair {
  Su2Vec a;
  Su2Vec b;

  friend constexpr bool operator==(const Su2Pair&, const Su2Pair&) = default;
};

/// P (x) Q with P, Q in SU(2).
struct LocalUnitaryPair {
  CMat2 p;
  CMat2 q;
};

/// True iff m is unitary with unit determinant, both within tol.
bool is_su2(const CMat2& m, double tol = 1e-12);

/// Bell state |Psi_k>, k in {1..4}, in the (|00>, |01>, |10>, |11>) order.
std::array<Complex, 4> bell_state(int k);

/// The magic matrix R = (|Psi1>, -i|Psi2>, -|Psi3>, -i|Psi4>).
const CMat4& magic_matrix();

Su2Pair su2_pair_from_so4(const SkewSo4& a);
SkewSo4 so4_from_su2_pair(const Su2Pair& p);

/// R A R^dag, evaluated by matrix multiplication.
CMat4 conjugate_so4_to_local(const SkewSo4& a);

/// R^dag (P (x) Q) R. Throws NonRealResult when an imaginary part exceeds
/// 1e-10 and NotSpecialOrthogonal when the real part fails the 1e-12 check.
RMat4 group_iso_F(const LocalUnitaryPair& p);

/// Splits T = P (x) Q back into SU(2) factors.
///
/// The largest 2x2 block of T seeds Q (scaled to unit determinant), the
/// entries of P are read off as <Q, block_ij> / 2, and both factors are
/// projected onto SU(2). The sign of (P, Q) is fixed so that the first entry
/// of P with magnitude above 1/2 has nonnegative real part (nonnegative
/// imaginary part when the real part is exactly zero).
///
/// Throws NotAKroneckerProduct if the reconstruction residual exceeds 1e-8.
LocalUnitaryPair factor_local_gate(const CMat4& t);

/// (A_sd, A_asd): the images of (a, 0) and (0, b).
std::pair<SkewSo4, SkewSo4> self_dual_split(const SkewSo4& a);

struct OrthogonalityReport {
  bool ok = false;
  double left = 0.0;         // max_abs(M^t M - I)
  double right = 0.0;        // max_abs(M M^t - I)
  double determinant = 0.0;  // |det M - 1|

  double orthogonality() const { return left > right ? left : right; }
};

inline constexpr double kDefaultOrthogonalityTol = 1e-12;

OrthogonalityReport is_special_orthogonal(const RMat4& m, double tol = kDefaultOrthogonalityTol);
OrthogonalityReport is_special_orthogonal(const RMat3& m, double tol = kDefaultOrthogonalityTol);

}  // namespace so4exp

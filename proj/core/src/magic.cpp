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

#include "so4exp/magic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "so4exp/errors.hpp"

namespace so4exp {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

constexpr double kImagResidualLimit = 1e-10;
constexpr double kFactorResidualLimit = 1e-8;

CMat4 build_magic_matrix() {
  CMat4 r{};
  r(0, 0) = kInvSqrt2;
  r(0, 3) = -kI * kInvSqrt2;
  r(1, 1) = -kI * kInvSqrt2;
  r(1, 2) = -kInvSqrt2;
  r(2, 1) = -kI * kInvSqrt2;
  r(2, 2) = kInvSqrt2;
  r(3, 0) = kInvSqrt2;
  r(3, 3) = kI * kInvSqrt2;
  return r;
}

CMat2 block(const CMat4& t, std::size_t bi, std::size_t bj) {
  CMat2 b{};
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) b(k, l) = t(2 * bi + k, 2 * bj + l);
  return b;
}

double frobenius_sq(const CMat2& m) {
  double s = 0.0;
  for (const auto& v : m.data) s += std::norm(v);
  return s;
}

// Nearest matrix of the form [[alpha, beta], [-conj(beta), conj(alpha)]],
// rescaled to unit determinant.
CMat2 project_su2(const CMat2& m, double residual_hint) {
  const Complex alpha = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
  const Complex beta = 0.5 * (m(0, 1) - std::conj(m(1, 0)));
  const double scale = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw NotAKroneckerProduct("factor_local_gate: factor has no SU(2) component", residual_hint);
  }
  CMat2 out{};
  out(0, 0) = alpha / scale;
  out(0, 1) = beta / scale;
  out(1, 0) = -std::conj(beta) / scale;
  out(1, 1) = std::conj(alpha) / scale;
  return out;
}

template <std::size_t N>
OrthogonalityReport check_special_orthogonal(const Matrix<double, N>& m, double tol, double det) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("is_special_orthogonal: tol must be positive");
  }
  const auto id = Matrix<double, N>::identity();
  OrthogonalityReport rep;
  rep.left = max_abs(transpose(m) * m - id);
  rep.right = max_abs(m * transpose(m) - id);
  rep.determinant = std::abs(det - 1.0);
  // NaN residuals compare false and therefore fail.
  rep.ok = rep.left <= tol && rep.right <= tol && rep.determinant <= tol;
  return rep;
}

}  // namespace

RMat4 SkewSo4::matrix() const {
  RMat4 m{};
  m(0, 1) = f12;
  m(0, 2) = f13;
  m(0, 3) = f14;
  m(1, 2) = f23;
  m(1, 3) = f24;
  m(2, 3) = f34;
  m(1, 0) = -f12;
  m(2, 0) = -f13;
  m(3, 0) = -f14;
  m(2, 1) = -f23;
  m(3, 1) = -f24;
  m(3, 2) = -f34;
  return m;
}

SkewSo4 SkewSo4::from_upper(const RMat4& m) {
  return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
}

bool is_su2(const CMat2& m, double tol) {
  const double unitary = max_abs(adjoint(m) * m - CMat2::identity());
  const double det = std::abs(det2(m) - 1.0);
  return unitary <= tol && det <= tol;
}

std::array<Complex, 4> bell_state(int k) {
  switch (k) {
    case 1:
      return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    case 2:
      return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
    case 3:
      return {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
    case 4:
      return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
    default:
      throw std::out_of_range("bell_state: index must be in 1..4, got " + std::to_string(k));
  }
}

const CMat4& magic_matrix() {
  static const CMat4 r = build_magic_matrix();
  return r;
}

Su2Pair su2_pair_from_so4(const SkewSo4& m) {
  Su2Pair p;
  p.a.x1 = (m.f12 + m.f34) / 2;
  p.a.x2 = (m.f13 - m.f24) / 2;
  p.a.x3 = (m.f14 + m.f23) / 2;
  p.b.x1 = (m.f12 - m.f34) / 2;
  p.b.x2 = -(m.f13 + m.f24) / 2;
  p.b.x3 = (m.f14 - m.f23) / 2;
  return p;
}

SkewSo4 so4_from_su2_pair(const Su2Pair& p) {
  const Su2Vec& a = p.a;
  const Su2Vec& b = p.b;
  SkewSo4 m;
  m.f12 = a.x1 + b.x1;
  m.f13 = a.x2 - b.x2;
  m.f14 = a.x3 + b.x3;
  m.f23 = a.x3 - b.x3;
  m.f24 = -(a.x2 + b.x2);
  m.f34 = a.x1 - b.x1;
  return m;
}

CMat4 conjugate_so4_to_local(const SkewSo4& a) {
  const CMat4& r = magic_matrix();
  return r * to_complex(a.matrix()) * adjoint(r);
}

RMat4 group_iso_F(const LocalUnitaryPair& p) {
  const CMat4& r = magic_matrix();
  const CMat4 m = adjoint(r) * kron2(p.p, p.q) * r;
  const double imag = max_abs(imag_part(m));
  if (!(imag <= kImagResidualLimit)) {
    throw NonRealResult("group_iso_F: imaginary residual " + std::to_string(imag) +
                            " (input is not in SU(2) x SU(2))",
                        imag);
  }
  const RMat4 x = real_part(m);
  const auto rep = is_special_orthogonal(x);
  if (!rep.ok) {
    throw NotSpecialOrthogonal("group_iso_F: result fails the SO(4) check (orthogonality " +
                               std::to_string(rep.orthogonality()) + ", determinant " +
                               std::to_string(rep.determinant) + ")");
  }
  return x;
}

LocalUnitaryPair factor_local_gate(const CMat4& t) {
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const double n = frobenius_sq(block(t, i, j));
      if (n > best) {
        best = n;
        best_i = i;
        best_j = j;
      }
    }
  }

  const CMat2 seed = block(t, best_i, best_j);
  const Complex det = det2(seed);
  if (!(std::abs(det) > 1e-300) || !all_finite(t)) {
    throw NotAKroneckerProduct("factor_local_gate: seed block is singular", max_abs(t));
  }
  const CMat2 q = project_su2((1.0 / std::sqrt(det)) * seed, max_abs(t));

  CMat2 p{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const CMat2 b = block(t, i, j);
      Complex overlap = 0.0;
      for (std::size_t k = 0; k < 4; ++k) overlap += std::conj(q.data[k]) * b.data[k];
      p(i, j) = overlap / 2.0;
    }
  }
  p = project_su2(p, max_abs(t));

  // The pair is only defined up to a joint sign.
  CMat2 q_out = q;
  for (const auto& v : p.data) {
    if (std::abs(v) > 0.5) {
      if (v.real() < 0.0 || (v.real() == 0.0 && v.imag() < 0.0)) {
        p = -p;
        q_out = -q_out;
      }
      break;
    }
  }

  const double residual = max_abs(kron2(p, q_out) - t);
  if (!(residual <= kFactorResidualLimit)) {
    throw NotAKroneckerProduct(
        "factor_local_gate: residual " + std::to_string(residual) + " exceeds 1e-8", residual);
  }
  return {p, q_out};
}

std::pair<SkewSo4, SkewSo4> self_dual_split(const SkewSo4& a) {
  const Su2Pair p = su2_pair_from_so4(a);
  return {so4_from_su2_pair({p.a, Su2Vec{}}), so4_from_su2_pair({Su2Vec{}, p.b})};
}

OrthogonalityReport is_special_orthogonal(const RMat4& m, double tol) {
  return check_special_orthogonal(m, tol, det4_real(m));
}

OrthogonalityReport is_special_orthogonal(const RMat3& m, double tol) {
  return check_special_orthogonal(m, tol, det3_real(m));
}

}  // namespace so4exp

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

#include "so4exp/expm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "so4exp/errors.hpp"

namespace so4exp {

namespace {

constexpr double kImagResidualLimit = 1e-10;
constexpr double kLeakLimit = 1e-10;
constexpr double kAxisPiWindow = 1e-12;

}  // namespace

double sinc(double t) {
  if (t < kSincTaylorThreshold) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

CMat2 exp_su2(const Su2Vec& x) {
  const double n = x.norm();
  const double c = std::cos(n);
  const double s = sinc(n);
  CMat2 u{};
  u(0, 0) = Complex(c, s * x.x3);
  u(0, 1) = Complex(s * x.x2, s * x.x1);   // s i (x1 - i x2)
  u(1, 0) = Complex(-s * x.x2, s * x.x1);  // s i (x1 + i x2)
  u(1, 1) = Complex(c, -s * x.x3);
  return u;
}

RMat4 exp_so4_closed(const SkewSo4& m) {
  const Su2Pair p = su2_pair_from_so4(m);
  const double a1 = p.a.x1, a2 = p.a.x2, a3 = p.a.x3;
  const double b1 = p.b.x1, b2 = p.b.x2, b3 = p.b.x3;

  const double ca = std::cos(p.a.norm());
  const double cb = std::cos(p.b.norm());
  const double sa = sinc(p.a.norm());  // sin|a| / |a|
  const double sb = sinc(p.b.norm());

  const double cc = ca * cb;
  const double ss = sa * sb;
  const double ca_sb = ca * sb;
  const double sa_cb = sa * cb;

  const double a1b1 = a1 * b1, a1b2 = a1 * b2, a1b3 = a1 * b3;
  const double a2b1 = a2 * b1, a2b2 = a2 * b2, a2b3 = a2 * b3;
  const double a3b1 = a3 * b1, a3b2 = a3 * b2, a3b3 = a3 * b3;

  RMat4 x{};
  x(0, 0) = cc - ss * (a1b1 - a2b2 + a3b3);
  x(1, 0) = -ca_sb * b1 - sa_cb * a1 + ss * (a2b3 + a3b2);
  x(2, 0) = ca_sb * b2 - sa_cb * a2 - ss * (a1b3 - a3b1);
  x(3, 0) = -ca_sb * b3 - sa_cb * a3 - ss * (a1b2 + a2b1);

  x(0, 1) = ca_sb * b1 + sa_cb * a1 + ss * (a2b3 + a3b2);
  x(1, 1) = cc - ss * (a1b1 + a2b2 - a3b3);
  x(2, 1) = ca_sb * b3 - sa_cb * a3 + ss * (a1b2 - a2b1);
  x(3, 1) = ca_sb * b2 + sa_cb * a2 - ss * (a1b3 + a3b1);

  x(0, 2) = -ca_sb * b2 + sa_cb * a2 - ss * (a1b3 - a3b1);
  x(1, 2) = -ca_sb * b3 + sa_cb * a3 + ss * (a1b2 - a2b1);
  x(2, 2) = cc + ss * (a1b1 + a2b2 + a3b3);
  x(3, 2) = ca_sb * b1 - sa_cb * a1 - ss * (a2b3 - a3b2);

  x(0, 3) = ca_sb * b3 + sa_cb * a3 - ss * (a1b2 + a2b1);
  x(1, 3) = -ca_sb * b2 - sa_cb * a2 - ss * (a1b3 + a3b1);
  x(2, 3) = -ca_sb * b1 + sa_cb * a1 - ss * (a2b3 - a3b2);
  x(3, 3) = cc + ss * (a1b1 - a2b2 - a3b3);
  return x;
}

RMat4 exp_so4_via_kron(const SkewSo4& m) {
  const Su2Pair p = su2_pair_from_so4(m);
  const CMat4 t = kron2(exp_su2(p.a), exp_su2(p.b));
  const CMat4& r = magic_matrix();
  const CMat4 x = adjoint(r) * t * r;
  const double imag = max_abs(imag_part(x));
  if (!(imag <= kImagResidualLimit)) {
    throw NonRealResult("exp_so4_via_kron: imaginary residual " + std::to_string(imag), imag);
  }
  return real_part(x);
}

RMat3 SkewSo3::matrix() const {
  RMat3 m{};
  m(0, 1) = a;
  m(0, 2) = c;
  m(1, 2) = b;
  m(1, 0) = -a;
  m(2, 0) = -c;
  m(2, 1) = -b;
  return m;
}

SkewSo4 embed_so3(const SkewSo3& b) {
  SkewSo4 m;
  m.f12 = b.a;
  m.f13 = b.c;
  m.f23 = b.b;
  return m;
}

So3Exp exp_so3_detailed(const SkewSo3& b) {
  const RMat4 x = exp_so4_closed(embed_so3(b));
  So3Exp out;
  for (std::size_t i = 0; i < 3; ++i) {
    out.leak = std::max({out.leak, std::abs(x(i, 3)), std::abs(x(3, i))});
    for (std::size_t j = 0; j < 3; ++j) out.rotation(i, j) = x(i, j);
  }
  out.leak = std::max(out.leak, std::abs(x(3, 3) - 1.0));
  if (!(out.leak <= kLeakLimit)) {
    throw EmbeddingLeak("exp_so3: fourth row/column residual " + std::to_string(out.leak),
                        out.leak);
  }
  return out;
}

RMat3 exp_so3(const SkewSo3& b) { return exp_so3_detailed(b).rotation; }

Su2Vec log_su2(const CMat2& u, LogPolicy policy) {
  // u = cos(t) 1 + i sin(t) n.s; v = sin(t) n.
  const double c = 0.5 * (u(0, 0).real() + u(1, 1).real());
  const Su2Vec v{0.5 * (u(0, 1).imag() + u(1, 0).imag()),
                 0.5 * (u(0, 1).real() - u(1, 0).real()),
                 0.5 * (u(0, 0).imag() - u(1, 1).imag())};
  const double angle = std::atan2(v.norm(), c);

  if (std::numbers::pi - angle <= kAxisPiWindow) {
    if (policy == LogPolicy::kStrict) {
      throw AxisUndetermined("log_su2: factor is -1, rotation axis is undetermined");
    }
    const double comps[3] = {std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)};
    const auto k = static_cast<std::size_t>(std::max_element(comps, comps + 3) - comps);
    Su2Vec axis{1.0, 0.0, 0.0};
    if (comps[k] >= kAxisPiWindow) {
      const double raw[3] = {v.x1, v.x2, v.x3};
      const double sign = raw[k] < 0.0 ? -1.0 : 1.0;
      axis = Su2Vec{k == 0 ? sign : 0.0, k == 1 ? sign : 0.0, k == 2 ? sign : 0.0};
    }
    return angle * axis;
  }
  // Past pi/2, sin(angle) loses relative accuracy as angle -> pi, so take the
  // length from the angle and only the direction from v.
  if (angle > 0.5 * std::numbers::pi) return (angle / v.norm()) * v;
  return (1.0 / sinc(angle)) * v;
}

SkewSo4 log_so4(const RMat4& x, LogPolicy policy) {
  const auto rep = is_special_orthogonal(x, 1e-10);
  if (!rep.ok) {
    throw NotSpecialOrthogonal("log_so4: input fails the SO(4) check at 1e-10 (orthogonality " +
                               std::to_string(rep.orthogonality()) + ", determinant " +
                               std::to_string(rep.determinant) + ")");
  }
  const CMat4& r = magic_matrix();
  const LocalUnitaryPair pq = factor_local_gate(r * to_complex(x) * adjoint(r));
  return so4_from_su2_pair({log_su2(pq.p, policy), log_su2(pq.q, policy)});
}

}  // namespace so4exp

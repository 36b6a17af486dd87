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

// Reference implementations used to check the closed forms. Nothing here
// calls into expm except sinc, which is shared at the formula level.

#include <cmath>
#include <cstddef>

#include "so4exp/expm.hpp"
#include "so4exp/mat_core.hpp"

namespace so4exp::oracle {

inline constexpr int kDefaultTerms = 30;
inline constexpr double kScaleTarget = 0.5;

/// Smallest s >= 0 with max_abs(m) / 2^s <= 0.5.
template <typename T, std::size_t N>
int default_squarings(const Matrix<T, N>& m) {
  int s = 0;
  double scale = max_abs(m);
  while (scale > kScaleTarget) {
    scale /= 2.0;
    ++s;
  }
  return s;
}

/// e^M by scaling and squaring: sum `terms` terms of the series for
/// M / 2^squarings (I counts as the first term), then square `squarings`
/// times. terms must be >= 1.
template <typename T, std::size_t N>
Matrix<T, N> taylor_exp(const Matrix<T, N>& m, int terms, int squarings) {
  static_assert(N <= 4, "taylor_exp covers matrices up to 4x4");
  const double scale = std::ldexp(1.0, -squarings);
  Matrix<T, N> scaled = m;
  for (auto& v : scaled.data) v *= scale;

  auto result = Matrix<T, N>::identity();
  auto term = Matrix<T, N>::identity();
  for (int k = 1; k < terms; ++k) {
    term = term * scaled;
    for (auto& v : term.data) v /= static_cast<double>(k);
    result = result + term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

/// Default policy: 30 terms, scaled until max_abs <= 0.5.
template <typename T, std::size_t N>
Matrix<T, N> taylor_exp(const Matrix<T, N>& m) {
  return taylor_exp(m, kDefaultTerms, default_squarings(m));
}

/// (1 - cos t) / t^2, with 1/2 - t^2/24 below the sinc threshold.
double one_minus_cos_over_sq(double t);

/// e^B = I + sinc(t) B + ((1 - cos t) / t^2) B^2, t = sqrt(a^2 + b^2 + c^2).
RMat3 rodrigues_so3(const SkewSo3& b);

}  // namespace so4exp::oracle

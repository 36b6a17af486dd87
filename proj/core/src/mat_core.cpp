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

#include "so4exp/mat_core.hpp"

#include <stdexcept>
#include <string>

namespace so4exp {

namespace {
constexpr Complex kI{0.0, 1.0};
}

CMat2 pauli_matrix(int k) {
  CMat2 s{};
  switch (k) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::out_of_range("pauli_matrix: index must be 1, 2 or 3, got " + std::to_string(k));
  }
  return s;
}

CMat2 su2vec_to_matrix(const Su2Vec& v) {
  CMat2 m{};
  m(0, 0) = v.x3;
  m(1, 1) = -v.x3;
  m(0, 1) = Complex(v.x1, -v.x2);
  m(1, 0) = Complex(v.x1, v.x2);
  return m;
}

CMat4 kron2(const CMat2& a, const CMat2& b) {
  CMat4 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Complex det2(const CMat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

double det3_real(const RMat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double det4_real(const RMat4& m) {
  // 2x2 minors of the bottom two rows, indexed by column pair.
  const double s01 = m(2, 0) * m(3, 1) - m(2, 1) * m(3, 0);
  const double s02 = m(2, 0) * m(3, 2) - m(2, 2) * m(3, 0);
  const double s03 = m(2, 0) * m(3, 3) - m(2, 3) * m(3, 0);
  const double s12 = m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1);
  const double s13 = m(2, 1) * m(3, 3) - m(2, 3) * m(3, 1);
  const double s23 = m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2);

  const double c0 = m(1, 1) * s23 - m(1, 2) * s13 + m(1, 3) * s12;
  const double c1 = m(1, 0) * s23 - m(1, 2) * s03 + m(1, 3) * s02;
  const double c2 = m(1, 0) * s13 - m(1, 1) * s03 + m(1, 3) * s01;
  const double c3 = m(1, 0) * s12 - m(1, 1) * s02 + m(1, 2) * s01;

  return m(0, 0) * c0 - m(0, 1) * c1 + m(0, 2) * c2 - m(0, 3) * c3;
}

}  // namespace so4exp

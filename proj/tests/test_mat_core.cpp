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

#include <doctest.h>

#include "so4exp/mat_core.hpp"
#include "test_support.hpp"

using namespace so4exp;
using so4exp::testing::Rng;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("pauli matrices match their definitions") {
  const CMat2 s1 = pauli_matrix(1);
  const CMat2 s2 = pauli_matrix(2);
  const CMat2 s3 = pauli_matrix(3);

  CHECK(s1 == CMat2{{0.0, 1.0, 1.0, 0.0}});
  CHECK(s2 == CMat2{{0.0, -kI, kI, 0.0}});
  CHECK(s3 == CMat2{{1.0, 0.0, 0.0, -1.0}});

  for (int k = 1; k <= 3; ++k) {
    const CMat2 s = pauli_matrix(k);
    CHECK(s * s == CMat2::identity());
    CHECK(adjoint(s) == s);
    CHECK(s(0, 0) + s(1, 1) == Complex(0.0));
  }
  CHECK(s1 * s2 == kI * s3);
}

TEST_CASE("pauli index out of range is a usage error") {
  CHECK_THROWS_AS(pauli_matrix(0), std::out_of_range);
  CHECK_THROWS_AS(pauli_matrix(4), std::out_of_range);
}

TEST_CASE("su2vec_to_matrix") {
  CHECK(su2vec_to_matrix({0, 0, 0}) == CMat2::zero());
  CHECK(su2vec_to_matrix({1, 0, 0}) == pauli_matrix(1));
  CHECK(su2vec_to_matrix({1, 2, 3}) == CMat2{{3.0, Complex(1, -2), Complex(1, 2), -3.0}});

  SUBCASE("hermitian, traceless and linear") {
    Rng rng(11);
    for (int n = 0; n < 200; ++n) {
      const Su2Vec u = rng.su2vec(1.0);
      const Su2Vec v = rng.su2vec(1.0);
      const double alpha = rng.uniform(-1, 1);
      const double beta = rng.uniform(-1, 1);
      const CMat2 m = su2vec_to_matrix(u);
      CHECK(adjoint(m) == m);
      CHECK(m(0, 0) + m(1, 1) == Complex(0.0));
      const CMat2 lhs = su2vec_to_matrix(alpha * u + beta * v);
      const CMat2 rhs = alpha * su2vec_to_matrix(u) + beta * su2vec_to_matrix(v);
      CHECK(max_abs(lhs - rhs) <= 1e-15);
    }
  }
}

TEST_CASE("kron2 layout") {
  const CMat2 id = CMat2::identity();
  CHECK(kron2(id, id) == CMat4::identity());

  CMat4 expected{};
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
  CHECK(kron2(pauli_matrix(1), id) == expected);

  Rng rng(12);
  for (int n = 0; n < 50; ++n) {
    const auto a = rng.matrix<Complex, 2>(1.0);
    const auto b = rng.matrix<Complex, 2>(1.0);
    CHECK(kron2(a, b) == testing::kron_oracle(a, b));
  }
}

TEST_CASE("kron2 is multiplicative") {
  Rng rng(13);
  for (int n = 0; n < 500; ++n) {
    const auto a1 = rng.matrix<Complex, 2>(1.0);
    const auto a2 = rng.matrix<Complex, 2>(1.0);
    const auto b1 = rng.matrix<Complex, 2>(1.0);
    const auto b2 = rng.matrix<Complex, 2>(1.0);
    CHECK(max_abs(kron2(a1, b1) * kron2(a2, b2) - kron2(a1 * a2, b1 * b2)) <= 1e-13);
  }
}

TEST_CASE("matrix plumbing") {
  Rng rng(14);
  const auto m = rng.matrix<double, 4>(3.0);
  const auto c = rng.matrix<Complex, 4>(3.0);
  CHECK(matmul(RMat4::identity(), m) == m);
  CHECK(matmul(c, CMat4::identity()) == c);
  CHECK(adjoint(pauli_matrix(2)) == pauli_matrix(2));
  CHECK(transpose(transpose(m)) == m);
  CHECK(adjoint(adjoint(c)) == c);
  CHECK(max_abs(RMat4::zero()) == 0.0);
  CHECK(max_abs(sub(m, m)) == 0.0);

  RMat4 e{};
  e(2, 1) = -7.5;
  CHECK(max_abs(e) == 7.5);
  CHECK(all_finite(m));
  e(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(all_finite(e));
}

TEST_CASE("det4_real") {
  CHECK(det4_real(RMat4::identity()) == 1.0);
  RMat4 reflect = RMat4::identity();
  reflect(3, 3) = -1.0;
  CHECK(det4_real(reflect) == -1.0);

  Rng rng(15);
  SUBCASE("agrees with the Leibniz sum") {
    for (int n = 0; n < 500; ++n) {
      const auto m = rng.matrix<double, 4>(1.0);
      const double oracle = testing::det_leibniz(m);
      CHECK(std::abs(det4_real(m) - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
    }
  }
  SUBCASE("multiplicative") {
    for (int n = 0; n < 500; ++n) {
      const auto a = rng.matrix<double, 4>(1.0);
      const auto b = rng.matrix<double, 4>(1.0);
      const double lhs = det4_real(a * b);
      const double rhs = det4_real(a) * det4_real(b);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("det3_real") {
  CHECK(det3_real(RMat3::identity()) == 1.0);
  const RMat3 m{{2, 0, 1, 1, 3, 2, 1, 1, 1}};
  // 2(3-2) - 0 + 1(1-3) = 0
  CHECK(det3_real(m) == 0.0);
}

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
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

namespace so4exp {

using Complex = std::complex<double>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

/// Fixed-size square matrix stored row-major. Value type; every operation
/// below returns a new matrix.
template <typename T, std::size_t N>
struct Matrix {
  static constexpr std::size_t kDim = N;
  using value_type = T;

  std::array<T, N * N> data{};

  constexpr T& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
  constexpr const T& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

  static constexpr Matrix zero() { return Matrix{}; }

  static constexpr Matrix identity() {
    Matrix m{};
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1);
    return m;
  }

  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;
};

using CMat2 = Matrix<Complex, 2>;
using CMat4 = Matrix<Complex, 4>;
using RMat3 = Matrix<double, 3>;
using RMat4 = Matrix<double, 4>;

template <typename T, std::size_t N>
constexpr Matrix<T, N> operator*(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  Matrix<T, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> operator+(Matrix<T, N> a, const Matrix<T, N>& b) {
  for (std::size_t i = 0; i < N * N; ++i) a.data[i] += b.data[i];
  return a;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> operator-(Matrix<T, N> a, const Matrix<T, N>& b) {
  for (std::size_t i = 0; i < N * N; ++i) a.data[i] -= b.data[i];
  return a;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> operator-(Matrix<T, N> a) {
  for (auto& v : a.data) v = -v;
  return a;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> operator*(const T& s, Matrix<T, N> a) {
  for (auto& v : a.data) v *= s;
  return a;
}

template <std::size_t N>
constexpr Matrix<Complex, N> operator*(double s, Matrix<Complex, N> a) {
  for (auto& v : a.data) v *= s;
  return a;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> matmul(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  return a * b;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> sub(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  return a - b;
}

template <typename T, std::size_t N>
constexpr Matrix<T, N> transpose(const Matrix<T, N>& a) {
  Matrix<T, N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(j, i) = a(i, j);
  return out;
}

/// Conjugate transpose; plain transpose for real matrices.
template <typename T, std::size_t N>
constexpr Matrix<T, N> adjoint(const Matrix<T, N>& a) {
  Matrix<T, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if constexpr (is_complex<T>::value) {
        out(j, i) = std::conj(a(i, j));
      } else {
        out(j, i) = a(i, j);
      }
    }
  }
  return out;
}

/// Largest entry magnitude. All residual checks in the library go through this.
template <typename T, std::size_t N>
double max_abs(const Matrix<T, N>& a) {
  double m = 0.0;
  for (const auto& v : a.data) m = std::max(m, static_cast<double>(std::abs(v)));
  return m;
}

template <typename T, std::size_t N>
bool all_finite(const Matrix<T, N>& a) {
  for (const auto& v : a.data) {
    if constexpr (is_complex<T>::value) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    } else {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

template <std::size_t N>
Matrix<double, N> real_part(const Matrix<Complex, N>& a) {
  Matrix<double, N> out{};
  for (std::size_t i = 0; i < N * N; ++i) out.data[i] = a.data[i].real();
  return out;
}

template <std::size_t N>
Matrix<double, N> imag_part(const Matrix<Complex, N>& a) {
  Matrix<double, N> out{};
  for (std::size_t i = 0; i < N * N; ++i) out.data[i] = a.data[i].imag();
  return out;
}

template <std::size_t N>
Matrix<Complex, N> to_complex(const Matrix<double, N>& a) {
  Matrix<Complex, N> out{};
  for (std::size_t i = 0; i < N * N; ++i) out.data[i] = a.data[i];
  return out;
}

/// Real 3-vector (x1, x2, x3) standing for the traceless Hermitian matrix
/// x1*sigma1 + x2*sigma2 + x3*sigma3.
struct Su2Vec {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  double norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

  friend constexpr bool operator==(const Su2Vec&, const Su2Vec&) = default;
};

constexpr Su2Vec operator+(const Su2Vec& u, const Su2Vec& v) {
  return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3};
}
constexpr Su2Vec operator*(double s, const Su2Vec& v) { return {s * v.x1, s * v.x2, s * v.x3}; }

/// Pauli matrix sigma_k for k in {1, 2, 3}. Throws std::out_of_range otherwise.
CMat2 pauli_matrix(int k);

/// x1*sigma1 + x2*sigma2 + x3*sigma3. The diagonal is (x3, -x3), so the
/// trace is exactly zero.
CMat2 su2vec_to_matrix(const Su2Vec& v);

/// Kronecker product with the block layout (a_ij * B).
CMat4 kron2(const CMat2& a, const CMat2& b);

Complex det2(const CMat2& m);
double det3_real(const RMat3& m);

/// Cofactor expansion along the first row.
double det4_real(const RMat4& m);

}  // namespace so4exp

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

#include <stdexcept>
#include <string>

namespace so4exp {

/// Base for the mathematical failures the library can report. Usage errors
/// (bad indices) are std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product that must be real carried an imaginary part above threshold.
class NonRealResult : public Error {
 public:
  NonRealResult(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NotSpecialOrthogonal : public Error {
 public:
  using Error::Error;
};

class NotAKroneckerProduct : public Error {
 public:
  NotAKroneckerProduct(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// The so(3) embedding leaked into the fourth row or column.
class EmbeddingLeak : public Error {
 public:
  EmbeddingLeak(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// An SU(2) factor is -1 so its logarithm has no preferred axis. Only raised
/// under LogPolicy::kStrict.
class AxisUndetermined : public Error {
 public:
  using Error::Error;
};

}  // namespace so4exp

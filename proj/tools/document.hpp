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
#include <string_view>
#include <variant>

#include <json.hpp>

#include "so4exp/expm.hpp"
#include "so4exp/magic.hpp"

namespace so4exp::cli {

/// Malformed or invalid input. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed input document. "so4_coeffs" and "so4_matrix" both land in
/// SkewSo4; "mat4" lands in RMat4. A result document emitted by this tool is
/// also accepted, in which case its "result" matrix is used (RMat4 or RMat3).
struct MatrixDocument {
  std::string key;
  std::variant<SkewSo4, SkewSo3, RMat4, RMat3> value;
};

inline constexpr double kSkewInputTol = 1e-12;

MatrixDocument parse_matrix_document(std::string_view text);

/// Serializes with keys in alphabetical order, numbers at 17 significant
/// digits, 2-space indentation and numeric arrays kept on one line.
std::string to_canonical_json(const nlohmann::json& doc);

nlohmann::json matrix_to_json(const RMat4& m);
nlohmann::json matrix_to_json(const RMat3& m);
nlohmann::json matrix_to_json(const CMat2& m);
nlohmann::json coeffs_to_json(const SkewSo4& a);

}  // namespace so4exp::cli

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

#include "document.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <set>

namespace so4exp::cli {

namespace {

using nlohmann::json;

int line_of(std::string_view text, std::string_view key) {
  const std::string needle = "\"" + std::string(key) + "\"";
  const auto pos = text.find(needle);
  if (pos == std::string_view::npos) return 1;
  int line = 1;
  for (std::size_t i = 0; i < pos; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] void fail(std::string_view text, std::string_view key, const std::string& msg) {
  throw InputError("line " + std::to_string(line_of(text, key)) + ": " + msg);
}

double number_at(std::string_view text, std::string_view key, const json& v,
                 const std::string& where) {
  if (!v.is_number()) fail(text, key, where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(text, key, where + " must be finite");
  return d;
}

// Reads an object whose keys are exactly `names`, in that order.
template <std::size_t K>
std::array<double, K> read_coeffs(std::string_view text, std::string_view key, const json& obj,
                                  const std::array<const char*, K>& names) {
  if (!obj.is_object()) fail(text, key, "\"" + std::string(key) + "\" must be an object");
  for (const auto& [name, _] : obj.items()) {
    bool known = false;
    for (const char* n : names) known = known || name == n;
    if (!known) fail(text, name, "unknown key \"" + name + "\" in \"" + std::string(key) + "\"");
  }
  std::array<double, K> out{};
  for (std::size_t i = 0; i < K; ++i) {
    const auto it = obj.find(names[i]);
    if (it == obj.end()) {
      fail(text, key, "\"" + std::string(key) + "\" is missing \"" + names[i] + "\"");
    }
    out[i] = number_at(text, names[i], *it, std::string(key) + "." + names[i]);
  }
  return out;
}

template <std::size_t N>
Matrix<double, N> read_matrix(std::string_view text, std::string_view key, const json& arr) {
  const std::string shape = std::to_string(N) + "x" + std::to_string(N);
  if (!arr.is_array() || arr.size() != N) {
    fail(text, key, "\"" + std::string(key) + "\" must be a " + shape + " array");
  }
  Matrix<double, N> m{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!arr[i].is_array() || arr[i].size() != N) {
      fail(text, key, "\"" + std::string(key) + "\" must be a " + shape + " array");
    }
    for (std::size_t j = 0; j < N; ++j) {
      m(i, j) = number_at(text, key, arr[i][j],
                          std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return m;
}

SkewSo4 read_skew_matrix(std::string_view text, const json& arr) {
  const RMat4 m = read_matrix<4>(text, "so4_matrix", arr);
  const double asym = max_abs(m + transpose(m));
  if (!(asym <= kSkewInputTol)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", asym);
    fail(text, "so4_matrix",
         std::string("\"so4_matrix\" is not skew-symmetric: max |A + A^t| = ") + buf +
             " exceeds 1e-12");
  }
  return SkewSo4::from_upper(0.5 * (m - transpose(m)));
}

MatrixDocument read_result_document(std::string_view text, const json& doc) {
  static const std::set<std::string> kAllowed = {
      "decomposition", "elapsed_ns", "method",  "passed",
      "residuals",     "result",     "round_trip_residual", "so4_coeffs"};
  for (const auto& [name, _] : doc.items()) {
    if (!kAllowed.count(name)) fail(text, name, "unknown key \"" + name + "\"");
  }
  const json& r = doc.at("result");
  if (r.is_array() && r.size() == 3) return {"result", read_matrix<3>(text, "result", r)};
  return {"result", read_matrix<4>(text, "result", r)};
}

void write_number(std::string& out, double d) {
  if (!std::isfinite(d)) throw std::logic_error("to_canonical_json: non-finite number");
  if (d == 0.0) d = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  out += buf;
}

bool is_flat(const json& arr) {
  for (const auto& v : arr)
    if (v.is_structured()) return false;
  return true;
}

void write_value(std::string& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case json::value_t::number_float:
      write_number(out, v.get<double>());
      break;
    case json::value_t::array:
      if (v.empty()) {
        out += "[]";
      } else if (is_flat(v)) {
        out += '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          write_value(out, v[i], indent);
        }
        out += ']';
      } else {
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
          out += pad;
          write_value(out, v[i], indent + 2);
          out += i + 1 < v.size() ? ",\n" : "\n";
        }
        out += close_pad + ']';
      }
      break;
    case json::value_t::object:
      if (v.empty()) {
        out += "{}";
      } else {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, val] : v.items()) {
          out += pad + json(key).dump() + ": ";
          write_value(out, val, indent + 2);
          out += ++i < v.size() ? ",\n" : "\n";
        }
        out += close_pad + '}';
      }
      break;
    default:
      out += v.dump();
  }
}

}  // namespace

MatrixDocument parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.what() reads "[json.exception.parse_error.101] parse error at line L, column C: ..."
    std::string msg = e.what();
    const auto at = msg.find("parse error at ");
    if (at != std::string::npos) msg = msg.substr(at + 15);
    throw InputError(msg);
  } catch (const json::exception& e) {
    // Numeric overflow: "[json.exception.out_of_range.406] number overflow parsing '1e400'"
    std::string msg = e.what();
    const auto close = msg.find("] ");
    if (close != std::string::npos) msg = msg.substr(close + 2);
    int line = 1;
    const auto q1 = msg.find('\'');
    const auto q2 = q1 == std::string::npos ? q1 : msg.find('\'', q1 + 1);
    if (q2 != std::string::npos) {
      const auto pos = text.find(msg.substr(q1 + 1, q2 - q1 - 1));
      for (std::size_t i = 0; pos != std::string_view::npos && i < pos; ++i)
        if (text[i] == '\n') ++line;
    }
    throw InputError("line " + std::to_string(line) + ": " + msg);
  }
  if (!doc.is_object()) throw InputError("line 1: top-level JSON value must be an object");
  if (doc.contains("result")) return read_result_document(text, doc);

  static const std::set<std::string> kRepresentations = {"so4_coeffs", "so4_matrix",
                                                         "so3_coeffs", "mat4"};
  std::string found;
  for (const auto& [name, _] : doc.items()) {
    if (!kRepresentations.count(name)) fail(text, name, "unknown key \"" + name + "\"");
    if (!found.empty()) {
      fail(text, name,
           "exactly one of so4_coeffs, so4_matrix, so3_coeffs, mat4 is allowed (found \"" +
               found + "\" and \"" + name + "\")");
    }
    found = name;
  }
  if (found.empty()) {
    throw InputError("line 1: expected one of so4_coeffs, so4_matrix, so3_coeffs, mat4");
  }

  const json& body = doc.at(found);
  if (found == "so4_coeffs") {
    const auto f = read_coeffs<6>(text, found, body, {"f12", "f13", "f14", "f23", "f24", "f34"});
    return {found, SkewSo4{f[0], f[1], f[2], f[3], f[4], f[5]}};
  }
  if (found == "so3_coeffs") {
    const auto f = read_coeffs<3>(text, found, body, {"a", "b", "c"});
    return {found, SkewSo3{f[0], f[1], f[2]}};
  }
  if (found == "so4_matrix") return {found, read_skew_matrix(text, body)};
  return {found, read_matrix<4>(text, found, body)};
}

std::string to_canonical_json(const nlohmann::json& doc) {
  std::string out;
  write_value(out, doc, 0);
  out += '\n';
  return out;
}

nlohmann::json matrix_to_json(const RMat4& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2), m(i, 3)});
  return rows;
}

nlohmann::json matrix_to_json(const RMat3& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

nlohmann::json matrix_to_json(const CMat2& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 2; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json coeffs_to_json(const SkewSo4& a) {
  return {{"f12", a.f12}, {"f13", a.f13}, {"f14", a.f14},
          {"f23", a.f23}, {"f24", a.f24}, {"f34", a.f34}};
}

}  // namespace so4exp::cli

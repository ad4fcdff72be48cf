// Copyright 2026 The twoq Authors
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

#include "twoq/json_io.hpp"

namespace twoq {

namespace {

template <int N>
Json to_json(const Eigen::Matrix<Complex, N, N> &m) {
  Json rows = Json::array();
  for (int r = 0; r < N; ++r) {
    Json row = Json::array();
    for (int c = 0; c < N; ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  Json out;
  out["dim"] = N;
  out["rows"] = std::move(rows);
  return out;
}

double number(const Json &j) {
  if (!j.is_number()) throw InputError("matrix entry component is not a number");
  return j.get<double>();
}

template <int N>
Eigen::Matrix<Complex, N, N> from_json(const Json &j) {
  if (!j.is_object()) throw InputError("matrix JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("matrix JSON needs an integer \"dim\"");
  if (j["dim"].get<int>() != N)
    throw InputError("expected a matrix of dim " + std::to_string(N) + ", got " +
                     std::to_string(j["dim"].get<int>()));
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != N)
    throw InputError("matrix JSON needs \"rows\" with " + std::to_string(N) + " rows");
  Eigen::Matrix<Complex, N, N> m;
  for (int r = 0; r < N; ++r) {
    const Json &row = j["rows"][r];
    if (!row.is_array() || row.size() != N)
      throw InputError("matrix row " + std::to_string(r) + " must have " +
                       std::to_string(N) + " entries");
    for (int c = 0; c < N; ++c) {
      const Json &e = row[c];
      if (!e.is_array() || e.size() != 2)
        throw InputError("matrix entries must be [re, im] pairs");
      m(r, c) = Complex(number(e[0]), number(e[1]));
    }
  }
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
  return m;
}

}  // namespace

Json matrix_to_json(const Mat2 &m) { return to_json<2>(m); }
Json matrix_to_json(const Mat4 &m) { return to_json<4>(m); }

Mat2 mat2_from_json(const Json &j) { return from_json<2>(j); }
Mat4 mat4_from_json(const Json &j) { return from_json<4>(j); }

Unitary2 unitary2_from_json(const Json &j, double tol) {
  return Unitary2::checked(mat2_from_json(j), tol);
}

Unitary4 unitary4_from_json(const Json &j, double tol) {
  return Unitary4::checked(mat4_from_json(j), tol);
}

}  // namespace twoq

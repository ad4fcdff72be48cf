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

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "twoq/matcore.hpp"

namespace twoq {

using Json = nlohmann::ordered_json;

/// Compact JSON text with every floating-point number written with 17
/// significant digits, so that parsing the text back gives identical bits.
std::string dump_json(const Json &j);

/// Formats a double with 17 significant digits.
std::string format_double(double x);

/// Parses JSON text; throws InputError on malformed input.
Json parse_json(std::string_view text);

// Matrix JSON: {"dim": 2|4, "rows": [[[re, im], ...], ...]}, row-major.

Json matrix_to_json(const Mat2 &m);
Json matrix_to_json(const Mat4 &m);

/// Reads a raw complex matrix of the given dimension. Extra keys in the
/// object are ignored. Throws InputError on schema violations.
Mat2 mat2_from_json(const Json &j);
Mat4 mat4_from_json(const Json &j);

/// As above, additionally rejecting matrices that are not unitary within tol.
Unitary2 unitary2_from_json(const Json &j, double tol = kInputUnitaryTol);
Unitary4 unitary4_from_json(const Json &j, double tol = kInputUnitaryTol);

}  // namespace twoq

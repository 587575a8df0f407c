/*
 * Copyright 2026 The modman Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MODMAN_IO_HPP
#define MODMAN_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "modman/matfun.hpp"
#include "modman/submanifold.hpp"

namespace modman {

using Json = nlohmann::ordered_json;

// Matrix schema: {"n": int, "re": [[...]], "im": [[...]]}, row-major.
// "im" may be omitted for real matrices. Schema violations and rejected
// matrices (non-Hermitian, non-faithful, wrong trace) raise InputError.

Json read_json_file(const std::string& path);

CMatrix matrix_from_json(const Json& j);
HermitianMatrix hermitian_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j);
RVector vector_from_json(const Json& j);

Json matrix_to_json(const CMatrix& m);
Json vector_to_json(const RVector& v);

/// {"rho": matrix, "generators": [matrix, ...], "orthonormalize": bool}.
SubmanifoldModel model_from_json(const Json& j);

/// Fixed-precision rendering shared by the JSON and CSV writers, so that
/// reports are byte-identical across runs.
std::string format_number(double x);

struct TableRow {
  double t;
  std::string quantity;
  double value;
};

/// One "t,quantity,value" line per row, with a header.
void write_csv(std::ostream& out, const std::vector<TableRow>& rows);

/// Table rows as a JSON array of {"t", "quantity", "value"} objects.
Json table_to_json(const std::vector<TableRow>& rows);

}  // namespace modman

#endif  // MODMAN_IO_HPP

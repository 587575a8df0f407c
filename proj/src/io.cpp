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

#include "modman/io.hpp"

#include <cstdio>
#include <fstream>

namespace modman {

namespace {

Eigen::MatrixXd real_block(const Json& rows, int n, const char* field) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw InputError(std::string("matrix: \"") + field + "\" must have n rows");
  }
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InputError(std::string("matrix: row ") + std::to_string(i) + " of \"" +
                       field + "\" must have n entries");
    }
    for (int k = 0; k < n; ++k) {
      const Json& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number()) {
        throw InputError(std::string("matrix: non-numeric entry in \"") + field + "\"");
      }
      out(i, k) = x.get<double>();
    }
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re")) {
    throw InputError("matrix: expected an object with \"n\" and \"re\"");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    throw InputError("matrix: \"n\" must be a positive integer");
  }
  const int n = j["n"].get<int>();
  const Eigen::MatrixXd re = real_block(j["re"], n, "re");
  const Eigen::MatrixXd im =
      j.contains("im") ? real_block(j["im"], n, "im") : Eigen::MatrixXd::Zero(n, n);
  CMatrix m(n, n);
  m.real() = re;
  m.imag() = im;
  if (!m.allFinite()) throw InputError("matrix: non-finite entry");
  return m;
}

HermitianMatrix hermitian_from_json(const Json& j) {
  try {
    return HermitianMatrix(matrix_from_json(j));
  } catch (const InputError&) {
    throw;
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

DensityMatrix density_from_json(const Json& j) {
  try {
    return DensityMatrix(hermitian_from_json(j));
  } catch (const InputError&) {
    throw;
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

RVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of numbers");
  RVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError("expected an array of numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

Json matrix_to_json(const CMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ii = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ii.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  Json out;
  out["n"] = m.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

Json vector_to_json(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

SubmanifoldModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rho") || !j.contains("generators") ||
      !j["generators"].is_array()) {
    throw InputError("model: expected {\"rho\": matrix, \"generators\": [matrix, ...]}");
  }
  DensityMatrix rho = density_from_json(j["rho"]);
  std::vector<HermitianMatrix> generators;
  for (const Json& g : j["generators"]) generators.push_back(hermitian_from_json(g));
  bool orthonormalize = false;
  if (j.contains("orthonormalize")) {
    if (!j["orthonormalize"].is_boolean()) {
      throw InputError("model: \"orthonormalize\" must be a boolean");
    }
    orthonormalize = j["orthonormalize"].get<bool>();
  }
  return SubmanifoldModel(std::move(rho), std::move(generators), orthonormalize);
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "t,quantity,value\n";
  for (const auto& r : rows) {
    out << format_number(r.t) << ',' << r.quantity << ',' << format_number(r.value) << '\n';
  }
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["t"] = r.t;
    row["quantity"] = r.quantity;
    row["value"] = r.value;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace modman

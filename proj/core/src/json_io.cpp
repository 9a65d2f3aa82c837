/*
Copyright (c) 2026 The frameness authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "frameness/json_io.hpp"

#include <fstream>
#include <sstream>

namespace frameness::io {

namespace {

complex_t complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidStateError("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(complex_t z) { return json::array({z.real(), z.imag()}); }

std::size_t require_dim(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw InvalidStateError("expected a positive integer field \"dim\"");
  return j["dim"].get<std::size_t>();
}

void require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidStateError(std::string("missing field \"") + name + "\"");
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidStateError("expected a non-empty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw InvalidStateError("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ShapeError("matrix rows differ in length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidStateError("expected a non-empty vector");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

json to_json(const DensityOperator& rho) { return {{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}}; }

json to_json(const PureState& psi) { return {{"dim", psi.dim()}, {"amplitudes", to_json(psi.amplitudes())}}; }

json to_json(const FiniteGroupRep& rep) {
  json unitaries = json::array();
  for (const auto& u : rep.unitaries()) unitaries.push_back(to_json(u));
  return {{"order", rep.order()}, {"table", rep.table()}, {"unitaries", std::move(unitaries)}};
}

json to_json(const ChargeGrading& grading) { return {{"dim", grading.dim()}, {"charges", grading.charges()}}; }

json to_json(const KrausChannel& ch) {
  json kraus = json::array();
  for (const auto& e : ch.kraus()) kraus.push_back(to_json(e));
  return {{"dim", ch.dim()}, {"kraus", std::move(kraus)}};
}

DensityOperator density_from_json(const json& j) {
  if (j.is_object() && j.contains("amplitudes")) return pure_from_json(j).projector();
  const std::size_t dim = require_dim(j);
  require_field(j, "matrix");
  ComplexMatrix m = matrix_from_json(j["matrix"]);
  if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim)
    throw ShapeError("state matrix does not match \"dim\"");
  return DensityOperator(std::move(m));
}

PureState pure_from_json(const json& j) {
  const std::size_t dim = require_dim(j);
  require_field(j, "amplitudes");
  ComplexVector v = vector_from_json(j["amplitudes"]);
  if (static_cast<std::size_t>(v.size()) != dim) throw ShapeError("amplitudes do not match \"dim\"");
  return PureState(std::move(v));
}

FiniteGroupRep finite_group_from_json(const json& j) {
  require_field(j, "order");
  require_field(j, "table");
  require_field(j, "unitaries");
  const auto order = j["order"].get<std::size_t>();
  GroupTable table = j["table"].get<GroupTable>();
  std::vector<ComplexMatrix> unitaries;
  for (const auto& u : j["unitaries"]) unitaries.push_back(matrix_from_json(u));
  if (unitaries.size() != order || table.size() != order)
    throw ShapeError("group \"order\" does not match the table or unitary list");
  return FiniteGroupRep(std::move(table), std::move(unitaries));
}

ChargeGrading grading_from_json(const json& j) {
  const std::size_t dim = require_dim(j);
  require_field(j, "charges");
  auto charges = j["charges"].get<std::vector<int>>();
  if (charges.size() != dim) throw ShapeError("charges do not match \"dim\"");
  return ChargeGrading(std::move(charges));
}

KrausChannel channel_from_json(const json& j) {
  const std::size_t dim = require_dim(j);
  require_field(j, "kraus");
  std::vector<ComplexMatrix> kraus;
  for (const auto& e : j["kraus"]) {
    kraus.push_back(matrix_from_json(e));
    if (static_cast<std::size_t>(kraus.back().rows()) != dim) throw ShapeError("Kraus operator does not match \"dim\"");
  }
  return KrausChannel(std::move(kraus));
}

json to_json(const AsymmetryResult& result, bool include_state) {
  json out = {{"asymmetry", result.asymmetry}, {"entropy_in", result.entropy_in}, {"entropy_out", result.entropy_out}};
  if (include_state) out["twirled_state"] = to_json(result.twirled_state);
  return out;
}

json to_json(const BoundReport& report) {
  return {{"upper", report.upper},
          {"lower", report.lower},
          {"theta", report.theta},
          {"gamma", report.gamma},
          {"tight", report.tight},
          {"side", report.side == Subsystem::A ? "A" : "B"}};
}

json to_json(const HolevoReport& report) {
  return {{"A_G", report.asymmetry},
          {"best_info", report.best_info},
          {"ratio", report.ratio()},
          {"povm", report.best_povm},
          {"chi", report.chi},
          {"holds", report.holds}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidStateError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidStateError("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace frameness::io

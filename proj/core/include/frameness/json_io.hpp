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

/**
 * @file    json_io.hpp
 * @brief   JSON formats for states, representations, channels and reports.
 *
 * Complex numbers are [re, im] pairs; matrices are row-major arrays of rows.
 *
 *   state:    {"dim": d, "matrix": [[[re, im], ...], ...]}
 *   pure:     {"dim": d, "amplitudes": [[re, im], ...]}
 *   group:    {"order": k, "table": [[...]], "unitaries": [matrix, ...]}
 *   charges:  {"dim": d, "charges": [n0, ...]}
 *   channel:  {"dim": d, "kraus": [matrix, ...]}
 *
 * Readers validate the invariants of the object they build.
 */

#ifndef FRAMENESS_JSON_IO_HPP
#define FRAMENESS_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "frameness/channel_calculus.hpp"
#include "frameness/entanglement_bound.hpp"
#include "frameness/estimation.hpp"
#include "frameness/frameness.hpp"
#include "frameness/group_reps.hpp"
#include "frameness/operator_core.hpp"

namespace frameness::io {

using json = nlohmann::json;

json to_json(const ComplexMatrix& m);
json to_json(const ComplexVector& v);
ComplexMatrix matrix_from_json(const json& j);
ComplexVector vector_from_json(const json& j);

json to_json(const DensityOperator& rho);
json to_json(const PureState& psi);
json to_json(const FiniteGroupRep& rep);
json to_json(const ChargeGrading& grading);
json to_json(const KrausChannel& ch);

/// Accepts either the mixed ("matrix") or the pure ("amplitudes") format.
DensityOperator density_from_json(const json& j);
PureState pure_from_json(const json& j);
/// Does not validate the group axioms; see validate_finite_rep.
FiniteGroupRep finite_group_from_json(const json& j);
ChargeGrading grading_from_json(const json& j);
KrausChannel channel_from_json(const json& j);

json to_json(const AsymmetryResult& result, bool include_state = false);
json to_json(const BoundReport& report);
json to_json(const HolevoReport& report);

json load_file(const std::string& path);

}  // namespace frameness::io

#endif  // FRAMENESS_JSON_IO_HPP

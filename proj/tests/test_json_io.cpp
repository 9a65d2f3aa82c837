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

#include <gtest/gtest.h>

#include "frameness/json_io.hpp"
#include "frameness/random.hpp"

namespace frameness {
namespace {

using io::json;

TEST(JsonIoTest, MatrixRoundTrip) {
  Rng rng(91);
  const ComplexMatrix m = random_unitary(3, rng);
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  const ComplexVector v = random_pure(4, rng).amplitudes();
  EXPECT_EQ(io::vector_from_json(io::to_json(v)), v);
}

TEST(JsonIoTest, StateRoundTrip) {
  Rng rng(92);
  const DensityOperator rho = random_density(3, rng);
  EXPECT_EQ(io::density_from_json(io::to_json(rho)).matrix(), rho.matrix());
  const PureState psi = random_pure(3, rng);
  EXPECT_EQ(io::pure_from_json(io::to_json(psi)).amplitudes(), psi.amplitudes());
  EXPECT_LT(max_abs(io::density_from_json(io::to_json(psi)).matrix() - psi.projector().matrix()), 1e-15);
}

TEST(JsonIoTest, GroupGradingChannelRoundTrip) {
  const FiniteGroupRep q = quaternion_group();
  const FiniteGroupRep back = io::finite_group_from_json(io::to_json(q));
  EXPECT_EQ(back.table(), q.table());
  EXPECT_EQ(back.unitaries(), q.unitaries());
  const ChargeGrading g({0, 2, 2, 5});
  EXPECT_EQ(io::grading_from_json(io::to_json(g)).charges(), g.charges());
  const KrausChannel ch = KrausChannel::identity(2);
  EXPECT_EQ(io::channel_from_json(io::to_json(ch)).kraus().front(), ch.kraus().front());
}

TEST(JsonIoTest, ReadersValidate) {
  EXPECT_THROW(io::density_from_json(json{{"dim", 2}}), InvalidStateError);
  json bad_trace = io::to_json(DensityOperator::maximally_mixed(2));
  bad_trace["matrix"][0][0] = json::array({0.9, 0.0});
  EXPECT_THROW(io::density_from_json(bad_trace), InvalidStateError);
  json wrong_dim = io::to_json(DensityOperator::maximally_mixed(2));
  wrong_dim["dim"] = 3;
  EXPECT_THROW(io::density_from_json(wrong_dim), ShapeError);
  json ragged = json::array({json::array({json::array({1.0, 0.0})}), json::array()});
  EXPECT_THROW(io::matrix_from_json(ragged), ShapeError);
  EXPECT_THROW(io::matrix_from_json(json::array({json::array({json::array({1.0})})})), InvalidStateError);
  EXPECT_THROW(io::grading_from_json(json{{"dim", 2}, {"charges", {0}}}), ShapeError);
  EXPECT_THROW(io::load_file("/nonexistent/state.json"), InvalidStateError);
}

TEST(JsonIoTest, ReportsCarryStableKeys) {
  BoundReport b;
  b.upper = 0.5;
  b.tight = true;
  const json jb = io::to_json(b);
  for (const char* key : {"upper", "lower", "theta", "gamma", "tight"}) EXPECT_TRUE(jb.contains(key)) << key;
  HolevoReport h;
  h.best_povm = "srm";
  const json jh = io::to_json(h);
  for (const char* key : {"A_G", "best_info", "ratio", "povm"}) EXPECT_TRUE(jh.contains(key)) << key;
}

}  // namespace
}  // namespace frameness

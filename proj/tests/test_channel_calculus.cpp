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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "frameness/channel_calculus.hpp"
#include "frameness/group_reps.hpp"
#include "frameness/random.hpp"
#include "oracles.hpp"

namespace frameness {
namespace {

KrausChannel computational_dephasing(std::size_t d) {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(k, k) = 1.0;
    kraus.push_back(p);
  }
  return KrausChannel(kraus);
}

// rho -> 3/4 rho + 1/4 Z rho Z
KrausChannel half_dephasing() {
  return KrausChannel({std::sqrt(0.75) * ComplexMatrix::Identity(2, 2), ComplexMatrix(0.5 * testing::pauli_z())});
}

KrausChannel amplitude_damping(double gamma) {
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return KrausChannel({k0, k1});
}

const DensityOperator& plus_state() {
  static const DensityOperator plus(ComplexMatrix::Constant(2, 2, 0.5));
  return plus;
}

TEST(KrausChannelTest, Validation) {
  EXPECT_THROW(KrausChannel(std::vector<ComplexMatrix>{}), ShapeError);
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}), ShapeError);
  EXPECT_THROW(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)}), InvalidStateError);
  EXPECT_THROW(KrausChannel::identity(2).apply(ComplexMatrix::Identity(3, 3)), ShapeError);
}

TEST(ApplyTest, Examples) {
  EXPECT_LT(max_abs(apply(KrausChannel::identity(2), plus_state()).matrix() - plus_state().matrix()), 1e-15);
  const ComplexMatrix half_id = 0.5 * ComplexMatrix::Identity(2, 2);
  EXPECT_LT(max_abs(apply(computational_dephasing(2), plus_state()).matrix() - half_id), 1e-15);
  // 1/2 |+><+| + 1/2 Z|+><+|Z = 1/2(|+><+| + |-><-|) = I/2.
  const KrausChannel z2 = group_average(z2_phase_flip().unitaries());
  EXPECT_LT(max_abs(apply(z2, plus_state()).matrix() - half_id), 1e-15);
}

TEST(AdjointApplyTest, Examples) {
  const KrausChannel z2 = group_average(z2_phase_flip().unitaries());
  EXPECT_LT(max_abs(adjoint_apply(z2, ComplexMatrix::Identity(2, 2)) - ComplexMatrix::Identity(2, 2)), 1e-15);
  Rng rng(3);
  const ComplexMatrix a = random_hermitian(3, rng);
  const KrausChannel deph = computational_dephasing(3);
  EXPECT_LT(max_abs(adjoint_apply(deph, a) - deph.apply(a)), 1e-15);
}

TEST(AdjointApplyTest, HilbertSchmidtDuality) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(derive_seed(31, s));
    const std::size_t d = 2 + s % 4;
    const KrausChannel ch = random_unital_idempotent_channel(d, static_cast<ChannelFamily>(s % 3), rng);
    const ComplexMatrix a = random_hermitian(d, rng);
    const ComplexMatrix b = random_hermitian(d, rng);
    const complex_t lhs = (a.adjoint() * ch.apply(b)).trace();
    const complex_t rhs = (adjoint_apply(ch, a).adjoint() * b).trace();
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
  }
}

TEST(AdjointApplyTest, PowersOfFixedPointsAreFixed) {
  const FiniteGroupRep d4 = tensor_power_rep(dihedral_group(4), 2);
  const KrausChannel ch = group_average(d4.unitaries());
  Rng rng(4);
  for (int s = 0; s < 5; ++s) {
    const ComplexMatrix tau = ch.apply(random_hermitian(4, rng));
    ASSERT_LT(max_abs(ch.apply(tau) - tau), 1e-12);
    const ComplexMatrix tau3 = tau * tau * tau;
    EXPECT_LT(max_abs(adjoint_apply(ch, tau3) - tau3), 1e-10);
    EXPECT_LT(max_abs(adjoint_apply(ch, tau * tau) - tau * tau), 1e-10);
  }
}

TEST(SuperoperatorTest, MatchesKrausAction) {
  Rng rng(5);
  const KrausChannel ch = amplitude_damping(0.3);
  const ComplexMatrix x = random_hermitian(2, rng);
  EXPECT_LT(max_abs(unvectorize(superoperator(ch) * vectorize(x), 2) - ch.apply(x)), 1e-14);
  EXPECT_THROW(unvectorize(ComplexVector::Zero(5), 2), ShapeError);
}

TEST(SuperoperatorTest, HalfDephasingByHand) {
  // Diagonal entries survive, coherences shrink by 3/4 - 1/4 = 1/2.
  const ComplexMatrix m = superoperator(half_dephasing());
  Eigen::VectorXcd expected(4);
  expected << 1.0, 0.5, 0.5, 1.0;
  EXPECT_LT(max_abs(ComplexMatrix(m) - ComplexMatrix(expected.asDiagonal())), 1e-15);
}

TEST(UnitalIdempotentTest, Examples) {
  for (const FiniteGroupRep& g : {z2_phase_flip(), dihedral_group(3), quaternion_group()}) {
    const KrausChannel ch = group_average(g.unitaries());
    EXPECT_TRUE(is_unital(ch));
    EXPECT_TRUE(is_idempotent(ch));
  }
  EXPECT_FALSE(is_unital(amplitude_damping(0.4)));
  EXPECT_TRUE(is_unital(half_dephasing()));
  EXPECT_FALSE(is_idempotent(half_dephasing()));
}

TEST(CommutantFixedPointTest, Examples) {
  const KrausChannel deph = computational_dephasing(2);
  EXPECT_TRUE(commutant_fixed_point_check(deph, ComplexMatrix::Identity(2, 2)));
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 2.0;
  EXPECT_TRUE(commutant_fixed_point_check(deph, diag));
  EXPECT_FALSE(commutant_fixed_point_check(deph, testing::pauli_x()));
  EXPECT_THROW(commutant_fixed_point_check(amplitude_damping(0.2), diag), PreconditionError);
}

TEST(CommutantFixedPointTest, AgreesWithFixedPointsForUnitalChannels) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(derive_seed(32, s));
    const std::size_t d = 2 + s % 5;
    const KrausChannel ch = random_unital_idempotent_channel(d, static_cast<ChannelFamily>(s % 3), rng);
    const ComplexMatrix fixed = ch.apply(random_hermitian(d, rng));
    EXPECT_TRUE(commutant_fixed_point_check(ch, fixed));
    const ComplexMatrix generic = random_hermitian(d, rng);
    EXPECT_EQ(commutant_fixed_point_check(ch, generic), max_abs(ch.apply(generic) - generic) <= 1e-9);
  }
}

TEST(ImageFixTest, Examples) {
  const ImageFixReport twirl = image_fix_equivalence_check(group_average(dihedral_group(4).unitaries()), 50);
  EXPECT_EQ(twirl.samples, 50u);
  EXPECT_TRUE(twirl.all_fixed());
  EXPECT_TRUE(twirl.idempotent);
  EXPECT_TRUE(twirl.consistent());

  const ImageFixReport half = image_fix_equivalence_check(half_dephasing(), 20);
  EXPECT_LT(half.fixed, half.samples);
  EXPECT_FALSE(half.idempotent);
  EXPECT_TRUE(half.consistent());

  EXPECT_TRUE(image_fix_equivalence_check(KrausChannel::identity(3), 5).consistent());
}

TEST(ImageDistanceTest, Examples) {
  const KrausChannel deph = computational_dephasing(3);
  const std::vector<double> w{0.2, 0.3, 0.5};
  EXPECT_NEAR(image_distance(deph, DensityOperator::diagonal(w)), 0.0, 1e-12);
  const DensityOperator uniform = PureState(ComplexVector::Constant(3, 1.0 / std::sqrt(3.0))).projector();
  EXPECT_NEAR(image_distance(deph, uniform), std::log2(3.0), 1e-12);
  EXPECT_NEAR(image_distance(group_average(z2_phase_flip().unitaries()), plus_state()), 1.0, 1e-12);
}

TEST(ImageDistanceTest, Preconditions) {
  EXPECT_THROW(image_distance(amplitude_damping(0.3), plus_state()), PreconditionError);
  EXPECT_THROW(image_distance(half_dephasing(), plus_state()), PreconditionError);
  EXPECT_THROW(image_distance(computational_dephasing(3), plus_state()), ShapeError);
}

// The distance to the image, evaluated through the matrix logarithm, equals
// the entropy increase and no sampled image state does better.
TEST(ImageDistanceTest, RandomChannelsAgainstIndependentRoute) {
  for (std::uint64_t c = 0; c < 12; ++c) {
    Rng rng(derive_seed(33, c));
    const std::size_t d = 2 + c % 5;
    const KrausChannel ch = random_unital_idempotent_channel(d, static_cast<ChannelFamily>(c % 3), rng);
    ASSERT_TRUE(is_unital(ch));
    ASSERT_TRUE(is_idempotent(ch));
    for (int s = 0; s < 10; ++s) {
      const DensityOperator rho = random_density(d, rng);
      const DensityOperator image = apply(ch, rho);
      const double distance = image_distance(ch, rho);
      EXPECT_NEAR(testing::relative_entropy_logm(rho.matrix(), image.matrix()), distance, 1e-7);
      for (int k = 0; k < 5; ++k) {
        const DensityOperator sigma = apply(ch, random_density(d, rng));
        EXPECT_GE(relative_entropy(rho, sigma), distance - 1e-8);
      }
    }
  }
}

TEST(ConditionalExpectationTest, UnitalIdempotentAndTracePreserving) {
  Rng rng(6);
  const BlockStructure blocks{{2, 1}, {2, 3}};
  const KrausChannel ch = conditional_expectation(blocks, random_unitary(7, rng));
  EXPECT_TRUE(is_unital(ch));
  EXPECT_TRUE(is_idempotent(ch));
  EXPECT_THROW(conditional_expectation(blocks, random_unitary(6, rng)), ShapeError);
  EXPECT_THROW(conditional_expectation({{2}, {2, 1}}, random_unitary(4, rng)), ShapeError);
}

TEST(ConditionalExpectationTest, IndependentOfBasisInsideBlocks) {
  Rng rng(7);
  const BlockStructure blocks{{2}, {3}};
  const ComplexMatrix basis = random_unitary(6, rng);
  const ComplexMatrix local = kron(random_unitary(2, rng), random_unitary(3, rng));
  const ComplexMatrix a = superoperator(conditional_expectation(blocks, basis));
  const ComplexMatrix b = superoperator(conditional_expectation(blocks, basis * local));
  EXPECT_LT(max_abs(a - b), 1e-10);
}

TEST(LiftTest, LiftedChannelActsOnOneFactor) {
  Rng rng(8);
  const KrausChannel deph = computational_dephasing(2);
  const KrausChannel lifted = lift(deph, 3, true);
  EXPECT_EQ(lifted.dim(), 6u);
  const DensityOperator a = random_density(3, rng);
  const DensityOperator b = random_density(2, rng);
  const ComplexMatrix expected = kron(a.matrix(), deph.apply(b.matrix()));
  EXPECT_LT(max_abs(lifted.apply(kron(a.matrix(), b.matrix())) - expected), 1e-14);
  EXPECT_TRUE(is_idempotent(lifted));
}

}  // namespace
}  // namespace frameness

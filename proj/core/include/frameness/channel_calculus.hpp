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

#ifndef FRAMENESS_CHANNEL_CALCULUS_HPP
#define FRAMENESS_CHANNEL_CALCULUS_HPP

#include <cstdint>
#include <vector>

#include "frameness/operator_core.hpp"
#include "frameness/random.hpp"

namespace frameness {

namespace tol {
inline constexpr double completeness = 1e-10;
inline constexpr double unital = 1e-9;
inline constexpr double idempotent = 1e-8;
inline constexpr double commutator = 1e-9;
}  // namespace tol

/// Trace-preserving completely positive map rho -> sum_a E_a rho E_a^dagger.
class KrausChannel {
 public:
  /// Throws ShapeError on mismatched shapes and InvalidStateError when
  /// sum_a E_a^dagger E_a deviates from the identity by more than 1e-10.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);

  static KrausChannel identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(kraus_.front().rows()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Action on an arbitrary operator.
  ComplexMatrix apply(const ComplexMatrix& x) const;
  ComplexMatrix adjoint_apply(const ComplexMatrix& x) const;

 private:
  std::vector<ComplexMatrix> kraus_;
};

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);

/// sum_a E_a^dagger A E_a, the Hilbert-Schmidt dual.
ComplexMatrix adjoint_apply(const KrausChannel& ch, const ComplexMatrix& a);

/// dim^2 x dim^2 matrix acting on column-stacked operators:
/// vec(E X E^dagger) = (conj(E) (x) E) vec(X).
ComplexMatrix superoperator(const KrausChannel& ch);
ComplexVector vectorize(const ComplexMatrix& x);
ComplexMatrix unvectorize(const ComplexVector& v, std::size_t dim);

bool is_unital(const KrausChannel& ch);
bool is_idempotent(const KrausChannel& ch);

/// 1 (x) ch or ch (x) 1 acting on a bipartite system.
KrausChannel lift(const KrausChannel& ch, std::size_t other_dim, bool act_on_second);

/// True iff tau commutes with every E_a and E_a^dagger. Throws
/// PreconditionError for non-unital channels.
bool commutant_fixed_point_check(const KrausChannel& ch, const ComplexMatrix& tau);

struct ImageFixReport {
  std::size_t samples = 0;
  std::size_t fixed = 0;          ///< samples whose image is a fixed point
  double max_deviation = 0.0;     ///< max ||E(E(rho)) - E(rho)||
  bool idempotent = false;        ///< superoperator verdict
  bool all_fixed() const { return fixed == samples; }
  /// Image = Fix holds exactly when the channel is idempotent.
  bool consistent() const { return all_fixed() == idempotent; }
};

ImageFixReport image_fix_equivalence_check(const KrausChannel& ch, std::size_t samples,
                                           std::uint64_t seed = 7);

/// min over the image of S(rho || sigma) = S(E(rho)) - S(rho) for unital
/// idempotent channels. Throws PreconditionError otherwise.
double image_distance(const KrausChannel& ch, const DensityOperator& rho);

// ---------------------------------------------------------------------------
// Generators of unital idempotent channels

/// Pinching onto the given orthogonal projectors (which must sum to I).
KrausChannel pinching(const std::vector<ComplexMatrix>& projectors);

/// Twirl over a finite unitary group given as a list of matrices.
KrausChannel group_average(const std::vector<ComplexMatrix>& unitaries);

/// Block structure H = (+)_q C^{m_q} (x) C^{n_q} in a rotated basis.
struct BlockStructure {
  std::vector<std::size_t> decohered;   ///< m_q
  std::vector<std::size_t> preserved;   ///< n_q
};

/// Conditional expectation (+)_q (D_{m_q} (x) id_{n_q}) o pinching, expressed
/// in the basis given by the columns of `basis`. D_m is the completely
/// decohering map realized by the m^2 Weyl operators.
KrausChannel conditional_expectation(const BlockStructure& blocks, const ComplexMatrix& basis);

enum class ChannelFamily { BlockDephasing, CyclicTwirl, ConditionalExpectation };

/// Random unital idempotent channel of the requested family.
KrausChannel random_unital_idempotent_channel(std::size_t dim, ChannelFamily family, Rng& rng);

}  // namespace frameness

#endif  // FRAMENESS_CHANNEL_CALCULUS_HPP

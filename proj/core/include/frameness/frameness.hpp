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
 * @file    frameness.hpp
 * @brief   G-twirling, G-asymmetry and the closed forms for U(1) and SU(2).
 *
 * A Twirl is the projection of a state onto the G-invariant states. For a
 * finite group it is the average over conjugations by T(g). For U(1) it is
 * the pinching onto charge sectors, keeping coherence inside a sector. For
 * collective SU(2) it is computed exactly in the Schur basis: each
 * M_j (x) N_j block is replaced by (I_{M_j} / (2j+1)) (x) sigma_j, where
 * sigma_j is the reduced operator on the multiplicity space.
 *
 * The G-asymmetry S(twirl(rho)) - S(rho) equals the relative entropy
 * distance from rho to the nearest invariant state.
 */

#ifndef FRAMENESS_FRAMENESS_HPP
#define FRAMENESS_FRAMENESS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "frameness/channel_calculus.hpp"
#include "frameness/group_reps.hpp"
#include "frameness/operator_core.hpp"
#include "frameness/random.hpp"

namespace frameness {

enum class GroupKind { Finite, U1, SU2 };

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(const std::string& name);

class Twirl {
 public:
  /// Validates the representation; throws InvalidStateError if invalid.
  static Twirl finite(FiniteGroupRep rep);
  static Twirl u1(ChargeGrading grading);
  static Twirl su2(std::shared_ptr<const CollectiveSpinRep> rep);
  static Twirl su2(int n_qubits);

  GroupKind kind() const;
  std::size_t dim() const;

  /// Linear action on an arbitrary operator of matching dimension.
  ComplexMatrix apply(const ComplexMatrix& x) const;

  /// Kraus form of the twirl for channel-level checks.
  KrausChannel as_channel() const;

  /// Unitaries of the group action: every element for finite groups,
  /// `count` random elements for U(1) and SU(2).
  std::vector<ComplexMatrix> sample_group_action(std::size_t count, Rng& rng) const;

  const FiniteGroupRep& finite_rep() const;
  const ChargeGrading& grading() const;
  const CollectiveSpinRep& spin_rep() const;

 private:
  using Rep = std::variant<FiniteGroupRep, ChargeGrading, std::shared_ptr<const CollectiveSpinRep>>;
  explicit Twirl(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

DensityOperator twirl(const Twirl& t, const DensityOperator& rho);

/// ||twirl(rho) - rho||_max <= tolerance.
bool is_invariant(const Twirl& t, const DensityOperator& rho, double tolerance = 1e-8);

struct AsymmetryResult {
  double asymmetry = 0.0;
  DensityOperator twirled_state;
  double entropy_in = 0.0;
  double entropy_out = 0.0;
};

AsymmetryResult g_asymmetry(const Twirl& t, const DensityOperator& rho);

double relative_entropy_of_frameness(const Twirl& t, const DensityOperator& rho);

/// Direct minimization of S(rho || sigma) over sampled invariant states:
/// twirls of random states, their mixtures with twirl(rho), and twirl(rho)
/// itself.
double invariant_state_oracle(const Twirl& t, const DensityOperator& rho, std::size_t trials,
                              std::uint64_t seed);

/// H({Tr(Pi_n rho)}) - S(rho). Only valid when every charge sector is
/// one-dimensional; throws PreconditionError otherwise.
double u1_asymmetry_closed_form(const ChargeGrading& grading, const DensityOperator& rho);

/// Pure-state SU(2) asymmetry from the sector weights p_j (j = 0..j_max)
/// and the Schmidt spectra q^{(j)} for j < j_max.
double su2_pure_asymmetry_closed_form(const ProbabilityDistribution& p,
                                      const std::vector<ProbabilityDistribution>& q, int j_max);

struct Su2PureDecomposition {
  std::vector<double> sector_weights;              ///< p_j, j = 0..j_max
  std::vector<std::vector<double>> schmidt_spectra;  ///< q^{(j)}, j < j_max
};

/// Sector weights and M_j (x) N_j Schmidt spectra of a pure state.
Su2PureDecomposition su2_pure_decomposition(const CollectiveSpinRep& rep, const PureState& psi);

PureState maximal_asymmetry_state_u1(int n_max);
PureState maximal_asymmetry_state_su2(const CollectiveSpinRep& rep);

struct MaximalStateParams {
  int n_max = 0;     ///< U(1)
  int n_qubits = 0;  ///< SU(2)
};

PureState maximal_asymmetry_state(GroupKind kind, const MaximalStateParams& params);

/// log2[(4/3) j^3 + (5/3) j + 1].
double max_su2_asymmetry_value(double j_max);

}  // namespace frameness

#endif  // FRAMENESS_FRAMENESS_HPP

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
 * @file    entanglement_bound.hpp
 * @brief   Dephasing upper bound on the relative entropy of entanglement.
 *
 * Dephasing subsystem B in the basis {U|k>} is unital, idempotent and
 * entanglement breaking, so S((1 (x) D_U)(rho)) - S(rho) upper-bounds the
 * relative entropy of entanglement for every U. The coherent information
 * S(rho_A) - S(rho_AB), clamped at zero, is the matching lower bound.
 */

#ifndef FRAMENESS_ENTANGLEMENT_BOUND_HPP
#define FRAMENESS_ENTANGLEMENT_BOUND_HPP

#include <cstdint>

#include "frameness/channel_calculus.hpp"
#include "frameness/operator_core.hpp"

namespace frameness {

/// Density operator on H_A (x) H_B with A-major index order.
class BipartiteState {
 public:
  BipartiteState(std::size_t dim_a, std::size_t dim_b, DensityOperator state);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const DensityOperator& state() const { return state_; }
  DensityOperator reduced(Subsystem keep) const;

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  DensityOperator state_;
};

/// p |phi+><phi+| + (1 - p) |phi-><phi-| on two qubits.
BipartiteState bell_diagonal_state(double p);

/// Kraus set {U|k><k|U^dagger}. Throws DomainError if U is not unitary.
KrausChannel dephasing_channel(const ComplexMatrix& basis_unitary);

/// S((1 (x) D_U)(rho)) - S(rho), or the mirror image when side == A.
double dephasing_upper_bound(const BipartiteState& rho, const ComplexMatrix& basis_unitary,
                             Subsystem side = Subsystem::B);

/// cos(theta) diag(1, -1) + sin(theta) [[0, e^{i gamma}], [e^{-i gamma}, 0]].
ComplexMatrix two_qubit_parameterized_unitary(double theta, double gamma);

/// max(0, S(rho_A) - S(rho_AB)).
double hashing_lower_bound(const BipartiteState& rho);

inline constexpr double kTightTolerance = 1e-4;

struct BoundReport {
  double upper = 0.0;
  double lower = 0.0;
  double theta = 0.0;  ///< in [0, pi)
  double gamma = 0.0;  ///< in [0, 2 pi)
  bool tight = false;
  Subsystem side = Subsystem::B;
};

struct TwoQubitOptimizerOptions {
  std::size_t grid = 64;          ///< grid points per axis
  std::size_t refine_starts = 3;  ///< best grid points refined by Nelder-Mead
  Subsystem side = Subsystem::B;
};

/// Grid search over theta in [0, pi), gamma in [0, 2 pi) followed by local
/// refinement. Deterministic for fixed options.
BoundReport optimize_two_qubit_bound(const BipartiteState& rho, const TwoQubitOptimizerOptions& options = {});

struct BasisSearchResult {
  double upper = 0.0;
  ComplexMatrix basis_unitary;
};

/// Best dephasing bound over Haar-random bases of the chosen subsystem, for
/// local dimensions where no parameterization is provided.
BasisSearchResult random_basis_search(const BipartiteState& rho, std::size_t samples, std::uint64_t seed,
                                      Subsystem side = Subsystem::B);

}  // namespace frameness

#endif  // FRAMENESS_ENTANGLEMENT_BOUND_HPP

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
 * @file    asymptotics.hpp
 * @brief   Many-copy behaviour of the G-asymmetry.
 *
 * For a pure state with one-dimensional charge sectors the N-copy U(1)
 * asymmetry is the Shannon entropy of the N-fold convolution of the
 * per-copy charge distribution, so it is computed without materializing
 * the 2^N-dimensional state.
 */

#ifndef FRAMENESS_ASYMPTOTICS_HPP
#define FRAMENESS_ASYMPTOTICS_HPP

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "frameness/group_reps.hpp"
#include "frameness/operator_core.hpp"

namespace frameness {

/// Additive constant of the discrete-Gaussian entropy in bits: 1/2 log2(e).
inline constexpr double kGaussianConstantBits = 0.5 * std::numbers::log2e;
/// The constant 1/2 as printed for the natural-log Gaussian entropy.
inline constexpr double kGaussianConstantLiteral = 0.5;

/// Upper bound on the support size of a convolved distribution.
inline constexpr std::size_t kMaxConvolutionSupport = std::size_t{1} << 24;

double mean_charge(const ProbabilityDistribution& p);
double charge_variance(const ProbabilityDistribution& p);

/// Tr(rho N^2) - Tr(rho N)^2.
double number_variance(const ChargeGrading& grading, const DensityOperator& rho);

struct NumberDistributionProfile {
  ProbabilityDistribution per_copy;
  std::size_t copies = 1;
  ProbabilityDistribution convolved;  ///< over total charge 0..copies * (size - 1)
};

/// Exact N-fold self-convolution of a distribution over charges 0..n_max.
NumberDistributionProfile convolve_copies(const ProbabilityDistribution& per_copy, std::size_t copies);

/// A_U(1)(psi^{(x) N}) = H(convolved distribution).
double u1_ncopy_asymmetry(const ProbabilityDistribution& per_copy, std::size_t copies);

/// 1/2 log2(2 pi N V) + constant. Throws DomainError for V <= 0.
double gaussian_entropy_model(double variance, std::size_t copies,
                              double constant = kGaussianConstantBits);

struct ScalingRow {
  std::size_t copies = 0;
  double asymmetry = 0.0;
  double model = 0.0;
  double gap = 0.0;  ///< asymmetry - model
  double per_copy() const { return asymmetry / static_cast<double>(copies); }
};

struct ScalingReport {
  std::string model;
  double variance = 0.0;
  double constant = kGaussianConstantBits;
  std::vector<ScalingRow> rows;
};

/// Rows for each N (strictly increasing) of A, the Gaussian model and A/N.
/// The model column is NaN when the per-copy variance vanishes.
ScalingReport regularized_asymmetry_table(const ProbabilityDistribution& per_copy,
                                          const std::vector<std::size_t>& copies,
                                          double constant = kGaussianConstantBits);

/// True when A/N is non-increasing from the first row where A > 0 onwards.
bool eventually_decreasing(const ScalingReport& report);

std::string scaling_csv(const ScalingReport& report);

struct FiniteBoundRow {
  std::size_t copies = 0;
  double asymmetry = 0.0;
  double bound = 0.0;  ///< log2 |G|
  bool holds = false;
};

struct FiniteBoundReport {
  std::size_t group_order = 0;
  std::vector<FiniteBoundRow> rows;
  bool all_hold() const;
};

/// A_G(rho^{(x) N}) under g -> T(g)^{(x) N} against log2 |G| for N = 1..max_copies.
FiniteBoundReport finite_group_bound_check(const FiniteGroupRep& rep, const DensityOperator& rho,
                                           std::size_t max_copies);

struct LieBound {
  std::uint64_t symmetric_dimension = 0;  ///< d* = C(N + d - 1, d - 1)
  double exact = 0.0;                     ///< 2 log2 d*
  double asymptotic = 0.0;                ///< 2 (d - 1) log2 N
};

LieBound lie_group_log_bound(int copies, int d);

struct Su2BoundCheck {
  LieBound bound;
  double asymmetry = 0.0;
  bool holds = false;
};

/// Measures the collective SU(2) asymmetry of an N-qubit state against the
/// d = 2 bound.
Su2BoundCheck su2_bound_check(const DensityOperator& rho, int n_qubits);

struct VarianceWitnessRow {
  int n = 0;
  double trace_distance = 0.0;
  double variance_psi = 0.0;
  double variance_phi = 0.0;
  double gap() const { return variance_psi - variance_phi; }
  double gap_over_log() const;
};

struct VarianceWitnessReport {
  std::vector<VarianceWitnessRow> rows;
  bool distance_decreasing = false;
  bool ratio_increasing = false;
};

/// psi_n = (|0> + |n>)/sqrt2 against phi_n = sqrt(1/2 - 1/sqrt n)|0> + sqrt(1/2 + 1/sqrt n)|n>
/// on a two-level system with charges {0, n}. Each n must exceed 4.
VarianceWitnessReport variance_discontinuity_witness(const std::vector<int>& n_list);

struct RelinearizedRow {
  std::size_t copies = 0;
  double asymmetry = 0.0;
  double linearized = 0.0;  ///< 2^{2A}
  double per_copy() const { return linearized / static_cast<double>(copies); }
};

struct RelinearizedReport {
  double variance = 0.0;
  double constant = kGaussianConstantBits;
  double predicted_plateau = 0.0;  ///< 4 pi V 2^{2(c - 1/2)}
  std::vector<RelinearizedRow> rows;
  /// |L/N(last) - L/N(second to last)| / L/N(second to last)
  double final_relative_change() const;
};

RelinearizedReport relinearized_monotone(const ProbabilityDistribution& per_copy,
                                         const std::vector<std::size_t>& copies,
                                         double constant = kGaussianConstantBits);

}  // namespace frameness

#endif  // FRAMENESS_ASYMPTOTICS_HPP

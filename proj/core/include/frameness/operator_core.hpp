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
 * @file    operator_core.hpp
 * @brief   Dense state objects and the entropic functionals built on them.
 *
 * All logarithms are base 2. The Hermitian eigendecomposition is the one
 * spectral primitive; every entropy routes through it.
 */

#ifndef FRAMENESS_OPERATOR_CORE_HPP
#define FRAMENESS_OPERATOR_CORE_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "frameness/errors.hpp"

namespace frameness {

using complex_t = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double pure_norm = 1e-12;
inline constexpr double distribution = 1e-10;
/// Eigenvalues at or below this are outside the effective support.
inline constexpr double eigen_cutoff = 1e-12;
}  // namespace tol

/// Sentinel returned by relative_entropy for unsupported pairs.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Total Hilbert-space dimension cap. Defaults to 2^14; the environment
/// variable FRAMENESS_MAX_DIM overrides it.
std::size_t dimension_cap();

/// Throws ResourceLimitError when `dim` exceeds dimension_cap().
void require_within_cap(std::size_t dim, const char* what);

double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::hermitian);
bool is_unitary(const ComplexMatrix& u, double tolerance = tol::hermitian);

/// Eigenvalues (ascending) of the Hermitian part of `m`.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// f(m) for Hermitian m via its eigendecomposition.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F&& f) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  RealVector values = solver.eigenvalues();
  for (Eigen::Index i = 0; i < values.size(); ++i) values(i) = f(values(i));
  return solver.eigenvectors() * values.asDiagonal() * solver.eigenvectors().adjoint();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

class PureState;

/// A positive semidefinite unit-trace Hermitian matrix.
class DensityOperator {
 public:
  /// Validates all invariants and throws InvalidStateError on violation.
  explicit DensityOperator(ComplexMatrix matrix);

  /// Wraps the output of a trace-preserving map. The matrix is symmetrized
  /// and its trace checked, but the spectrum is not recomputed.
  static DensityOperator from_channel_output(ComplexMatrix matrix);

  static DensityOperator maximally_mixed(std::size_t dim);
  static DensityOperator diagonal(std::span<const double> weights);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Ascending spectrum, cached on first use.
  const RealVector& eigenvalues() const;

 private:
  struct Unchecked {};
  DensityOperator(ComplexMatrix matrix, Unchecked);

  ComplexMatrix matrix_;
  mutable RealVector eigenvalues_;
  mutable bool have_eigenvalues_ = false;
};

/// A normalized state vector.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  /// Normalizes `amplitudes` first; throws if the vector is zero.
  static PureState normalized(ComplexVector amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  DensityOperator projector() const;

 private:
  ComplexVector amplitudes_;
};

class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> weights);

  static ProbabilityDistribution uniform(std::size_t n);
  static ProbabilityDistribution bernoulli(double p);

  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

enum class Subsystem { A, B };

double von_neumann_entropy(const DensityOperator& rho);

/// S(rho || sigma) in bits, or kInfinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

double shannon_entropy(const ProbabilityDistribution& p);
double shannon_entropy(std::span<const double> weights);
double binary_entropy(double p);

DensityOperator partial_trace(const DensityOperator& rho, std::size_t dim_a,
                              std::size_t dim_b, Subsystem keep);

/// Trace norm ||a - b||_1, i.e. the sum of |eigenvalues| of the difference.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);
DensityOperator tensor_power(const DensityOperator& rho, std::size_t n);
PureState tensor_power(const PureState& psi, std::size_t n);

}  // namespace frameness

#endif  // FRAMENESS_OPERATOR_CORE_HPP

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

#include "frameness/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>

namespace frameness {

namespace {

constexpr std::size_t kDefaultDimensionCap = std::size_t{1} << 14;

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw ShapeError(os.str());
  }
}

double xlog2x(double x) { return x > tol::eigen_cutoff ? x * std::log2(x) : 0.0; }

}  // namespace

std::size_t dimension_cap() {
  if (const char* env = std::getenv("FRAMENESS_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultDimensionCap;
}

void require_within_cap(std::size_t dim, const char* what) {
  const std::size_t cap = dimension_cap();
  if (dim > cap) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " exceeds the cap " << cap
       << " (set FRAMENESS_MAX_DIM to override)";
    throw ResourceLimitError(os.str());
  }
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tolerance;
}

bool is_unitary(const ComplexMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  const auto n = u.rows();
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(n, n)) <= tolerance;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(ComplexMatrix matrix) {
  require_square(matrix, "DensityOperator");
  const double herm_dev = max_abs(matrix - matrix.adjoint());
  if (!(herm_dev <= tol::hermitian)) {
    std::ostringstream os;
    os << "DensityOperator: not Hermitian (max deviation " << herm_dev << ")";
    throw InvalidStateError(os.str());
  }
  matrix_ = hermitian_part(matrix);
  const double tr = matrix_.trace().real();
  if (!(std::abs(tr - 1.0) <= tol::trace)) {
    std::ostringstream os;
    os << "DensityOperator: trace " << tr << " differs from 1";
    throw InvalidStateError(os.str());
  }
  const RealVector& spectrum = eigenvalues();
  if (!(spectrum(0) >= -tol::psd)) {
    std::ostringstream os;
    os << "DensityOperator: not positive semidefinite (smallest eigenvalue " << spectrum(0) << ")";
    throw InvalidStateError(os.str());
  }
}

DensityOperator::DensityOperator(ComplexMatrix matrix, Unchecked) : matrix_(std::move(matrix)) {}

DensityOperator DensityOperator::from_channel_output(ComplexMatrix matrix) {
  require_square(matrix, "DensityOperator");
  ComplexMatrix h = hermitian_part(matrix);
  const double tr = h.trace().real();
  if (!(std::abs(tr - 1.0) <= 1e-9)) {
    std::ostringstream os;
    os << "channel output has trace " << tr << "; the map is not trace preserving";
    throw InvalidStateError(os.str());
  }
  return DensityOperator(std::move(h), Unchecked{});
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw ShapeError("maximally_mixed: dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(dim), Unchecked{});
}

DensityOperator DensityOperator::diagonal(std::span<const double> weights) {
  ProbabilityDistribution p(std::vector<double>(weights.begin(), weights.end()));
  const auto n = static_cast<Eigen::Index>(p.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  return DensityOperator(std::move(m), Unchecked{});
}

const RealVector& DensityOperator::eigenvalues() const {
  if (!have_eigenvalues_) {
    eigenvalues_ = hermitian_eigenvalues(matrix_);
    have_eigenvalues_ = true;
  }
  return eigenvalues_;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw ShapeError("PureState: empty amplitude vector");
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= tol::pure_norm)) {
    std::ostringstream os;
    os << "PureState: norm " << norm << " differs from 1";
    throw InvalidStateError(os.str());
  }
}

PureState PureState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InvalidStateError("PureState: cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ShapeError("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

DensityOperator PureState::projector() const {
  return DensityOperator::from_channel_output(amplitudes_ * amplitudes_.adjoint());
}

// ---------------------------------------------------------------------------
// ProbabilityDistribution

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidStateError("ProbabilityDistribution: no outcomes");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= -tol::distribution)) {
      std::ostringstream os;
      os << "ProbabilityDistribution: negative weight " << w;
      throw InvalidStateError(os.str());
    }
    total += w;
  }
  if (!(std::abs(total - 1.0) <= tol::distribution)) {
    std::ostringstream os;
    os << "ProbabilityDistribution: weights sum to " << total;
    throw InvalidStateError(os.str());
  }
  for (double& w : weights_) w = std::max(w, 0.0);
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t n) {
  if (n == 0) throw InvalidStateError("ProbabilityDistribution: no outcomes");
  return ProbabilityDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityDistribution ProbabilityDistribution::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bernoulli: p must lie in [0, 1]");
  return ProbabilityDistribution({1.0 - p, p});
}

// ---------------------------------------------------------------------------
// Entropies

double von_neumann_entropy(const DensityOperator& rho) {
  const RealVector& spectrum = rho.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) s -= xlog2x(spectrum(i));
  return std::max(s, 0.0);
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "relative_entropy: dimension mismatch " << rho.dim() << " vs " << sigma.dim();
    throw ShapeError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> sigma_eig(sigma.matrix());
  const RealVector& mu = sigma_eig.eigenvalues();
  // Diagonal of rho in sigma's eigenbasis.
  const ComplexMatrix rotated =
      sigma_eig.eigenvectors().adjoint() * rho.matrix() * sigma_eig.eigenvectors();

  double cross = 0.0;
  double kernel_mass = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    const double weight = rotated(k, k).real();
    if (mu(k) > tol::eigen_cutoff) {
      cross += weight * std::log2(mu(k));
    } else {
      kernel_mass += std::max(weight, 0.0);
    }
  }
  if (kernel_mass > tol::eigen_cutoff) return kInfinity;
  return -von_neumann_entropy(rho) - cross;
}

double shannon_entropy(std::span<const double> weights) {
  double h = 0.0;
  for (double w : weights) {
    if (w < -tol::distribution) throw InvalidStateError("shannon_entropy: negative weight");
    if (w > 0.0) h -= w * std::log2(w);
  }
  return std::max(h, 0.0);
}

double shannon_entropy(const ProbabilityDistribution& p) { return shannon_entropy(p.weights()); }

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binary_entropy: p must lie in [0, 1]");
  const double q = 1.0 - p;
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h;
}

// ---------------------------------------------------------------------------
// Composite systems

DensityOperator partial_trace(const DensityOperator& rho, std::size_t dim_a, std::size_t dim_b,
                              Subsystem keep) {
  if (dim_a == 0 || dim_b == 0 || dim_a * dim_b != rho.dim()) {
    std::ostringstream os;
    os << "partial_trace: " << dim_a << "x" << dim_b << " does not factor dimension " << rho.dim();
    throw ShapeError(os.str());
  }
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out;
  if (keep == Subsystem::A) {
    out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index b = 0; b < db; ++b) out(i, j) += m(i * db + b, j * db + b);
  } else {
    out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index a = 0; a < da; ++a) out += m.block(a * db, a * db, db, db);
  }
  return DensityOperator::from_channel_output(std::move(out));
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) throw ShapeError("trace_distance: dimension mismatch");
  return hermitian_eigenvalues(a.matrix() - b.matrix()).cwiseAbs().sum();
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
  require_within_cap(a.dim() * b.dim(), "tensor_product");
  return DensityOperator::from_channel_output(kron(a.matrix(), b.matrix()));
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": number of copies must be positive");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= base;
    require_within_cap(total, what);
  }
  return total;
}

}  // namespace

DensityOperator tensor_power(const DensityOperator& rho, std::size_t n) {
  checked_power(rho.dim(), n, "tensor_power");
  ComplexMatrix out = rho.matrix();
  for (std::size_t i = 1; i < n; ++i) out = kron(out, rho.matrix());
  return DensityOperator::from_channel_output(std::move(out));
}

PureState tensor_power(const PureState& psi, std::size_t n) {
  checked_power(psi.dim(), n, "tensor_power");
  ComplexVector out = psi.amplitudes();
  for (std::size_t i = 1; i < n; ++i) out = kron(out, psi.amplitudes());
  return PureState::normalized(std::move(out));
}

}  // namespace frameness

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

#include "frameness/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frameness/frameness.hpp"

namespace frameness {

OrbitEnsemble::OrbitEnsemble(std::vector<DensityOperator> states) : states_(std::move(states)) {
  if (states_.empty()) throw ShapeError("OrbitEnsemble: empty ensemble");
  for (const auto& s : states_)
    if (s.dim() != states_.front().dim()) throw ShapeError("OrbitEnsemble: states differ in dimension");
}

DensityOperator OrbitEnsemble::average() const {
  ComplexMatrix sum = ComplexMatrix::Zero(states_.front().matrix().rows(), states_.front().matrix().cols());
  for (const auto& s : states_) sum += s.matrix();
  return DensityOperator::from_channel_output(sum * prior());
}

DiscretePOVM::DiscretePOVM(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw ShapeError("DiscretePOVM: no effects");
  const auto d = effects_.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (const auto& e : effects_) {
    if (e.rows() != d || e.cols() != d) throw ShapeError("DiscretePOVM: effects differ in shape");
    if (!is_hermitian(e)) throw InvalidStateError("DiscretePOVM: effect is not Hermitian");
    const double smallest = hermitian_eigenvalues(e)(0);
    if (smallest < -tol::psd) {
      std::ostringstream os;
      os << "DiscretePOVM: effect is not positive (smallest eigenvalue " << smallest << ")";
      throw InvalidStateError(os.str());
    }
    total += e;
  }
  const double dev = max_abs(total - ComplexMatrix::Identity(d, d));
  if (dev > 1e-9) {
    std::ostringstream os;
    os << "DiscretePOVM: effects do not sum to the identity (deviation " << dev << ")";
    throw InvalidStateError(os.str());
  }
}

DiscretePOVM DiscretePOVM::projective(const ComplexMatrix& basis_unitary) {
  if (!is_unitary(basis_unitary)) throw DomainError("DiscretePOVM::projective: basis is not unitary");
  std::vector<ComplexMatrix> effects;
  for (Eigen::Index k = 0; k < basis_unitary.cols(); ++k) {
    const ComplexVector v = basis_unitary.col(k);
    effects.push_back(v * v.adjoint());
  }
  return DiscretePOVM(std::move(effects));
}

DiscretePOVM DiscretePOVM::trivial(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DiscretePOVM({ComplexMatrix::Identity(d, d)});
}

DiscretePOVM DiscretePOVM::coarse_grain(const std::vector<std::size_t>& groups) const {
  if (groups.size() != effects_.size()) throw ShapeError("coarse_grain: one group index per effect required");
  const std::size_t n_out = *std::max_element(groups.begin(), groups.end()) + 1;
  const auto d = effects_.front().rows();
  std::vector<ComplexMatrix> merged(n_out, ComplexMatrix::Zero(d, d));
  for (std::size_t i = 0; i < effects_.size(); ++i) merged[groups[i]] += effects_[i];
  return DiscretePOVM(std::move(merged));
}

OrbitEnsemble orbit_ensemble(const FiniteGroupRep& rep, const DensityOperator& rho) {
  if (rep.dim() != rho.dim()) throw ShapeError("orbit_ensemble: dimension mismatch");
  std::vector<DensityOperator> states;
  states.reserve(rep.order());
  for (const auto& u : rep.unitaries())
    states.push_back(DensityOperator::from_channel_output(u * rho.matrix() * u.adjoint()));
  return OrbitEnsemble(std::move(states));
}

double mutual_information(const OrbitEnsemble& ensemble, const DiscretePOVM& povm) {
  if (ensemble.dim() != povm.dim()) throw ShapeError("mutual_information: dimension mismatch");
  const std::size_t n = ensemble.size();
  const std::size_t k = povm.size();
  // conditional[g][g'] = Tr(rho_g E_g')
  std::vector<std::vector<double>> conditional(n, std::vector<double>(k));
  std::vector<double> marginal(k, 0.0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t o = 0; o < k; ++o) {
      const double p = std::max(0.0, (ensemble.states()[g].matrix() * povm.effects()[o]).trace().real());
      conditional[g][o] = p;
      marginal[o] += ensemble.prior() * p;
    }
  double info = 0.0;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t o = 0; o < k; ++o) {
      const double p = conditional[g][o];
      if (p > 0.0 && marginal[o] > 0.0) info += ensemble.prior() * p * std::log2(p / marginal[o]);
    }
  return std::max(info, 0.0);
}

double holevo_chi(const OrbitEnsemble& ensemble) {
  double mean_entropy = 0.0;
  for (const auto& s : ensemble.states()) mean_entropy += von_neumann_entropy(s);
  return von_neumann_entropy(ensemble.average()) - ensemble.prior() * mean_entropy;
}

DiscretePOVM square_root_measurement(const OrbitEnsemble& ensemble) {
  const DensityOperator avg = ensemble.average();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(avg.matrix());
  const RealVector& values = eig.eigenvalues();
  const ComplexMatrix& vectors = eig.eigenvectors();
  RealVector inv_sqrt(values.size());
  RealVector kernel(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const bool in_support = values(i) > tol::eigen_cutoff;
    inv_sqrt(i) = in_support ? 1.0 / std::sqrt(values(i)) : 0.0;
    kernel(i) = in_support ? 0.0 : 1.0;
  }
  const ComplexMatrix s_inv_sqrt = vectors * inv_sqrt.asDiagonal() * vectors.adjoint();
  const ComplexMatrix null_projector = vectors * kernel.asDiagonal() * vectors.adjoint();
  std::vector<ComplexMatrix> effects;
  for (const auto& state : ensemble.states()) {
    ComplexMatrix e = s_inv_sqrt * (ensemble.prior() * state.matrix()) * s_inv_sqrt +
                      ensemble.prior() * null_projector;
    effects.push_back(0.5 * (e + e.adjoint()));
  }
  return DiscretePOVM(std::move(effects));
}

double HolevoReport::ratio() const {
  if (asymmetry <= 1e-12) return best_info <= 1e-12 ? 1.0 : 0.0;
  return best_info / asymmetry;
}

HolevoReport holevo_bound_check(const FiniteGroupRep& rep, const DensityOperator& rho,
                                const std::vector<LabeledPOVM>& povms) {
  HolevoReport report;
  const OrbitEnsemble ensemble = orbit_ensemble(rep, rho);
  report.asymmetry = g_asymmetry(Twirl::finite(rep), rho).asymmetry;
  report.chi = holevo_chi(ensemble);
  report.best_info = 0.0;
  for (const auto& candidate : povms) {
    const double info = mutual_information(ensemble, candidate.povm);
    if (report.best_povm.empty() || info > report.best_info) {
      report.best_info = info;
      report.best_povm = candidate.label;
    }
  }
  report.holds = report.best_info <= report.asymmetry + 1e-8;
  return report;
}

}  // namespace frameness

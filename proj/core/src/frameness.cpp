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

#include "frameness/frameness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace frameness {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Finite: return "finite";
    case GroupKind::U1: return "u1";
    case GroupKind::SU2: return "su2";
  }
  return "unknown";
}

GroupKind parse_group_kind(const std::string& name) {
  if (name == "finite") return GroupKind::Finite;
  if (name == "u1") return GroupKind::U1;
  if (name == "su2") return GroupKind::SU2;
  throw DomainError("unknown group kind '" + name + "'");
}

// ---------------------------------------------------------------------------
// Twirl

Twirl Twirl::finite(FiniteGroupRep rep) {
  require_valid(rep);
  return Twirl(Rep(std::move(rep)));
}

Twirl Twirl::u1(ChargeGrading grading) { return Twirl(Rep(std::move(grading))); }

Twirl Twirl::su2(std::shared_ptr<const CollectiveSpinRep> rep) {
  if (!rep) throw DomainError("Twirl::su2: null representation");
  return Twirl(Rep(std::move(rep)));
}

Twirl Twirl::su2(int n_qubits) {
  return su2(std::make_shared<const CollectiveSpinRep>(CollectiveSpinRep::build(n_qubits)));
}

GroupKind Twirl::kind() const { return static_cast<GroupKind>(rep_.index()); }

std::size_t Twirl::dim() const {
  switch (kind()) {
    case GroupKind::Finite: return finite_rep().dim();
    case GroupKind::U1: return grading().dim();
    case GroupKind::SU2: return spin_rep().dim();
  }
  return 0;
}

const FiniteGroupRep& Twirl::finite_rep() const {
  if (const auto* r = std::get_if<FiniteGroupRep>(&rep_)) return *r;
  throw DomainError("Twirl: not a finite-group twirl");
}

const ChargeGrading& Twirl::grading() const {
  if (const auto* g = std::get_if<ChargeGrading>(&rep_)) return *g;
  throw DomainError("Twirl: not a U(1) twirl");
}

const CollectiveSpinRep& Twirl::spin_rep() const {
  if (const auto* r = std::get_if<std::shared_ptr<const CollectiveSpinRep>>(&rep_)) return **r;
  throw DomainError("Twirl: not an SU(2) twirl");
}

ComplexMatrix Twirl::apply(const ComplexMatrix& x) const {
  if (x.rows() != x.cols() || static_cast<std::size_t>(x.rows()) != dim()) {
    std::ostringstream os;
    os << "twirl: operator of dimension " << x.rows() << "x" << x.cols()
       << " does not match representation dimension " << dim();
    throw ShapeError(os.str());
  }
  switch (kind()) {
    case GroupKind::Finite: {
      const auto& rep = finite_rep();
      ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
      for (const auto& u : rep.unitaries()) out.noalias() += u * x * u.adjoint();
      return out / static_cast<double>(rep.order());
    }
    case GroupKind::U1: {
      const auto& charges = grading().charges();
      ComplexMatrix out = x;
      for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index k = 0; k < x.cols(); ++k)
          if (charges[static_cast<std::size_t>(i)] != charges[static_cast<std::size_t>(k)]) out(i, k) = 0.0;
      return out;
    }
    case GroupKind::SU2: {
      const auto& rep = spin_rep();
      ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
      for (int j = 0; j <= rep.j_max(); ++j) {
        const auto irrep = static_cast<Eigen::Index>(2 * j + 1);
        const auto mult = static_cast<Eigen::Index>(rep.multiplicity(j));
        const ComplexMatrix b = rep.block(j);
        const ComplexMatrix local = b.adjoint() * x * b;
        // sigma_j[a, a'] = sum_m <j,m,a| x |j,m,a'>
        ComplexMatrix reduced = ComplexMatrix::Zero(mult, mult);
        for (Eigen::Index m = 0; m < irrep; ++m) reduced += local.block(m * mult, m * mult, mult, mult);
        reduced /= static_cast<double>(irrep);
        ComplexMatrix decohered = ComplexMatrix::Zero(local.rows(), local.cols());
        for (Eigen::Index m = 0; m < irrep; ++m) decohered.block(m * mult, m * mult, mult, mult) = reduced;
        out.noalias() += b * decohered * b.adjoint();
      }
      return out;
    }
  }
  throw DomainError("twirl: unknown group kind");
}

KrausChannel Twirl::as_channel() const {
  switch (kind()) {
    case GroupKind::Finite: return group_average(finite_rep().unitaries());
    case GroupKind::U1: {
      std::vector<ComplexMatrix> projectors;
      for (auto& sector : charge_sector_projectors(grading())) projectors.push_back(std::move(sector.projector));
      return pinching(projectors);
    }
    case GroupKind::SU2: {
      const auto& rep = spin_rep();
      BlockStructure blocks;
      for (int j = 0; j <= rep.j_max(); ++j) {
        blocks.decohered.push_back(static_cast<std::size_t>(2 * j + 1));
        blocks.preserved.push_back(rep.multiplicity(j));
      }
      return conditional_expectation(blocks, rep.schur_basis().cast<complex_t>());
    }
  }
  throw DomainError("twirl: unknown group kind");
}

std::vector<ComplexMatrix> Twirl::sample_group_action(std::size_t count, Rng& rng) const {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<ComplexMatrix> out;
  switch (kind()) {
    case GroupKind::Finite: return finite_rep().unitaries();
    case GroupKind::U1: {
      const auto& charges = grading().charges();
      for (std::size_t s = 0; s < count; ++s) {
        const double phi = angle(rng);
        ComplexVector phases(static_cast<Eigen::Index>(charges.size()));
        for (std::size_t i = 0; i < charges.size(); ++i)
          phases(static_cast<Eigen::Index>(i)) = std::polar(1.0, phi * charges[i]);
        out.push_back(phases.asDiagonal());
      }
      return out;
    }
    case GroupKind::SU2: {
      for (std::size_t s = 0; s < count; ++s) {
        const double a = angle(rng), b = angle(rng), c = angle(rng);
        out.push_back(spin_rep().rotation({a, b, c}));
      }
      return out;
    }
  }
  return out;
}

DensityOperator twirl(const Twirl& t, const DensityOperator& rho) {
  return DensityOperator::from_channel_output(t.apply(rho.matrix()));
}

bool is_invariant(const Twirl& t, const DensityOperator& rho, double tolerance) {
  return max_abs(t.apply(rho.matrix()) - rho.matrix()) <= tolerance;
}

// ---------------------------------------------------------------------------
// Asymmetry

AsymmetryResult g_asymmetry(const Twirl& t, const DensityOperator& rho) {
  DensityOperator twirled = twirl(t, rho);
  const double s_in = von_neumann_entropy(rho);
  const double s_out = von_neumann_entropy(twirled);
  return AsymmetryResult{s_out - s_in, std::move(twirled), s_in, s_out};
}

double relative_entropy_of_frameness(const Twirl& t, const DensityOperator& rho) {
  return g_asymmetry(t, rho).asymmetry;
}

double invariant_state_oracle(const Twirl& t, const DensityOperator& rho, std::size_t trials,
                              std::uint64_t seed) {
  if (trials == 0) throw DomainError("invariant_state_oracle: need at least one trial");
  const DensityOperator projected = twirl(t, rho);
  double best = relative_entropy(rho, projected);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const std::size_t rank = 1 + trial % t.dim();
    const DensityOperator candidate = twirl(t, random_density(t.dim(), rng, rank));
    best = std::min(best, relative_entropy(rho, candidate));
    const double lambda = unit(rng);
    const DensityOperator mixture = DensityOperator::from_channel_output(
        lambda * candidate.matrix() + (1.0 - lambda) * projected.matrix());
    best = std::min(best, relative_entropy(rho, mixture));
  }
  return best;
}

double u1_asymmetry_closed_form(const ChargeGrading& grading, const DensityOperator& rho) {
  if (grading.dim() != rho.dim()) throw ShapeError("u1_asymmetry_closed_form: dimension mismatch");
  if (!grading.sectors_one_dimensional())
    throw PreconditionError(
        "u1_asymmetry_closed_form: a charge sector has dimension > 1; use the general twirl");
  std::vector<double> p(rho.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    p[i] = std::max(rho.matrix()(k, k).real(), 0.0);
  }
  return shannon_entropy(p) - von_neumann_entropy(rho);
}

double su2_pure_asymmetry_closed_form(const ProbabilityDistribution& p,
                                      const std::vector<ProbabilityDistribution>& q, int j_max) {
  if (j_max < 0) throw DomainError("su2_pure_asymmetry_closed_form: j_max must be nonnegative");
  if (p.size() != static_cast<std::size_t>(j_max) + 1)
    throw InvalidStateError("su2_pure_asymmetry_closed_form: need one weight per j = 0..j_max");
  if (q.size() != static_cast<std::size_t>(j_max))
    throw InvalidStateError("su2_pure_asymmetry_closed_form: need one Schmidt spectrum per j < j_max");
  const int n_qubits = 2 * j_max;
  for (int j = 0; j < j_max; ++j) {
    const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(2 * j + 1),
                                                    multiplicity_dimension(n_qubits, j));
    if (q[static_cast<std::size_t>(j)].size() > limit) {
      std::ostringstream os;
      os << "su2_pure_asymmetry_closed_form: q^(" << j << ") has more than " << limit << " entries";
      throw InvalidStateError(os.str());
    }
  }
  double value = p[static_cast<std::size_t>(j_max)] * std::log2(2.0 * j_max + 1.0);
  for (int j = 0; j < j_max; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    value += p[idx] * (std::log2(2.0 * j + 1.0) + shannon_entropy(q[idx]));
  }
  return value + shannon_entropy(p);
}

Su2PureDecomposition su2_pure_decomposition(const CollectiveSpinRep& rep, const PureState& psi) {
  if (psi.dim() != rep.dim()) throw ShapeError("su2_pure_decomposition: dimension mismatch");
  const ComplexVector coords = rep.schur_basis().cast<complex_t>().adjoint() * psi.amplitudes();
  Su2PureDecomposition out;
  for (int j = 0; j <= rep.j_max(); ++j) {
    const auto irrep = static_cast<Eigen::Index>(2 * j + 1);
    const auto mult = static_cast<Eigen::Index>(rep.multiplicity(j));
    ComplexMatrix c(irrep, mult);
    for (Eigen::Index m = 0; m < irrep; ++m)
      for (Eigen::Index a = 0; a < mult; ++a)
        c(m, a) = coords(static_cast<Eigen::Index>(rep.block_offset(j)) + m * mult + a);
    const double weight = c.squaredNorm();
    out.sector_weights.push_back(weight);
    if (j == rep.j_max()) break;
    std::vector<double> spectrum;
    if (weight > tol::eigen_cutoff) {
      Eigen::JacobiSVD<ComplexMatrix> svd(c / std::sqrt(weight));
      for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        spectrum.push_back(svd.singularValues()(k) * svd.singularValues()(k));
      double total = 0.0;
      for (double s : spectrum) total += s;
      for (double& s : spectrum) s /= total;
    } else {
      spectrum.push_back(1.0);
    }
    out.schmidt_spectra.push_back(std::move(spectrum));
  }
  return out;
}

PureState maximal_asymmetry_state_u1(int n_max) {
  if (n_max < 0) throw DomainError("maximal_asymmetry_state: n_max must be nonnegative");
  const auto n = static_cast<Eigen::Index>(n_max) + 1;
  return PureState::normalized(ComplexVector::Ones(n));
}

PureState maximal_asymmetry_state_su2(const CollectiveSpinRep& rep) {
  // Weight of sector j is dim M_j * d_j with d_j = min(dim M_j, dim N_j);
  // inside the sector, phi_k = |j, j - k> is paired with alpha = k.
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(rep.dim()));
  double d_star = 0.0;
  for (int j = 0; j <= rep.j_max(); ++j) {
    const double irrep = 2.0 * j + 1.0;
    const double d_j = std::min(irrep, static_cast<double>(rep.multiplicity(j)));
    d_star += irrep * d_j;
  }
  for (int j = 0; j <= rep.j_max(); ++j) {
    const std::size_t irrep = static_cast<std::size_t>(2 * j + 1);
    const std::size_t d_j = std::min(irrep, rep.multiplicity(j));
    const double amplitude = std::sqrt(static_cast<double>(irrep) / d_star);  // sqrt(M_j d_j / d*) / sqrt(d_j)
    for (std::size_t k = 0; k < d_j; ++k)
      psi += amplitude * rep.basis_vector(j, j - static_cast<int>(k), k);
  }
  return PureState::normalized(std::move(psi));
}

PureState maximal_asymmetry_state(GroupKind kind, const MaximalStateParams& params) {
  switch (kind) {
    case GroupKind::U1: return maximal_asymmetry_state_u1(params.n_max);
    case GroupKind::SU2: return maximal_asymmetry_state_su2(CollectiveSpinRep::build(params.n_qubits));
    case GroupKind::Finite: break;
  }
  throw DomainError("maximal_asymmetry_state: supported for u1 and su2 only");
}

double max_su2_asymmetry_value(double j_max) {
  if (j_max < 0.0) throw DomainError("max_su2_asymmetry_value: j_max must be nonnegative");
  return std::log2(4.0 / 3.0 * j_max * j_max * j_max + 5.0 / 3.0 * j_max + 1.0);
}

}  // namespace frameness

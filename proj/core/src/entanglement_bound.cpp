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

#include "frameness/entanglement_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "frameness/random.hpp"

namespace frameness {

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b, DensityOperator state)
    : dim_a_(dim_a), dim_b_(dim_b), state_(std::move(state)) {
  if (dim_a_ == 0 || dim_b_ == 0 || dim_a_ * dim_b_ != state_.dim())
    throw ShapeError("BipartiteState: local dimensions do not factor the state dimension");
}

DensityOperator BipartiteState::reduced(Subsystem keep) const {
  return partial_trace(state_, dim_a_, dim_b_, keep);
}

BipartiteState bell_diagonal_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bell_diagonal_state: p must lie in [0, 1]");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  // p |phi+><phi+| + (1-p) |phi-><phi-| in the basis 00, 01, 10, 11
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(0, 3) = p - 0.5;
  m(3, 0) = p - 0.5;
  return BipartiteState(2, 2, DensityOperator(std::move(m)));
}

KrausChannel dephasing_channel(const ComplexMatrix& basis_unitary) {
  if (!is_unitary(basis_unitary)) throw DomainError("dephasing_channel: basis matrix is not unitary");
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < basis_unitary.cols(); ++k) {
    const ComplexVector v = basis_unitary.col(k);
    kraus.push_back(v * v.adjoint());
  }
  return KrausChannel(std::move(kraus));
}

namespace {

// Entropy of the state after dephasing one side, without building Kraus lifts.
double dephased_entropy(const BipartiteState& rho, const ComplexMatrix& basis_unitary, Subsystem side) {
  const std::size_t local = side == Subsystem::B ? rho.dim_b() : rho.dim_a();
  const std::size_t other = side == Subsystem::B ? rho.dim_a() : rho.dim_b();
  if (static_cast<std::size_t>(basis_unitary.rows()) != local || basis_unitary.cols() != basis_unitary.rows())
    throw ShapeError("dephasing_upper_bound: basis dimension does not match the subsystem");
  const auto id = ComplexMatrix::Identity(static_cast<Eigen::Index>(other), static_cast<Eigen::Index>(other));
  const ComplexMatrix& m = rho.state().matrix();
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < basis_unitary.cols(); ++k) {
    const ComplexVector v = basis_unitary.col(k);
    const ComplexMatrix proj = v * v.adjoint();
    const ComplexMatrix lifted = side == Subsystem::B ? kron(id, proj) : kron(proj, id);
    out.noalias() += lifted * m * lifted;
  }
  return von_neumann_entropy(DensityOperator::from_channel_output(std::move(out)));
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

struct Objective {
  const BipartiteState* rho;
  Subsystem side;
  double entropy_in;
  double operator()(double theta, double gamma) const {
    return dephased_entropy(*rho, two_qubit_parameterized_unitary(theta, gamma), side) - entropy_in;
  }
};

double gsl_objective(const gsl_vector* x, void* params) {
  const auto* f = static_cast<const Objective*>(params);
  return (*f)(gsl_vector_get(x, 0), gsl_vector_get(x, 1));
}

struct Candidate {
  double value;
  double theta;
  double gamma;
};

Candidate nelder_mead(const Objective& f, Candidate start, double step) {
  gsl_set_error_handler_off();
  gsl_multimin_function fn;
  fn.n = 2;
  fn.f = &gsl_objective;
  fn.params = const_cast<Objective*>(&f);

  gsl_vector* x = gsl_vector_alloc(2);
  gsl_vector* steps = gsl_vector_alloc(2);
  gsl_vector_set(x, 0, start.theta);
  gsl_vector_set(x, 1, start.gamma);
  gsl_vector_set_all(steps, step);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
  gsl_multimin_fminimizer_set(s, &fn, x, steps);

  for (int iter = 0; iter < 500; ++iter) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-10) == GSL_SUCCESS) break;
  }
  Candidate out{s->fval, gsl_vector_get(s->x, 0), gsl_vector_get(s->x, 1)};

  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(steps);
  gsl_vector_free(x);
  return out;
}

}  // namespace

double dephasing_upper_bound(const BipartiteState& rho, const ComplexMatrix& basis_unitary, Subsystem side) {
  if (!is_unitary(basis_unitary)) throw DomainError("dephasing_upper_bound: basis matrix is not unitary");
  return dephased_entropy(rho, basis_unitary, side) - von_neumann_entropy(rho.state());
}

ComplexMatrix two_qubit_parameterized_unitary(double theta, double gamma) {
  const double c = std::cos(theta), s = std::sin(theta);
  ComplexMatrix u(2, 2);
  u << c, s * std::polar(1.0, gamma), s * std::polar(1.0, -gamma), -c;
  return u;
}

double hashing_lower_bound(const BipartiteState& rho) {
  const double coherent = von_neumann_entropy(rho.reduced(Subsystem::A)) - von_neumann_entropy(rho.state());
  return std::max(0.0, coherent);
}

BoundReport optimize_two_qubit_bound(const BipartiteState& rho, const TwoQubitOptimizerOptions& options) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2)
    throw ShapeError("optimize_two_qubit_bound: requires a two-qubit state");
  if (options.grid < 1) throw DomainError("optimize_two_qubit_bound: grid must be positive");

  const Objective f{&rho, options.side, von_neumann_entropy(rho.state())};
  const std::size_t k = options.grid;
  const double d_theta = std::numbers::pi / static_cast<double>(k);
  const double d_gamma = 2.0 * std::numbers::pi / static_cast<double>(k);

  std::vector<Candidate> grid;
  grid.reserve(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const double theta = d_theta * static_cast<double>(a);
      const double gamma = d_gamma * static_cast<double>(b);
      grid.push_back({f(theta, gamma), theta, gamma});
    }
  // Stable sort keeps grid order among ties, so the result does not depend
  // on anything but the grid.
  std::stable_sort(grid.begin(), grid.end(),
                   [](const Candidate& x, const Candidate& y) { return x.value < y.value; });

  Candidate best = grid.front();
  const std::size_t starts = std::min(options.refine_starts, grid.size());
  for (std::size_t i = 0; i < starts; ++i) {
    const Candidate refined = nelder_mead(f, grid[i], 0.5 * d_theta);
    if (refined.value < best.value - 1e-12) best = refined;
  }

  BoundReport report;
  report.side = options.side;
  report.upper = best.value;
  report.theta = wrap(best.theta, std::numbers::pi);
  report.gamma = wrap(best.gamma, 2.0 * std::numbers::pi);
  report.lower = hashing_lower_bound(rho);
  report.tight = std::abs(report.upper - report.lower) <= kTightTolerance;
  return report;
}

BasisSearchResult random_basis_search(const BipartiteState& rho, std::size_t samples, std::uint64_t seed,
                                      Subsystem side) {
  const std::size_t local = side == Subsystem::B ? rho.dim_b() : rho.dim_a();
  const auto n = static_cast<Eigen::Index>(local);
  BasisSearchResult best{dephasing_upper_bound(rho, ComplexMatrix::Identity(n, n), side),
                         ComplexMatrix::Identity(n, n)};
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, s));
    ComplexMatrix u = random_unitary(local, rng);
    const double value = dephasing_upper_bound(rho, u, side);
    if (value < best.upper) best = {value, std::move(u)};
  }
  return best;
}

}  // namespace frameness

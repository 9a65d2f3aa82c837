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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "frameness/asymptotics.hpp"
#include "frameness/channel_calculus.hpp"
#include "frameness/entanglement_bound.hpp"
#include "frameness/estimation.hpp"
#include "frameness/frameness.hpp"
#include "frameness/random.hpp"

using namespace frameness;

namespace {

constexpr std::uint64_t kSeed = 20260416;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Rank-one projectors {U|k><k|U^dagger}.
std::vector<ComplexMatrix> basis_projectors(const ComplexMatrix& u) {
  std::vector<ComplexMatrix> out;
  for (Eigen::Index k = 0; k < u.cols(); ++k) out.push_back(u.col(k) * u.col(k).adjoint());
  return out;
}

// Distance between two dephasing bases as unordered sets of projectors.
double basis_set_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  const auto a = basis_projectors(u);
  const auto b = basis_projectors(v);
  const double direct = std::max(max_abs(a[0] - b[0]), max_abs(a[1] - b[1]));
  const double swapped = std::max(max_abs(a[0] - b[1]), max_abs(a[1] - b[0]));
  return std::min(direct, swapped);
}

// 1. Bell-diagonal family: dephasing bound equals the coherent-information
// bound 1 - H2(p), minimized at the computational basis.
void bell_diagonal_bound(Outcome& o) {
  constexpr double kValueTol = 1e-4;
  constexpr double kBasisTol = 1e-3;
  constexpr double kRuntime = 10.0;
  const auto start = std::chrono::steady_clock::now();
  const ComplexMatrix reference = two_qubit_parameterized_unitary(std::numbers::pi / 2, 0.0);
  double worst = 0.0;
  for (double p : {0.5, 0.6, 0.75, 0.9, 1.0}) {
    const BipartiteState rho = bell_diagonal_state(p);
    const BoundReport r = optimize_two_qubit_bound(rho);
    const double expected = 1.0 - binary_entropy(p);
    worst = std::max({worst, std::abs(r.upper - expected), std::abs(r.lower - expected)});
    const ComplexMatrix found = two_qubit_parameterized_unitary(r.theta, r.gamma);
    std::ostringstream tag;
    tag << "p=" << p;
    o.require(std::abs(r.upper - expected) <= kValueTol && std::abs(r.lower - expected) <= kValueTol,
              tag.str() + " value");
    o.require(r.tight, tag.str() + " tight");
    if (p < 1.0) {
      // Same dephasing channel as the reference point.
      o.require(basis_set_distance(found, reference) <= kBasisTol, tag.str() + " argmin basis");
    } else {
      // |phi+> is invariant under U (x) conj(U), so every local basis is equivalent.
      o.require(std::abs(dephasing_upper_bound(rho, reference) - r.upper) <= kValueTol, tag.str() + " argmin value");
    }
    o.detail << " p=" << p << ":(" << r.theta << "," << r.gamma << ")";
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < kRuntime, "runtime");
  o.detail << " max|err|=" << worst << " time=" << elapsed << "s";
}

// 2. Two-qubit optimal state for collective SU(2).
void two_qubit_su2_optimum(Outcome& o) {
  constexpr double kTol = 1e-8;
  ComplexVector singlet(4);
  singlet << 0, std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2, 0;
  const Twirl t = Twirl::su2(2);
  double worst = 0.0;
  for (std::size_t k : {0, 3}) {
    const ComplexVector triplet = PureState::basis(4, k).amplitudes();
    const PureState psi = PureState::normalized(std::sqrt(3.0) / 2 * triplet + 0.5 * singlet);
    worst = std::max(worst, std::abs(g_asymmetry(t, psi.projector()).asymmetry - 2.0));
  }
  const double constructed = g_asymmetry(t, maximal_asymmetry_state(GroupKind::SU2, {0, 2}).projector()).asymmetry;
  o.require(worst <= kTol, "given state");
  o.require(std::abs(constructed - 2.0) <= kTol, "constructed state");
  o.detail << " |A-2|=" << worst << " constructed=" << constructed;
}

// 3. SU(2) maximum for N = 2, 4 and the N = 4 multiplicities.
void su2_maximum(Outcome& o) {
  constexpr double kTol = 1e-7;
  for (int n : {2, 4}) {
    auto rep = std::make_shared<const CollectiveSpinRep>(CollectiveSpinRep::build(n));
    const double j = n / 2.0;
    const double formula = std::log2(4.0 / 3.0 * j * j * j + 5.0 / 3.0 * j + 1.0);
    const double measured = g_asymmetry(Twirl::su2(rep), maximal_asymmetry_state_su2(*rep).projector()).asymmetry;
    o.require(std::abs(measured - formula) <= kTol, "N=" + std::to_string(n));
    o.detail << " N=" << n << ":" << measured << " vs " << formula;
  }
  const CollectiveSpinRep four = CollectiveSpinRep::build(4);
  o.require(four.multiplicity(0) == 2 && four.multiplicity(1) == 3 && four.multiplicity(2) == 1, "multiplicities");
  o.detail << " dims=(" << four.multiplicity(0) << "," << four.multiplicity(1) << "," << four.multiplicity(2) << ")";
}

// 4. U(1) maximum: uniform superposition over charges 0..n_max.
void u1_maximum(Outcome& o) {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (int n_max = 0; n_max <= 15; ++n_max) {
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    const PureState uniform(ComplexVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))));
    const double a = g_asymmetry(Twirl::u1(ChargeGrading::ladder(n_max)), uniform.projector()).asymmetry;
    worst = std::max(worst, std::abs(a - std::log2(n_max + 1.0)));
  }
  o.require(worst <= kTol, "log2(n_max+1)");
  o.detail << " max|err|=" << worst;
}

// 5. Logarithmic growth of the many-copy U(1) asymmetry.
void log_n_scaling(Outcome& o) {
  constexpr double kTol = 0.02;
  constexpr double kPerCopy = 0.05;
  constexpr double kRuntime = 5.0;
  constexpr std::size_t kCopies = 200;
  const auto start = std::chrono::steady_clock::now();
  const double a = u1_ncopy_asymmetry(ProbabilityDistribution::bernoulli(0.5), kCopies);
  const double elapsed = seconds_since(start);
  const double model = 0.5 * std::log2(2 * std::numbers::pi * kCopies / 4.0) + 0.5 * std::numbers::log2e;
  o.require(std::abs(a - model) <= kTol, "model");
  o.require(a / kCopies <= kPerCopy, "A/N");
  o.require(elapsed < kRuntime, "runtime");
  o.detail << " A=" << a << " model=" << model << " A/N=" << a / kCopies << " time=" << elapsed << "s";
}

// 6. Distance to the image of unital idempotent channels.
void image_distance_suite(Outcome& o) {
  constexpr double kTol = 1e-8;
  constexpr int kChannelsPerFamily = 8;
  constexpr int kStates = 50;
  constexpr int kImageSamples = 4;
  double worst_equality = 0.0, worst_violation = 0.0;
  int channels = 0;
  for (int f = 0; f < 3; ++f)
    for (int c = 0; c < kChannelsPerFamily; ++c) {
      Rng rng(derive_seed(kSeed, static_cast<std::uint64_t>(100 * f + c)));
      const std::size_t dim = 2 + static_cast<std::size_t>(c) % 7;
      const KrausChannel ch = random_unital_idempotent_channel(dim, static_cast<ChannelFamily>(f), rng);
      ++channels;
      for (int s = 0; s < kStates; ++s) {
        const DensityOperator rho = random_density(dim, rng, 1 + static_cast<std::size_t>(s) % dim);
        const DensityOperator image = apply(ch, rho);
        const double gap = von_neumann_entropy(image) - von_neumann_entropy(rho);
        worst_equality = std::max(worst_equality, std::abs(relative_entropy(rho, image) - gap));
        for (int k = 0; k < kImageSamples; ++k) {
          const DensityOperator sigma = apply(ch, random_density(dim, rng));
          worst_violation = std::max(worst_violation, gap - relative_entropy(rho, sigma));
        }
      }
    }
  o.require(channels >= 20, "channel count");
  o.require(worst_equality <= kTol, "equality at E(rho)");
  o.require(worst_violation <= kTol, "lower bound over image");
  o.detail << " channels=" << channels << " states/channel=" << kStates << " max|equality err|=" << worst_equality
           << " max violation=" << worst_violation;
}

// 7. Finite-group bound log2|G| over tensor powers.
void finite_group_bound(Outcome& o) {
  constexpr double kTol = 1e-8;
  double worst_margin = -kInfinity;
  for (const auto& [name, rep] : {std::pair{std::string("Z2"), z2_phase_flip()}, std::pair{std::string("D4"), dihedral_group(4)}}) {
    o.require(validate_finite_rep(rep).valid(), name + " valid");
    for (std::uint64_t s = 0; s < 20; ++s) {
      Rng rng(derive_seed(kSeed + 7, s));
      const FiniteBoundReport r = finite_group_bound_check(rep, random_density(2, rng), 3);
      for (const auto& row : r.rows) worst_margin = std::max(worst_margin, row.asymmetry - std::log2(double(rep.order())));
    }
  }
  o.require(worst_margin <= kTol, "A <= log2|G|");
  o.detail << " max(A - log2|G|)=" << worst_margin;
}

// 8. Lie-group bound for the N = 4 maximal state.
void lie_group_bound(Outcome& o) {
  const Su2BoundCheck c = su2_bound_check(maximal_asymmetry_state(GroupKind::SU2, {0, 4}).projector(), 4);
  const double bound = 2 * std::log2(static_cast<double>(binomial(5, 1)));
  o.require(c.asymmetry <= bound, "A <= 2 log2 C(5,1)");
  o.require(std::abs(c.bound.exact - bound) <= 1e-12, "bound value");
  o.detail << " A=" << c.asymmetry << " bound=" << bound;
}

// 9. Number-variance discontinuity witness.
void variance_witness(Outcome& o) {
  const VarianceWitnessReport r = variance_discontinuity_witness({8, 16, 64, 256});
  o.require(r.distance_decreasing, "trace distance decreasing");
  o.require(r.rows.back().trace_distance < r.rows.front().trace_distance, "trace distance shrinks");
  o.require(r.ratio_increasing, "gap/log2 n increasing");
  bool exact = true;
  for (const auto& row : r.rows) {
    const double n = row.n;
    exact = exact && row.variance_psi == n * n && row.variance_phi == n * n - 4 * n;
    o.detail << " n=" << row.n << ":D=" << row.trace_distance << ",V=" << row.variance_psi << "/" << row.variance_phi
             << ",gap/log=" << row.gap_over_log();
  }
  o.require(exact, "V equals n^2 and n^2 - 4n");
}

// 10. Holevo bound on the information extractable from a group orbit.
void holevo_bound(Outcome& o) {
  constexpr double kTol = 1e-8;
  std::vector<FiniteGroupRep> groups{z2_phase_flip(), dihedral_group(3), dihedral_group(4), quaternion_group(),
                                     cyclic_phase_group(ChargeGrading::ladder(3), 4),
                                     tensor_power_rep(z2_phase_flip(), 2)};
  double worst = -kInfinity;
  std::size_t checks = 0;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(derive_seed(kSeed + 10 + g, s));
      const FiniteGroupRep& rep = groups[g];
      const std::size_t d = rep.dim();
      const DensityOperator rho = random_density(d, rng, 1 + s % d);
      std::vector<LabeledPOVM> povms{{"srm", square_root_measurement(orbit_ensemble(rep, rho))}};
      for (int k = 0; k < 3; ++k) {
        povms.push_back({"projective", DiscretePOVM::projective(random_unitary(d, rng))});
        // Naimark: effects V^dagger |i><i| V for a random isometry V.
        const ComplexMatrix v = random_unitary(3 * d, rng).leftCols(static_cast<Eigen::Index>(d));
        std::vector<ComplexMatrix> effects;
        for (Eigen::Index i = 0; i < v.rows(); ++i) effects.push_back(v.row(i).adjoint() * v.row(i));
        povms.push_back({"naimark", DiscretePOVM(effects)});
      }
      const HolevoReport r = holevo_bound_check(rep, rho, povms);
      worst = std::max(worst, r.best_info - r.asymmetry);
      ++checks;
    }
  o.require(worst <= kTol, "H(g':g) <= A_G");
  const DensityOperator plus(ComplexMatrix::Constant(2, 2, 0.5));
  const HolevoReport sat = holevo_bound_check(
      z2_phase_flip(), plus, {{"srm", square_root_measurement(orbit_ensemble(z2_phase_flip(), plus))}});
  o.require(std::abs(sat.best_info - 1.0) <= kTol && std::abs(sat.asymmetry - 1.0) <= kTol, "Z2/|+> saturation");
  o.detail << " orbits=" << checks << " max(info - A_G)=" << worst << " Z2/|+> info=" << sat.best_info;
}

// 11. Relinearized asymmetry per copy converges.
void relinearization(Outcome& o) {
  constexpr double kTol = 0.02;
  const RelinearizedReport r = relinearized_monotone(ProbabilityDistribution::bernoulli(0.5), {100, 200});
  const double change = r.final_relative_change();
  o.require(change < kTol, "relative change");
  o.detail << " L/N(100)=" << r.rows[0].per_copy() << " L/N(200)=" << r.rows[1].per_copy() << " change=" << change
           << " plateau=" << r.predicted_plateau;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"1 bell-diagonal dephasing bound", bell_diagonal_bound},
      {"2 two-qubit su2 optimum", two_qubit_su2_optimum},
      {"3 su2 maximum formula", su2_maximum},
      {"4 u1 maximum", u1_maximum},
      {"5 log-N scaling", log_n_scaling},
      {"6 image distance property suite", image_distance_suite},
      {"7 finite-group bound", finite_group_bound},
      {"8 lie-group bound", lie_group_bound},
      {"9 variance discontinuity witness", variance_witness},
      {"10 holevo bound", holevo_bound},
      {"11 relinearized convergence", relinearization},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.passed) ++failures;
    std::printf("%s %s:%s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

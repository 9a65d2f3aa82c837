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

#include "frameness/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "frameness/frameness.hpp"

namespace frameness {

double mean_charge(const ProbabilityDistribution& p) {
  double mean = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
  return mean;
}

double charge_variance(const ProbabilityDistribution& p) {
  const double mean = mean_charge(p);
  double var = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double dev = static_cast<double>(n) - mean;
    var += dev * dev * p[n];
  }
  return var;
}

double number_variance(const ChargeGrading& grading, const DensityOperator& rho) {
  if (grading.dim() != rho.dim()) throw ShapeError("number_variance: dimension mismatch");
  // N is diagonal, so only the diagonal of rho contributes.
  double first = 0.0, second = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    const double w = rho.matrix()(k, k).real();
    const double c = grading.charges()[i];
    first += w * c;
    second += w * c * c;
  }
  return std::max(second - first * first, 0.0);
}

NumberDistributionProfile convolve_copies(const ProbabilityDistribution& per_copy, std::size_t copies) {
  if (copies == 0) throw DomainError("convolve_copies: number of copies must be positive");
  const std::size_t n_max = per_copy.size() - 1;
  if (n_max > 0 && copies > (kMaxConvolutionSupport - 1) / n_max) {
    std::ostringstream os;
    os << "convolve_copies: support of " << copies << " copies exceeds " << kMaxConvolutionSupport;
    throw ResourceLimitError(os.str());
  }
  std::vector<double> current = per_copy.weights();
  for (std::size_t c = 1; c < copies; ++c) {
    std::vector<double> next(current.size() + n_max, 0.0);
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current[i] == 0.0) continue;
      for (std::size_t k = 0; k <= n_max; ++k) next[i + k] += current[i] * per_copy[k];
    }
    current = std::move(next);
  }
  double total = 0.0;
  for (double w : current) total += w;
  for (double& w : current) w /= total;
  return NumberDistributionProfile{per_copy, copies, ProbabilityDistribution(std::move(current))};
}

double u1_ncopy_asymmetry(const ProbabilityDistribution& per_copy, std::size_t copies) {
  return shannon_entropy(convolve_copies(per_copy, copies).convolved);
}

double gaussian_entropy_model(double variance, std::size_t copies, double constant) {
  if (!(variance > 0.0)) throw DomainError("gaussian_entropy_model: variance must be positive");
  if (copies == 0) throw DomainError("gaussian_entropy_model: number of copies must be positive");
  return 0.5 * std::log2(2.0 * std::numbers::pi * static_cast<double>(copies) * variance) + constant;
}

ScalingReport regularized_asymmetry_table(const ProbabilityDistribution& per_copy,
                                          const std::vector<std::size_t>& copies, double constant) {
  ScalingReport report;
  report.model = "gaussian";
  report.variance = charge_variance(per_copy);
  report.constant = constant;
  std::size_t previous = 0;
  for (std::size_t n : copies) {
    if (n <= previous) throw DomainError("regularized_asymmetry_table: copy counts must strictly increase");
    previous = n;
    ScalingRow row;
    row.copies = n;
    row.asymmetry = u1_ncopy_asymmetry(per_copy, n);
    row.model = report.variance > 0.0 ? gaussian_entropy_model(report.variance, n, constant)
                                      : std::numeric_limits<double>::quiet_NaN();
    row.gap = row.asymmetry - row.model;
    report.rows.push_back(row);
  }
  return report;
}

bool eventually_decreasing(const ScalingReport& report) {
  auto it = std::find_if(report.rows.begin(), report.rows.end(),
                         [](const ScalingRow& r) { return r.asymmetry > 1e-12; });
  if (it == report.rows.end()) return true;
  for (auto next = std::next(it); next != report.rows.end(); ++it, ++next)
    if (next->per_copy() > it->per_copy() + 1e-12) return false;
  return true;
}

std::string scaling_csv(const ScalingReport& report) {
  std::ostringstream os;
  os.precision(12);
  os << "N,A_bits,model_bits,gap_bits,A_over_N\n";
  for (const auto& row : report.rows)
    os << row.copies << ',' << row.asymmetry << ',' << row.model << ',' << row.gap << ',' << row.per_copy()
       << '\n';
  return os.str();
}

bool FiniteBoundReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const FiniteBoundRow& r) { return r.holds; });
}

FiniteBoundReport finite_group_bound_check(const FiniteGroupRep& rep, const DensityOperator& rho,
                                           std::size_t max_copies) {
  if (rho.dim() != rep.dim()) throw ShapeError("finite_group_bound_check: dimension mismatch");
  FiniteBoundReport report;
  report.group_order = rep.order();
  const double bound = std::log2(static_cast<double>(rep.order()));
  for (std::size_t n = 1; n <= max_copies; ++n) {
    const Twirl t = Twirl::finite(tensor_power_rep(rep, n));
    const double a = g_asymmetry(t, tensor_power(rho, n)).asymmetry;
    report.rows.push_back({n, a, bound, a <= bound + 1e-8});
  }
  return report;
}

LieBound lie_group_log_bound(int copies, int d) {
  if (copies < 2 || d < 2) throw DomainError("lie_group_log_bound: need N >= 2 and d >= 2");
  LieBound b;
  b.symmetric_dimension = symmetric_subspace_dimension(copies, d);
  b.exact = 2.0 * std::log2(static_cast<double>(b.symmetric_dimension));
  b.asymptotic = 2.0 * (d - 1) * std::log2(static_cast<double>(copies));
  return b;
}

Su2BoundCheck su2_bound_check(const DensityOperator& rho, int n_qubits) {
  Su2BoundCheck check;
  check.bound = lie_group_log_bound(n_qubits, 2);
  check.asymmetry = g_asymmetry(Twirl::su2(n_qubits), rho).asymmetry;
  check.holds = check.asymmetry <= check.bound.exact + 1e-8;
  return check;
}

double VarianceWitnessRow::gap_over_log() const { return gap() / std::log2(static_cast<double>(n)); }

VarianceWitnessReport variance_discontinuity_witness(const std::vector<int>& n_list) {
  VarianceWitnessReport report;
  for (int n : n_list) {
    if (n <= 4) throw DomainError("variance_discontinuity_witness: each n must exceed 4");
    const ChargeGrading grading({0, n});
    ComplexVector psi(2), phi(2);
    psi << std::sqrt(0.5), std::sqrt(0.5);
    const double shift = 1.0 / std::sqrt(static_cast<double>(n));
    phi << std::sqrt(0.5 - shift), std::sqrt(0.5 + shift);
    const DensityOperator rho_psi = PureState(psi).projector();
    const DensityOperator rho_phi = PureState(phi).projector();
    VarianceWitnessRow row;
    row.n = n;
    row.trace_distance = trace_distance(rho_psi, rho_phi);
    row.variance_psi = number_variance(grading, rho_psi);
    row.variance_phi = number_variance(grading, rho_phi);
    report.rows.push_back(row);
  }
  report.distance_decreasing = !report.rows.empty();
  report.ratio_increasing = !report.rows.empty();
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (!(report.rows[i].trace_distance < report.rows[i - 1].trace_distance)) report.distance_decreasing = false;
    if (!(report.rows[i].gap_over_log() > report.rows[i - 1].gap_over_log())) report.ratio_increasing = false;
  }
  return report;
}

double RelinearizedReport::final_relative_change() const {
  if (rows.size() < 2) return 0.0;
  const double prev = rows[rows.size() - 2].per_copy();
  const double last = rows.back().per_copy();
  return std::abs(last - prev) / prev;
}

RelinearizedReport relinearized_monotone(const ProbabilityDistribution& per_copy,
                                         const std::vector<std::size_t>& copies, double constant) {
  RelinearizedReport report;
  report.variance = charge_variance(per_copy);
  report.constant = constant;
  report.predicted_plateau =
      4.0 * std::numbers::pi * report.variance * std::exp2(2.0 * (constant - 0.5));
  std::size_t previous = 0;
  for (std::size_t n : copies) {
    if (n <= previous) throw DomainError("relinearized_monotone: copy counts must strictly increase");
    previous = n;
    RelinearizedRow row;
    row.copies = n;
    row.asymmetry = u1_ncopy_asymmetry(per_copy, n);
    row.linearized = std::exp2(2.0 * row.asymmetry);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace frameness

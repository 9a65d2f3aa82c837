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

#ifndef FRAMENESS_ESTIMATION_HPP
#define FRAMENESS_ESTIMATION_HPP

#include <string>
#include <vector>

#include "frameness/group_reps.hpp"
#include "frameness/operator_core.hpp"

namespace frameness {

/// Equiprobable ensemble {T(g) rho T(g)^dagger} over a finite group.
class OrbitEnsemble {
 public:
  explicit OrbitEnsemble(std::vector<DensityOperator> states);

  std::size_t size() const { return states_.size(); }
  std::size_t dim() const { return states_.front().dim(); }
  const std::vector<DensityOperator>& states() const { return states_; }
  double prior() const { return 1.0 / static_cast<double>(states_.size()); }
  DensityOperator average() const;

 private:
  std::vector<DensityOperator> states_;
};

/// Effects must be PSD (min eigenvalue >= -1e-10) and sum to I within 1e-9.
class DiscretePOVM {
 public:
  explicit DiscretePOVM(std::vector<ComplexMatrix> effects);

  /// Rank-one projectors onto the columns of a unitary.
  static DiscretePOVM projective(const ComplexMatrix& basis_unitary);
  static DiscretePOVM trivial(std::size_t dim);

  std::size_t size() const { return effects_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(effects_.front().rows()); }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }

  /// Merges effects according to `groups` (one output index per effect).
  DiscretePOVM coarse_grain(const std::vector<std::size_t>& groups) const;

 private:
  std::vector<ComplexMatrix> effects_;
};

OrbitEnsemble orbit_ensemble(const FiniteGroupRep& rep, const DensityOperator& rho);

/// H(g' : g) for the uniform prior over the orbit, in bits.
double mutual_information(const OrbitEnsemble& ensemble, const DiscretePOVM& povm);

/// S(average) - average S.
double holevo_chi(const OrbitEnsemble& ensemble);

/// Pretty-good measurement S^{-1/2} (rho_g / |G|) S^{-1/2}, with the kernel
/// of the average S split uniformly across effects.
DiscretePOVM square_root_measurement(const OrbitEnsemble& ensemble);

struct LabeledPOVM {
  std::string label;
  DiscretePOVM povm;
};

struct HolevoReport {
  double asymmetry = 0.0;
  double best_info = 0.0;
  std::string best_povm;
  double chi = 0.0;
  bool holds = false;
  /// best_info / asymmetry, or 1 when both vanish.
  double ratio() const;
};

/// Max mutual information over the supplied POVMs against A_G(rho).
HolevoReport holevo_bound_check(const FiniteGroupRep& rep, const DensityOperator& rho,
                                const std::vector<LabeledPOVM>& povms);

}  // namespace frameness

#endif  // FRAMENESS_ESTIMATION_HPP

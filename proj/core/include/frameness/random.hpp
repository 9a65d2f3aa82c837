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

#ifndef FRAMENESS_RANDOM_HPP
#define FRAMENESS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "frameness/operator_core.hpp"

namespace frameness {

using Rng = std::mt19937_64;

/// Independent per-sample seed derived from a master seed (splitmix64 mix),
/// so sample i gets the same stream regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Random Hermitian matrix with i.i.d. Gaussian entries.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Eigenvalues uniform on the probability simplex restricted to `rank`
/// entries, conjugated by a Haar unitary. rank == 0 means full rank.
DensityOperator random_density(std::size_t dim, Rng& rng, std::size_t rank = 0);

PureState random_pure(std::size_t dim, Rng& rng);

/// Uniform sample from the probability simplex with n outcomes.
std::vector<double> random_simplex(std::size_t n, Rng& rng);

}  // namespace frameness

#endif  // FRAMENESS_RANDOM_HPP

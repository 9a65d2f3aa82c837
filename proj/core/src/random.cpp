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

#include "frameness/random.hpp"

#include <cmath>

namespace frameness {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = complex_t(re, im);
    }
  return g;
}

}  // namespace

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0.0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  return 0.5 * (g + g.adjoint());
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = expo(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

DensityOperator random_density(std::size_t dim, Rng& rng, std::size_t rank) {
  if (rank == 0 || rank > dim) rank = dim;
  std::vector<double> weights = random_simplex(rank, rng);
  weights.resize(dim, 0.0);
  const ComplexMatrix u = random_unitary(dim, rng);
  RealVector diag(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) diag(static_cast<Eigen::Index>(i)) = weights[i];
  return DensityOperator::from_channel_output(u * diag.asDiagonal() * u.adjoint());
}

PureState random_pure(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = complex_t(re, im);
  }
  return PureState::normalized(std::move(v));
}

}  // namespace frameness

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

#include "frameness/channel_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace frameness {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ShapeError("KrausChannel: no Kraus operators");
  const auto d = kraus_.front().rows();
  if (d == 0) throw ShapeError("KrausChannel: zero dimension");
  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  for (const auto& e : kraus_) {
    if (e.rows() != d || e.cols() != d)
      throw ShapeError("KrausChannel: Kraus operators must be square with a common dimension");
    completeness.noalias() += e.adjoint() * e;
  }
  const double dev = max_abs(completeness - ComplexMatrix::Identity(d, d));
  if (!(dev <= tol::completeness)) {
    std::ostringstream os;
    os << "KrausChannel: not trace preserving (completeness deviation " << dev << ")";
    throw InvalidStateError(os.str());
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return KrausChannel({ComplexMatrix::Identity(d, d)});
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& x) const {
  if (static_cast<std::size_t>(x.rows()) != dim() || x.cols() != x.rows())
    throw ShapeError("KrausChannel::apply: operator dimension does not match the channel");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& e : kraus_) out.noalias() += e * x * e.adjoint();
  return out;
}

ComplexMatrix KrausChannel::adjoint_apply(const ComplexMatrix& x) const {
  if (static_cast<std::size_t>(x.rows()) != dim() || x.cols() != x.rows())
    throw ShapeError("KrausChannel::adjoint_apply: operator dimension does not match the channel");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& e : kraus_) out.noalias() += e.adjoint() * x * e;
  return out;
}

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
  return DensityOperator::from_channel_output(ch.apply(rho.matrix()));
}

ComplexMatrix adjoint_apply(const KrausChannel& ch, const ComplexMatrix& a) { return ch.adjoint_apply(a); }

ComplexVector vectorize(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (v.size() != d * d) throw ShapeError("unvectorize: length is not dim^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

ComplexMatrix superoperator(const KrausChannel& ch) {
  const auto d = static_cast<Eigen::Index>(ch.dim());
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& e : ch.kraus()) m += kron(ComplexMatrix(e.conjugate()), e);
  return m;
}

bool is_unital(const KrausChannel& ch) {
  const auto d = static_cast<Eigen::Index>(ch.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return max_abs(ch.apply(id) - id) <= tol::unital;
}

bool is_idempotent(const KrausChannel& ch) {
  const ComplexMatrix m = superoperator(ch);
  return max_abs(m * m - m) <= tol::idempotent;
}

KrausChannel lift(const KrausChannel& ch, std::size_t other_dim, bool act_on_second) {
  const auto d = static_cast<Eigen::Index>(other_dim);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ch.kraus().size());
  for (const auto& e : ch.kraus()) kraus.push_back(act_on_second ? kron(id, e) : kron(e, id));
  return KrausChannel(std::move(kraus));
}

bool commutant_fixed_point_check(const KrausChannel& ch, const ComplexMatrix& tau) {
  if (!is_unital(ch)) throw PreconditionError("commutant_fixed_point_check: channel is not unital");
  if (static_cast<std::size_t>(tau.rows()) != ch.dim() || tau.cols() != tau.rows())
    throw ShapeError("commutant_fixed_point_check: operator dimension does not match the channel");
  for (const auto& e : ch.kraus()) {
    if (max_abs(tau * e - e * tau) > tol::commutator) return false;
    if (max_abs(tau * e.adjoint() - e.adjoint() * tau) > tol::commutator) return false;
  }
  return true;
}

ImageFixReport image_fix_equivalence_check(const KrausChannel& ch, std::size_t samples,
                                           std::uint64_t seed) {
  ImageFixReport report;
  report.samples = samples;
  report.idempotent = is_idempotent(ch);
  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, s));
    const std::size_t rank = 1 + s % ch.dim();
    const DensityOperator rho = random_density(ch.dim(), rng, rank);
    const ComplexMatrix once = ch.apply(rho.matrix());
    const double dev = max_abs(ch.apply(once) - once);
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev <= tol::idempotent) ++report.fixed;
  }
  return report;
}

double image_distance(const KrausChannel& ch, const DensityOperator& rho) {
  if (rho.dim() != ch.dim()) throw ShapeError("image_distance: dimension mismatch");
  if (!is_unital(ch)) throw PreconditionError("image_distance: channel is not unital");
  if (!is_idempotent(ch)) throw PreconditionError("image_distance: channel is not idempotent");
  return von_neumann_entropy(apply(ch, rho)) - von_neumann_entropy(rho);
}

// ---------------------------------------------------------------------------
// Generators

KrausChannel pinching(const std::vector<ComplexMatrix>& projectors) { return KrausChannel(projectors); }

KrausChannel group_average(const std::vector<ComplexMatrix>& unitaries) {
  if (unitaries.empty()) throw ShapeError("group_average: empty group");
  const double w = 1.0 / std::sqrt(static_cast<double>(unitaries.size()));
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(unitaries.size());
  for (const auto& u : unitaries) kraus.push_back(w * u);
  return KrausChannel(std::move(kraus));
}

namespace {

/// X^a Z^b on C^m.
ComplexMatrix weyl(std::size_t m, std::size_t a, std::size_t b) {
  const auto n = static_cast<Eigen::Index>(m);
  ComplexMatrix w = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((b * k) % m) / static_cast<double>(m);
    w(static_cast<Eigen::Index>((k + a) % m), static_cast<Eigen::Index>(k)) = std::polar(1.0, angle);
  }
  return w;
}

std::size_t uniform_index(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

KrausChannel conditional_expectation(const BlockStructure& blocks, const ComplexMatrix& basis) {
  if (blocks.decohered.size() != blocks.preserved.size())
    throw ShapeError("conditional_expectation: block lists differ in length");
  std::size_t total = 0;
  for (std::size_t q = 0; q < blocks.decohered.size(); ++q) total += blocks.decohered[q] * blocks.preserved[q];
  if (static_cast<std::size_t>(basis.rows()) != total || basis.cols() != basis.rows())
    throw ShapeError("conditional_expectation: basis does not match the block dimensions");

  std::vector<ComplexMatrix> kraus;
  std::size_t offset = 0;
  for (std::size_t q = 0; q < blocks.decohered.size(); ++q) {
    const std::size_t m = blocks.decohered[q];
    const std::size_t n = blocks.preserved[q];
    const auto width = static_cast<Eigen::Index>(m * n);
    const ComplexMatrix v = basis.middleCols(static_cast<Eigen::Index>(offset), width);
    const ComplexMatrix id_n = ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const double w = 1.0 / static_cast<double>(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        kraus.push_back(v * (w * kron(weyl(m, a, b), id_n)) * v.adjoint());
    offset += m * n;
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel random_unital_idempotent_channel(std::size_t dim, ChannelFamily family, Rng& rng) {
  if (dim == 0) throw ShapeError("random_unital_idempotent_channel: zero dimension");
  const ComplexMatrix v = random_unitary(dim, rng);
  const auto d = static_cast<Eigen::Index>(dim);
  switch (family) {
    case ChannelFamily::BlockDephasing: {
      std::vector<ComplexMatrix> projectors;
      std::size_t offset = 0;
      while (offset < dim) {
        const std::size_t size = uniform_index(1, dim - offset, rng);
        const ComplexMatrix cols = v.middleCols(static_cast<Eigen::Index>(offset), static_cast<Eigen::Index>(size));
        projectors.push_back(cols * cols.adjoint());
        offset += size;
      }
      return pinching(projectors);
    }
    case ChannelFamily::CyclicTwirl: {
      const std::size_t order = uniform_index(2, 8, rng);
      std::vector<std::size_t> charges(dim);
      for (auto& c : charges) c = uniform_index(0, order - 1, rng);
      std::vector<ComplexMatrix> unitaries;
      for (std::size_t k = 0; k < order; ++k) {
        ComplexVector phases(d);
        for (Eigen::Index i = 0; i < d; ++i) {
          const double angle = 2.0 * std::numbers::pi *
                               static_cast<double>((k * charges[static_cast<std::size_t>(i)]) % order) /
                               static_cast<double>(order);
          phases(i) = std::polar(1.0, angle);
        }
        unitaries.push_back(v * phases.asDiagonal() * v.adjoint());
      }
      return group_average(unitaries);
    }
    case ChannelFamily::ConditionalExpectation: {
      BlockStructure blocks;
      std::size_t remaining = dim;
      while (remaining > 0) {
        const std::size_t lo = (blocks.decohered.empty() && remaining >= 2) ? 2 : 1;
        const std::size_t m = uniform_index(lo, remaining, rng);
        const std::size_t n = uniform_index(1, remaining / m, rng);
        blocks.decohered.push_back(m);
        blocks.preserved.push_back(n);
        remaining -= m * n;
      }
      return conditional_expectation(blocks, v);
    }
  }
  throw DomainError("random_unital_idempotent_channel: unknown family");
}

}  // namespace frameness

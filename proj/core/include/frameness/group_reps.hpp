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

/**
 * @file    group_reps.hpp
 * @brief   Finite-group, U(1) and collective SU(2) representations.
 *
 * Finite groups are given explicitly as a multiplication table plus one
 * unitary per element. U(1) is described by a charge grading of the
 * computational basis. SU(2) acts collectively on N qubits and carries an
 * explicit Schur basis |j, m, alpha> that realizes H = sum_j M_j (x) N_j.
 */

#ifndef FRAMENESS_GROUP_REPS_HPP
#define FRAMENESS_GROUP_REPS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frameness/operator_core.hpp"

namespace frameness {

using GroupTable = std::vector<std::vector<std::size_t>>;

inline constexpr std::size_t kMaxGroupOrder = 64;
inline constexpr int kMaxCollectiveQubits = 12;

class FiniteGroupRep {
 public:
  /// Checks shapes only; group axioms and unitarity are reported by
  /// validate_finite_rep.
  FiniteGroupRep(GroupTable table, std::vector<ComplexMatrix> unitaries);

  /// Builds the multiplication table by matching products of the given
  /// matrices against the list. Throws InvalidStateError if not closed.
  static FiniteGroupRep from_unitaries(std::vector<ComplexMatrix> unitaries);

  std::size_t order() const { return unitaries_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(unitaries_.front().rows()); }
  const GroupTable& table() const { return table_; }
  const std::vector<ComplexMatrix>& unitaries() const { return unitaries_; }
  const ComplexMatrix& unitary(std::size_t g) const { return unitaries_.at(g); }
  std::size_t multiply(std::size_t g, std::size_t h) const { return table_.at(g).at(h); }

 private:
  GroupTable table_;
  std::vector<ComplexMatrix> unitaries_;
};

struct ValidationIssue {
  std::string kind;    // "associativity", "identity", "inverse", "unitarity", "homomorphism"
  std::string detail;
  double deviation = 0.0;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate_finite_rep(const FiniteGroupRep& rep);

/// Throws InvalidStateError carrying the report summary if rep is invalid.
const FiniteGroupRep& require_valid(const FiniteGroupRep& rep);

/// g -> T(g)^{(x) n}, same multiplication table.
FiniteGroupRep tensor_power_rep(const FiniteGroupRep& rep, std::size_t n);

/// {I, Z} on a qubit.
FiniteGroupRep z2_phase_flip();
/// Dihedral group of order 2n in its defining 2-dimensional representation.
FiniteGroupRep dihedral_group(std::size_t n);
/// Quaternion group {+-1, +-iX, +-iY, +-iZ} on a qubit.
FiniteGroupRep quaternion_group();

/// Assignment of a nonnegative integer charge to each basis vector.
class ChargeGrading {
 public:
  explicit ChargeGrading(std::vector<int> charges);

  /// Charges 0, 1, ..., n_max: one basis vector per sector.
  static ChargeGrading ladder(int n_max);
  /// Hamming weight of each N-bit computational basis string.
  static ChargeGrading hamming_weight(int n_qubits);

  std::size_t dim() const { return charges_.size(); }
  const std::vector<int>& charges() const { return charges_; }
  /// Distinct charges in ascending order.
  std::vector<int> sectors() const;
  std::size_t sector_dimension(int charge) const;
  bool sectors_one_dimensional() const;
  ComplexMatrix number_operator() const;

 private:
  std::vector<int> charges_;
};

struct ChargeSector {
  int charge = 0;
  ComplexMatrix projector;
};

/// One diagonal projector per distinct charge, ascending.
std::vector<ChargeSector> charge_sector_projectors(const ChargeGrading& grading);

/// Z_M subgroup of U(1): element k acts as exp(2 pi i k N / M).
FiniteGroupRep cyclic_phase_group(const ChargeGrading& grading, std::size_t m);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// dim N_j = C(N, N/2 - j) (2j + 1) / (N/2 + j + 1) for even N.
std::uint64_t multiplicity_dimension(int n_qubits, int j);

/// C(N + d - 1, d - 1).
std::uint64_t symmetric_subspace_dimension(int n, int d);

enum class Axis { X, Y, Z };

/// Collective SU(2) action on an even number of qubits with its Schur basis.
///
/// Qubit 0 is the most significant bit of a basis index and |0> is spin up.
/// The basis vectors for a fixed j occupy a contiguous column block ordered
/// as (j - m) major, alpha minor, so that block is literally M_j (x) N_j.
class CollectiveSpinRep {
 public:
  static CollectiveSpinRep build(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int j_max() const { return n_qubits_ / 2; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }

  std::size_t multiplicity(int j) const;
  std::size_t block_offset(int j) const;
  std::size_t column(int j, int m, std::size_t alpha) const;

  /// Orthogonal matrix whose columns are the Schur basis vectors.
  const Eigen::MatrixXd& schur_basis() const { return basis_; }
  ComplexVector basis_vector(int j, int m, std::size_t alpha) const;
  /// Columns of the j block: dim x (2j+1) dim N_j.
  ComplexMatrix block(int j) const;

  ComplexMatrix collective_operator(Axis axis) const;
  ComplexMatrix j_squared() const;
  /// exp(i J . theta) as the N-fold tensor power of a single-qubit rotation.
  ComplexMatrix rotation(const std::array<double, 3>& theta) const;

  ComplexVector apply_lowering(const ComplexVector& v) const;
  ComplexVector apply_raising(const ComplexVector& v) const;
  ComplexVector apply_jz(const ComplexVector& v) const;
  ComplexVector apply_j_squared(const ComplexVector& v) const;

 private:
  int n_qubits_ = 0;
  std::vector<std::size_t> multiplicities_;  // indexed by j
  std::vector<std::size_t> offsets_;         // indexed by j
  Eigen::MatrixXd basis_;
};

}  // namespace frameness

#endif  // FRAMENESS_GROUP_REPS_HPP

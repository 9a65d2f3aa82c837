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

#include "frameness/group_reps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace frameness {

namespace {

constexpr double kMatchTolerance = 1e-8;
constexpr std::size_t kMaxReportedTriples = 16;

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroupRep

FiniteGroupRep::FiniteGroupRep(GroupTable table, std::vector<ComplexMatrix> unitaries)
    : table_(std::move(table)), unitaries_(std::move(unitaries)) {
  const std::size_t n = unitaries_.size();
  if (n == 0) throw ShapeError("FiniteGroupRep: empty group");
  if (n > kMaxGroupOrder) {
    std::ostringstream os;
    os << "FiniteGroupRep: order " << n << " exceeds the cap " << kMaxGroupOrder;
    throw ResourceLimitError(os.str());
  }
  if (table_.size() != n) throw ShapeError("FiniteGroupRep: table rows must equal the order");
  for (const auto& row : table_) {
    if (row.size() != n) throw ShapeError("FiniteGroupRep: table must be square");
    for (std::size_t entry : row)
      if (entry >= n) throw ShapeError("FiniteGroupRep: table entry out of range");
  }
  const auto d = unitaries_.front().rows();
  for (const auto& u : unitaries_) {
    if (u.rows() != d || u.cols() != d || d == 0)
      throw ShapeError("FiniteGroupRep: unitaries must be square with a common dimension");
  }
}

FiniteGroupRep FiniteGroupRep::from_unitaries(std::vector<ComplexMatrix> unitaries) {
  const std::size_t n = unitaries.size();
  if (n == 0) throw ShapeError("FiniteGroupRep: empty group");
  GroupTable table(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ComplexMatrix product = unitaries[a] * unitaries[b];
      std::size_t found = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (max_abs(product - unitaries[c]) <= kMatchTolerance) {
          found = c;
          break;
        }
      }
      if (found == n) {
        std::ostringstream os;
        os << "FiniteGroupRep: product of elements " << a << " and " << b << " is not in the set";
        throw InvalidStateError(os.str());
      }
      table[a][b] = found;
    }
  }
  return FiniteGroupRep(std::move(table), std::move(unitaries));
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream os;
  os << issues.size() << " violation(s):";
  for (const auto& issue : issues) {
    os << "\n  [" << issue.kind << "] " << issue.detail;
    if (issue.deviation > 0.0) os << " (deviation " << issue.deviation << ")";
  }
  return os.str();
}

ValidationReport validate_finite_rep(const FiniteGroupRep& rep) {
  ValidationReport report;
  const std::size_t n = rep.order();
  const auto& t = rep.table();

  std::size_t bad_triples = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          if (bad_triples < kMaxReportedTriples) {
            std::ostringstream os;
            os << "(g" << a << " g" << b << ") g" << c << " != g" << a << " (g" << b << " g" << c << ")";
            report.issues.push_back({"associativity", os.str(), 0.0});
          }
          ++bad_triples;
        }
      }
  if (bad_triples > kMaxReportedTriples) {
    std::ostringstream os;
    os << (bad_triples - kMaxReportedTriples) << " further non-associative triples";
    report.issues.push_back({"associativity", os.str(), 0.0});
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = t[e][g] == g && t[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n) {
    report.issues.push_back({"identity", "no two-sided identity element in the table", 0.0});
  } else {
    for (std::size_t g = 0; g < n; ++g) {
      bool has_inverse = false;
      for (std::size_t h = 0; h < n && !has_inverse; ++h)
        has_inverse = t[g][h] == identity && t[h][g] == identity;
      if (!has_inverse) {
        std::ostringstream os;
        os << "element g" << g << " has no inverse";
        report.issues.push_back({"inverse", os.str(), 0.0});
      }
    }
  }

  const auto d = static_cast<Eigen::Index>(rep.dim());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  for (std::size_t g = 0; g < n; ++g) {
    const double dev = max_abs(rep.unitary(g).adjoint() * rep.unitary(g) - id);
    if (!(dev <= tol::hermitian)) {
      std::ostringstream os;
      os << "T(g" << g << ") is not unitary";
      report.issues.push_back({"unitarity", os.str(), dev});
    }
  }
  double worst = 0.0;
  std::size_t worst_a = 0, worst_b = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double dev = max_abs(rep.unitary(a) * rep.unitary(b) - rep.unitary(t[a][b]));
      if (dev > worst) {
        worst = dev;
        worst_a = a;
        worst_b = b;
      }
    }
  if (!(worst <= tol::hermitian)) {
    std::ostringstream os;
    os << "T(g" << worst_a << ") T(g" << worst_b << ") != T(g" << t[worst_a][worst_b] << ")";
    report.issues.push_back({"homomorphism", os.str(), worst});
  }
  return report;
}

const FiniteGroupRep& require_valid(const FiniteGroupRep& rep) {
  const ValidationReport report = validate_finite_rep(rep);
  if (!report.valid()) throw InvalidStateError("invalid finite group representation: " + report.summary());
  return rep;
}

FiniteGroupRep tensor_power_rep(const FiniteGroupRep& rep, std::size_t n) {
  if (n == 0) throw DomainError("tensor_power_rep: number of copies must be positive");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= rep.dim();
    require_within_cap(total, "tensor_power_rep");
  }
  std::vector<ComplexMatrix> powered;
  powered.reserve(rep.order());
  for (const auto& u : rep.unitaries()) {
    ComplexMatrix p = u;
    for (std::size_t i = 1; i < n; ++i) p = kron(p, u);
    powered.push_back(std::move(p));
  }
  return FiniteGroupRep(rep.table(), std::move(powered));
}

FiniteGroupRep z2_phase_flip() {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return FiniteGroupRep({{0, 1}, {1, 0}}, {ComplexMatrix::Identity(2, 2), z});
}

FiniteGroupRep dihedral_group(std::size_t n) {
  if (n < 1 || 2 * n > kMaxGroupOrder) throw DomainError("dihedral_group: order out of range");
  std::vector<ComplexMatrix> elements;
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      ComplexMatrix r(2, 2);
      r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
      if (b == 1) {
        ComplexMatrix s = ComplexMatrix::Zero(2, 2);
        s(0, 0) = 1.0;
        s(1, 1) = -1.0;
        r = r * s;
      }
      elements.push_back(r);
    }
  }
  return FiniteGroupRep::from_unitaries(std::move(elements));
}

FiniteGroupRep quaternion_group() {
  const complex_t i(0.0, 1.0);
  ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return FiniteGroupRep::from_unitaries(
      {id, ComplexMatrix(-id), ComplexMatrix(i * x), ComplexMatrix(-i * x), ComplexMatrix(i * y),
       ComplexMatrix(-i * y), ComplexMatrix(i * z), ComplexMatrix(-i * z)});
}

// ---------------------------------------------------------------------------
// ChargeGrading

ChargeGrading::ChargeGrading(std::vector<int> charges) : charges_(std::move(charges)) {
  if (charges_.empty()) throw ShapeError("ChargeGrading: empty grading");
  for (int c : charges_)
    if (c < 0) throw InvalidStateError("ChargeGrading: charges must be nonnegative");
}

ChargeGrading ChargeGrading::ladder(int n_max) {
  if (n_max < 0) throw DomainError("ChargeGrading::ladder: n_max must be nonnegative");
  std::vector<int> charges(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) charges[static_cast<std::size_t>(n)] = n;
  return ChargeGrading(std::move(charges));
}

ChargeGrading ChargeGrading::hamming_weight(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw DomainError("ChargeGrading::hamming_weight: bad qubit count");
  const std::size_t dim = std::size_t{1} << n_qubits;
  require_within_cap(dim, "ChargeGrading::hamming_weight");
  std::vector<int> charges(dim);
  for (std::size_t x = 0; x < dim; ++x) charges[x] = std::popcount(x);
  return ChargeGrading(std::move(charges));
}

std::vector<int> ChargeGrading::sectors() const {
  std::vector<int> s = charges_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::size_t ChargeGrading::sector_dimension(int charge) const {
  return static_cast<std::size_t>(std::count(charges_.begin(), charges_.end(), charge));
}

bool ChargeGrading::sectors_one_dimensional() const { return sectors().size() == charges_.size(); }

ComplexMatrix ChargeGrading::number_operator() const {
  const auto d = static_cast<Eigen::Index>(dim());
  ComplexMatrix n = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) n(i, i) = charges_[static_cast<std::size_t>(i)];
  return n;
}

std::vector<ChargeSector> charge_sector_projectors(const ChargeGrading& grading) {
  std::vector<ChargeSector> out;
  const auto d = static_cast<Eigen::Index>(grading.dim());
  for (int charge : grading.sectors()) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      if (grading.charges()[static_cast<std::size_t>(i)] == charge) p(i, i) = 1.0;
    out.push_back({charge, std::move(p)});
  }
  return out;
}

FiniteGroupRep cyclic_phase_group(const ChargeGrading& grading, std::size_t m) {
  if (m < 1 || m > kMaxGroupOrder) throw DomainError("cyclic_phase_group: order out of range");
  const auto d = static_cast<Eigen::Index>(grading.dim());
  std::vector<ComplexMatrix> elements;
  GroupTable table(m, std::vector<std::size_t>(m));
  for (std::size_t k = 0; k < m; ++k) {
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      // Reduce the phase exactly before converting to floating point.
      const auto charge = static_cast<std::size_t>(grading.charges()[static_cast<std::size_t>(i)]);
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * charge) % m) /
                           static_cast<double>(m);
      u(i, i) = std::polar(1.0, angle);
    }
    elements.push_back(std::move(u));
    for (std::size_t l = 0; l < m; ++l) table[k][l] = (k + l) % m;
  }
  return FiniteGroupRep(std::move(table), std::move(elements));
}

// ---------------------------------------------------------------------------
// Combinatorics

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result = result / i * (n - k + i) + result % i * (n - k + i) / i;
  }
  return result;
}

std::uint64_t multiplicity_dimension(int n_qubits, int j) {
  if (n_qubits < 0 || n_qubits % 2 != 0) throw DomainError("multiplicity_dimension: N must be even");
  const int half = n_qubits / 2;
  if (j < 0 || j > half) throw DomainError("multiplicity_dimension: j out of range");
  const std::uint64_t c = binomial(static_cast<std::uint64_t>(n_qubits), static_cast<std::uint64_t>(half - j));
  return c * static_cast<std::uint64_t>(2 * j + 1) / static_cast<std::uint64_t>(half + j + 1);
}

std::uint64_t symmetric_subspace_dimension(int n, int d) {
  if (n < 1 || d < 2) throw DomainError("symmetric_subspace_dimension: need N >= 1 and d >= 2");
  return binomial(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(d - 1));
}

// ---------------------------------------------------------------------------
// CollectiveSpinRep

namespace {

// Lowering J- = sum_i |1><0|_i and raising J+ = sum_i |0><1|_i on real vectors.
Eigen::VectorXd lower(const Eigen::VectorXd& v, int n_qubits) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (Eigen::Index x = 0; x < v.size(); ++x) {
    if (v(x) == 0.0) continue;
    for (int q = 0; q < n_qubits; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << q;
      if ((x & bit) == 0) out(x | bit) += v(x);
    }
  }
  return out;
}

}  // namespace

CollectiveSpinRep CollectiveSpinRep::build(int n_qubits) {
  if (n_qubits < 2 || n_qubits % 2 != 0)
    throw DomainError("CollectiveSpinRep: the number of qubits must be even and at least 2");
  if (n_qubits > kMaxCollectiveQubits) {
    std::ostringstream os;
    os << "CollectiveSpinRep: " << n_qubits << " qubits exceeds the cap " << kMaxCollectiveQubits;
    throw ResourceLimitError(os.str());
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  require_within_cap(dim, "CollectiveSpinRep");

  CollectiveSpinRep rep;
  rep.n_qubits_ = n_qubits;
  const int j_max = n_qubits / 2;
  rep.multiplicities_.assign(static_cast<std::size_t>(j_max) + 1, 0);
  rep.offsets_.assign(static_cast<std::size_t>(j_max) + 1, 0);
  rep.basis_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

  // Basis indices grouped by number of ones (spin-down qubits), ascending.
  std::vector<std::vector<Eigen::Index>> weight_space(static_cast<std::size_t>(n_qubits) + 1);
  for (std::size_t x = 0; x < dim; ++x)
    weight_space[static_cast<std::size_t>(std::popcount(x))].push_back(static_cast<Eigen::Index>(x));

  std::size_t offset = 0;
  for (int j = 0; j <= j_max; ++j) {
    const auto ones = static_cast<std::size_t>(j_max - j);
    const auto& space = weight_space[ones];
    const auto n_space = static_cast<Eigen::Index>(space.size());

    // Projector onto ker(J+) within the m = j weight space.
    Eigen::MatrixXd kernel_projector = Eigen::MatrixXd::Identity(n_space, n_space);
    if (ones > 0) {
      const auto& target = weight_space[ones - 1];
      const auto n_target = static_cast<Eigen::Index>(target.size());
      Eigen::MatrixXd raise = Eigen::MatrixXd::Zero(n_target, n_space);
      for (Eigen::Index c = 0; c < n_space; ++c) {
        const Eigen::Index x = space[static_cast<std::size_t>(c)];
        for (int q = 0; q < n_qubits; ++q) {
          const Eigen::Index bit = Eigen::Index{1} << q;
          if ((x & bit) == 0) continue;
          const auto it = std::lower_bound(target.begin(), target.end(), x & ~bit);
          raise(static_cast<Eigen::Index>(it - target.begin()), c) += 1.0;
        }
      }
      const Eigen::MatrixXd gram = raise * raise.transpose();
      kernel_projector -= raise.transpose() * gram.ldlt().solve(raise);
    }

    // Gram-Schmidt on the projected basis vectors, taken in index order.
    const std::size_t expected = multiplicity_dimension(n_qubits, j);
    std::vector<Eigen::VectorXd> highest;
    for (Eigen::Index c = 0; c < n_space && highest.size() < expected; ++c) {
      Eigen::VectorXd v = kernel_projector.col(c);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : highest) v -= u.dot(v) * u;
      const double norm = v.norm();
      if (norm > 1e-8) highest.push_back(v / norm);
    }
    if (highest.size() != expected) {
      throw Error("CollectiveSpinRep: highest-weight space has unexpected dimension");
    }

    rep.multiplicities_[static_cast<std::size_t>(j)] = expected;
    rep.offsets_[static_cast<std::size_t>(j)] = offset;
    for (std::size_t alpha = 0; alpha < expected; ++alpha) {
      Eigen::VectorXd full = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
      for (Eigen::Index c = 0; c < n_space; ++c) full(space[static_cast<std::size_t>(c)]) = highest[alpha](c);
      for (int m = j; m >= -j; --m) {
        rep.basis_.col(static_cast<Eigen::Index>(rep.column(j, m, alpha))) = full;
        if (m > -j) {
          full = lower(full, n_qubits) / std::sqrt(static_cast<double>(j * (j + 1) - m * (m - 1)));
        }
      }
    }
    offset += static_cast<std::size_t>(2 * j + 1) * expected;
  }
  if (offset != dim) throw Error("CollectiveSpinRep: Schur basis is incomplete");
  return rep;
}

std::size_t CollectiveSpinRep::multiplicity(int j) const {
  if (j < 0 || j > j_max()) throw DomainError("CollectiveSpinRep: j out of range");
  return multiplicities_[static_cast<std::size_t>(j)];
}

std::size_t CollectiveSpinRep::block_offset(int j) const {
  if (j < 0 || j > j_max()) throw DomainError("CollectiveSpinRep: j out of range");
  return offsets_[static_cast<std::size_t>(j)];
}

std::size_t CollectiveSpinRep::column(int j, int m, std::size_t alpha) const {
  const std::size_t mult = multiplicity(j);
  if (m < -j || m > j || alpha >= mult) throw DomainError("CollectiveSpinRep: label out of range");
  return block_offset(j) + static_cast<std::size_t>(j - m) * mult + alpha;
}

ComplexVector CollectiveSpinRep::basis_vector(int j, int m, std::size_t alpha) const {
  return basis_.col(static_cast<Eigen::Index>(column(j, m, alpha))).cast<complex_t>();
}

ComplexMatrix CollectiveSpinRep::block(int j) const {
  const auto width = static_cast<Eigen::Index>(static_cast<std::size_t>(2 * j + 1) * multiplicity(j));
  return basis_.middleCols(static_cast<Eigen::Index>(block_offset(j)), width).cast<complex_t>();
}

ComplexVector CollectiveSpinRep::apply_lowering(const ComplexVector& v) const {
  ComplexVector out = ComplexVector::Zero(v.size());
  for (Eigen::Index x = 0; x < v.size(); ++x)
    for (int q = 0; q < n_qubits_; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << q;
      if ((x & bit) == 0) out(x | bit) += v(x);
    }
  return out;
}

ComplexVector CollectiveSpinRep::apply_raising(const ComplexVector& v) const {
  ComplexVector out = ComplexVector::Zero(v.size());
  for (Eigen::Index x = 0; x < v.size(); ++x)
    for (int q = 0; q < n_qubits_; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << q;
      if ((x & bit) != 0) out(x & ~bit) += v(x);
    }
  return out;
}

ComplexVector CollectiveSpinRep::apply_jz(const ComplexVector& v) const {
  ComplexVector out(v.size());
  for (Eigen::Index x = 0; x < v.size(); ++x)
    out(x) = (0.5 * n_qubits_ - std::popcount(static_cast<std::size_t>(x))) * v(x);
  return out;
}

ComplexVector CollectiveSpinRep::apply_j_squared(const ComplexVector& v) const {
  // J^2 = J- J+ + Jz^2 + Jz
  const ComplexVector jz = apply_jz(v);
  return apply_lowering(apply_raising(v)) + apply_jz(jz) + jz;
}

ComplexMatrix CollectiveSpinRep::collective_operator(Axis axis) const {
  const auto d = static_cast<Eigen::Index>(dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    if (axis == Axis::Z) {
      out(x, x) = 0.5 * n_qubits_ - std::popcount(static_cast<std::size_t>(x));
      continue;
    }
    for (int q = 0; q < n_qubits_; ++q) {
      const Eigen::Index bit = Eigen::Index{1} << q;
      const Eigen::Index y = x ^ bit;
      if (axis == Axis::X) {
        out(y, x) += 0.5;
      } else {
        // Y|0> = i|1>, Y|1> = -i|0>
        out(y, x) += (x & bit) == 0 ? complex_t(0.0, 0.5) : complex_t(0.0, -0.5);
      }
    }
  }
  return out;
}

ComplexMatrix CollectiveSpinRep::j_squared() const {
  const ComplexMatrix jx = collective_operator(Axis::X);
  const ComplexMatrix jy = collective_operator(Axis::Y);
  const ComplexMatrix jz = collective_operator(Axis::Z);
  return jx * jx + jy * jy + jz * jz;
}

ComplexMatrix CollectiveSpinRep::rotation(const std::array<double, 3>& theta) const {
  const double angle = std::sqrt(theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2]);
  ComplexMatrix single = ComplexMatrix::Identity(2, 2);
  if (angle > 0.0) {
    const complex_t i(0.0, 1.0);
    const double nx = theta[0] / angle, ny = theta[1] / angle, nz = theta[2] / angle;
    ComplexMatrix n_sigma(2, 2);
    n_sigma << nz, complex_t(nx, -ny), complex_t(nx, ny), -nz;
    single = std::cos(angle / 2.0) * ComplexMatrix::Identity(2, 2) + i * std::sin(angle / 2.0) * n_sigma;
  }
  ComplexMatrix out = single;
  for (int q = 1; q < n_qubits_; ++q) out = kron(out, single);
  return out;
}

}  // namespace frameness

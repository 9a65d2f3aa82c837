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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "frameness/asymptotics.hpp"
#include "frameness/channel_calculus.hpp"
#include "frameness/entanglement_bound.hpp"
#include "frameness/estimation.hpp"
#include "frameness/frameness.hpp"
#include "frameness/group_reps.hpp"
#include "frameness/json_io.hpp"
#include "frameness/operator_core.hpp"
#include "frameness/random.hpp"

namespace frameness::cli {

namespace {

using io::json;

constexpr std::uint64_t kDefaultSeed = 20080415;

const char* const kCsvColumns =
    "CSV columns:\n"
    "  asymmetry  asymmetry,entropy_in,entropy_out\n"
    "  scaling    N,A_bits,model_bits,gap_bits,A_over_N\n"
    "  bounds     N,A_bits,bound_bits,holds\n"
    "  ree        p,upper,lower,theta,gamma,tight,expected\n"
    "  estimate   povm,info_bits,A_G\n"
    "  verify     check,passed,value\n"
    "CSV output starts with '#' lines carrying the version, seed and config.";

struct Config {
  std::string command;
  std::string group;
  std::string state_file;
  std::string rep_file;
  std::string charges_file;
  std::string family = "bell-diagonal";
  std::string side = "B";
  std::string dist;
  std::string format = "json";
  std::string out_file;
  int qubits = 0;
  int n_max = 3;
  int copies = 0;
  int order = 4;
  int grid = 64;
  int samples = 200;
  int random_povms = 8;
  double p = 0.75;
  double scaling_p = 0.5;
  bool sweep = false;
  bool literal_constant = false;
  bool dump_state = false;
  std::uint64_t seed = kDefaultSeed;

  json echo() const {
    json c = {{"command", command}, {"format", format}, {"seed", seed}};
    if (!group.empty()) c["group"] = group;
    if (!state_file.empty()) c["state"] = state_file;
    if (!rep_file.empty()) c["rep"] = rep_file;
    if (!charges_file.empty()) c["charges"] = charges_file;
    if (command == "ree") {
      c["family"] = family;
      c["p"] = p;
      c["grid"] = grid;
      c["side"] = side;
      c["sweep"] = sweep;
    }
    if (command == "extremal" || command == "asymmetry" || command == "twirl" || command == "bounds") {
      c["qubits"] = qubits;
      c["nmax"] = n_max;
    }
    if (command == "scaling") {
      c["p"] = scaling_p;
      c["dist"] = dist;
      c["literal_constant"] = literal_constant;
    }
    if (command == "scaling" || command == "bounds") c["copies"] = copies;
    if (command == "estimate") {
      c["order"] = order;
      c["random_povms"] = random_povms;
    }
    return c;
  }
};

/// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json envelope(const Config& cfg) {
  return {{"tool", "frameness"}, {"version", FRAMENESS_VERSION}, {"config", cfg.echo()}, {"seed", cfg.seed}};
}

std::string csv_preamble(const Config& cfg) {
  std::ostringstream os;
  os << "# frameness " << FRAMENESS_VERSION << " " << cfg.command << "\n"
     << "# seed=" << cfg.seed << "\n"
     << "# config=" << cfg.echo().dump() << "\n";
  return os.str();
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------------------
// Input assembly

Twirl make_twirl(const Config& cfg, std::size_t dim) {
  const GroupKind kind = parse_group_kind(cfg.group);
  switch (kind) {
    case GroupKind::Finite:
      if (cfg.rep_file.empty()) throw UsageError("--group finite requires --rep FILE");
      return Twirl::finite(io::finite_group_from_json(io::load_file(cfg.rep_file)));
    case GroupKind::U1:
      if (!cfg.charges_file.empty()) return Twirl::u1(io::grading_from_json(io::load_file(cfg.charges_file)));
      return Twirl::u1(ChargeGrading::ladder(static_cast<int>(dim) - 1));
    case GroupKind::SU2: {
      int n = cfg.qubits;
      if (n == 0) {
        while ((std::size_t{1} << n) < dim) ++n;
      }
      return Twirl::su2(n);
    }
  }
  throw UsageError("unknown group");
}

DensityOperator load_state(const Config& cfg) {
  if (cfg.state_file.empty()) throw UsageError(cfg.command + " requires --state FILE");
  return io::density_from_json(io::load_file(cfg.state_file));
}

ProbabilityDistribution per_copy_distribution(const Config& cfg) {
  if (cfg.dist.empty()) return ProbabilityDistribution::bernoulli(cfg.scaling_p);
  std::vector<double> weights;
  std::stringstream ss(cfg.dist);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      weights.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--dist expects comma-separated numbers");
    }
  }
  return ProbabilityDistribution(std::move(weights));
}

std::vector<std::size_t> copy_grid(std::size_t max_copies) {
  std::vector<std::size_t> grid;
  for (std::size_t decade = 1; decade < max_copies; decade *= 10)
    for (std::size_t step : {1, 2, 5})
      if (decade * step < max_copies) grid.push_back(decade * step);
  grid.push_back(max_copies);
  return grid;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_asymmetry(const Config& cfg, std::ostream& out, bool dump) {
  const DensityOperator rho = load_state(cfg);
  const Twirl t = make_twirl(cfg, rho.dim());
  const AsymmetryResult result = g_asymmetry(t, rho);
  if (cfg.format == "csv") {
    out << csv_preamble(cfg) << "asymmetry,entropy_in,entropy_out\n"
        << format_double(result.asymmetry) << ',' << format_double(result.entropy_in) << ','
        << format_double(result.entropy_out) << '\n';
    return kOk;
  }
  json doc = envelope(cfg);
  doc["result"] = io::to_json(result, dump || cfg.dump_state);
  doc["invariant"] = is_invariant(t, rho);
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_extremal(const Config& cfg, std::ostream& out) {
  const GroupKind kind = parse_group_kind(cfg.group);
  json doc = envelope(cfg);
  if (kind == GroupKind::U1) {
    const PureState psi = maximal_asymmetry_state_u1(cfg.n_max);
    const double a = g_asymmetry(Twirl::u1(ChargeGrading::ladder(cfg.n_max)), psi.projector()).asymmetry;
    doc["state"] = io::to_json(psi);
    doc["asymmetry"] = a;
    doc["closed_form"] = std::log2(cfg.n_max + 1.0);
  } else if (kind == GroupKind::SU2) {
    if (cfg.qubits == 0) throw UsageError("--group su2 requires --qubits N");
    auto rep = std::make_shared<const CollectiveSpinRep>(CollectiveSpinRep::build(cfg.qubits));
    const PureState psi = maximal_asymmetry_state_su2(*rep);
    const double a = g_asymmetry(Twirl::su2(rep), psi.projector()).asymmetry;
    doc["state"] = io::to_json(psi);
    doc["asymmetry"] = a;
    doc["closed_form"] = max_su2_asymmetry_value(rep->j_max());
    json dims = json::array();
    for (int j = 0; j <= rep->j_max(); ++j) dims.push_back(rep->multiplicity(j));
    doc["multiplicity_dimensions"] = dims;
  } else {
    throw UsageError("extremal supports --group u1 or su2");
  }
  if (cfg.format == "csv") throw UsageError("extremal emits JSON only");
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_scaling(const Config& cfg, std::ostream& out) {
  const ProbabilityDistribution per_copy = per_copy_distribution(cfg);
  const std::size_t max_copies = cfg.copies > 0 ? static_cast<std::size_t>(cfg.copies) : 200;
  const double constant = cfg.literal_constant ? kGaussianConstantLiteral : kGaussianConstantBits;
  const auto grid = copy_grid(max_copies);
  const ScalingReport report = regularized_asymmetry_table(per_copy, grid, constant);
  if (cfg.format == "csv") {
    out << csv_preamble(cfg) << scaling_csv(report);
    return kOk;
  }
  const RelinearizedReport relin = relinearized_monotone(per_copy, grid, constant);
  json doc = envelope(cfg);
  doc["variance"] = report.variance;
  doc["model_constant"] = report.constant;
  json rows = json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    rows.push_back({{"N", r.copies},
                    {"A_bits", r.asymmetry},
                    {"model_bits", std::isnan(r.model) ? json(nullptr) : json(r.model)},
                    {"gap_bits", std::isnan(r.gap) ? json(nullptr) : json(r.gap)},
                    {"A_over_N", r.per_copy()},
                    {"L_over_N", relin.rows[i].per_copy()}});
  }
  doc["rows"] = rows;
  doc["eventually_decreasing"] = eventually_decreasing(report);
  doc["relinearized_plateau_predicted"] = relin.predicted_plateau;
  doc["relinearized_final_relative_change"] = relin.final_relative_change();
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_bounds(const Config& cfg, std::ostream& out) {
  const GroupKind kind = parse_group_kind(cfg.group);
  json doc = envelope(cfg);
  if (kind == GroupKind::Finite) {
    if (cfg.rep_file.empty()) throw UsageError("bounds --group finite requires --rep FILE");
    const FiniteGroupRep rep = io::finite_group_from_json(io::load_file(cfg.rep_file));
    require_valid(rep);
    const DensityOperator rho = load_state(cfg);
    const std::size_t copies = cfg.copies > 0 ? static_cast<std::size_t>(cfg.copies) : 3;
    const FiniteBoundReport report = finite_group_bound_check(rep, rho, copies);
    if (cfg.format == "csv") {
      out << csv_preamble(cfg) << "N,A_bits,bound_bits,holds\n";
      for (const auto& r : report.rows)
        out << r.copies << ',' << format_double(r.asymmetry) << ',' << format_double(r.bound) << ','
            << (r.holds ? "true" : "false") << '\n';
      return report.all_hold() ? kOk : kValidationFailure;
    }
    json rows = json::array();
    for (const auto& r : report.rows)
      rows.push_back({{"N", r.copies}, {"A_bits", r.asymmetry}, {"bound_bits", r.bound}, {"holds", r.holds}});
    doc["group_order"] = report.group_order;
    doc["rows"] = rows;
    doc["all_hold"] = report.all_hold();
    out << doc.dump(2) << '\n';
    return report.all_hold() ? kOk : kValidationFailure;
  }
  if (kind == GroupKind::SU2) {
    if (cfg.qubits == 0) throw UsageError("bounds --group su2 requires --qubits N");
    const DensityOperator rho = cfg.state_file.empty()
                                    ? maximal_asymmetry_state(GroupKind::SU2, {0, cfg.qubits}).projector()
                                    : load_state(cfg);
    const Su2BoundCheck check = su2_bound_check(rho, cfg.qubits);
    if (cfg.format == "csv") {
      out << csv_preamble(cfg) << "N,A_bits,bound_bits,holds\n"
          << cfg.qubits << ',' << format_double(check.asymmetry) << ',' << format_double(check.bound.exact) << ','
          << (check.holds ? "true" : "false") << '\n';
      return check.holds ? kOk : kValidationFailure;
    }
    doc["asymmetry"] = check.asymmetry;
    doc["symmetric_dimension"] = check.bound.symmetric_dimension;
    doc["exact_bound"] = check.bound.exact;
    doc["asymptotic_bound"] = check.bound.asymptotic;
    doc["holds"] = check.holds;
    out << doc.dump(2) << '\n';
    return check.holds ? kOk : kValidationFailure;
  }
  throw UsageError("bounds supports --group finite or su2");
}

std::vector<Subsystem> sides(const Config& cfg) {
  if (cfg.side == "A") return {Subsystem::A};
  if (cfg.side == "B") return {Subsystem::B};
  if (cfg.side == "both") return {Subsystem::B, Subsystem::A};
  throw UsageError("--side expects A, B or both");
}

int cmd_ree(const Config& cfg, std::ostream& out) {
  TwoQubitOptimizerOptions options;
  options.grid = static_cast<std::size_t>(cfg.grid);
  if (cfg.sweep) {
    if (cfg.family != "bell-diagonal") throw UsageError("--sweep requires --family bell-diagonal");
    std::vector<json> rows;
    std::ostringstream csv;
    csv << "p,upper,lower,theta,gamma,tight,expected\n";
    for (int step = 0; step <= 20; ++step) {
      const double p = step / 20.0;
      const BoundReport r = optimize_two_qubit_bound(bell_diagonal_state(p), options);
      const double expected = 1.0 - binary_entropy(p);
      csv << format_double(p) << ',' << format_double(r.upper) << ',' << format_double(r.lower) << ','
          << format_double(r.theta) << ',' << format_double(r.gamma) << ',' << (r.tight ? "true" : "false") << ','
          << format_double(expected) << '\n';
      json row = io::to_json(r);
      row["p"] = p;
      row["expected"] = expected;
      rows.push_back(row);
    }
    if (cfg.format == "json") {
      json doc = envelope(cfg);
      doc["rows"] = rows;
      out << doc.dump(2) << '\n';
    } else {
      out << csv_preamble(cfg) << csv.str();
    }
    return kOk;
  }

  std::optional<BipartiteState> state;
  if (!cfg.state_file.empty()) {
    const DensityOperator rho = load_state(cfg);
    std::size_t d = 1;
    while (d * d < rho.dim()) ++d;
    if (d * d != rho.dim()) throw UsageError("ree --state expects a d x d bipartite state");
    state.emplace(d, d, rho);
  } else if (cfg.family == "bell-diagonal") {
    state.emplace(bell_diagonal_state(cfg.p));
  } else {
    throw UsageError("unknown --family '" + cfg.family + "'");
  }

  json doc = envelope(cfg);
  json reports = json::array();
  for (Subsystem side : sides(cfg)) {
    if (state->dim_a() == 2) {
      options.side = side;
      reports.push_back(io::to_json(optimize_two_qubit_bound(*state, options)));
    } else {
      const BasisSearchResult r =
          random_basis_search(*state, static_cast<std::size_t>(cfg.samples), cfg.seed, side);
      const double lower = hashing_lower_bound(*state);
      reports.push_back({{"upper", r.upper},
                         {"lower", lower},
                         {"tight", std::abs(r.upper - lower) <= kTightTolerance},
                         {"side", side == Subsystem::A ? "A" : "B"},
                         {"basis", io::to_json(r.basis_unitary)}});
    }
  }
  if (cfg.format == "csv") {
    out << csv_preamble(cfg) << "p,upper,lower,theta,gamma,tight,expected\n";
    for (const auto& r : reports)
      out << format_double(cfg.p) << ',' << format_double(r["upper"].get<double>()) << ','
          << format_double(r["lower"].get<double>()) << ',' << format_double(r.value("theta", 0.0)) << ','
          << format_double(r.value("gamma", 0.0)) << ',' << (r["tight"].get<bool>() ? "true" : "false") << ','
          << format_double(1.0 - binary_entropy(cfg.p)) << '\n';
    return kOk;
  }
  if (reports.size() == 1) {
    doc.update(reports[0]);
  } else {
    doc["reports"] = reports;
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_estimate(const Config& cfg, std::ostream& out) {
  const DensityOperator rho = load_state(cfg);
  const GroupKind kind = parse_group_kind(cfg.group.empty() ? "finite" : cfg.group);
  FiniteGroupRep rep = [&] {
    if (kind == GroupKind::Finite) {
      if (cfg.rep_file.empty()) throw UsageError("estimate --group finite requires --rep FILE");
      return io::finite_group_from_json(io::load_file(cfg.rep_file));
    }
    if (kind == GroupKind::U1) {
      const ChargeGrading grading = cfg.charges_file.empty()
                                        ? ChargeGrading::ladder(static_cast<int>(rho.dim()) - 1)
                                        : io::grading_from_json(io::load_file(cfg.charges_file));
      return cyclic_phase_group(grading, static_cast<std::size_t>(cfg.order));
    }
    throw UsageError("estimate supports --group finite or u1 (through a Z_M subgroup)");
  }();
  require_valid(rep);

  const OrbitEnsemble ensemble = orbit_ensemble(rep, rho);
  std::vector<LabeledPOVM> povms;
  povms.push_back({"square-root", square_root_measurement(ensemble)});
  const auto d = static_cast<Eigen::Index>(rho.dim());
  povms.push_back({"computational", DiscretePOVM::projective(ComplexMatrix::Identity(d, d))});
  for (int k = 0; k < cfg.random_povms; ++k) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    povms.push_back({"random-basis-" + std::to_string(k), DiscretePOVM::projective(random_unitary(rho.dim(), rng))});
  }
  const HolevoReport report = holevo_bound_check(rep, rho, povms);
  if (cfg.format == "csv") {
    out << csv_preamble(cfg) << "povm,info_bits,A_G\n";
    for (const auto& m : povms)
      out << m.label << ',' << format_double(mutual_information(ensemble, m.povm)) << ','
          << format_double(report.asymmetry) << '\n';
    return report.holds ? kOk : kValidationFailure;
  }
  json doc = envelope(cfg);
  doc.update(io::to_json(report));
  out << doc.dump(2) << '\n';
  return report.holds ? kOk : kValidationFailure;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool passed;
  double value;
};

std::vector<Check> run_verification(std::uint64_t seed) {
  std::vector<Check> checks;
  auto add = [&](std::string name, bool ok, double value) { checks.push_back({std::move(name), ok, value}); };

  {
    double worst = 0.0;
    bool ok = true;
    for (std::uint64_t s = 0; s < 40; ++s) {
      Rng rng(derive_seed(seed, s));
      const std::size_t dim = 2 + s % 5;
      const DensityOperator a = random_density(dim, rng, 1 + s % dim);
      const DensityOperator b = random_density(dim, rng);
      const double d = relative_entropy(a, b);
      ok = ok && d >= -1e-9 && std::abs(relative_entropy(a, a)) <= 1e-9;
      const double s_a = von_neumann_entropy(a);
      ok = ok && s_a >= -1e-12 && s_a <= std::log2(static_cast<double>(dim)) + 1e-9;
      worst = std::min(worst, d);
    }
    add("klein_and_entropy_range", ok, worst);
  }
  {
    double worst = 0.0;
    bool ok = true;
    for (std::uint64_t c = 0; c < 9; ++c) {
      Rng rng(derive_seed(seed, 100 + c));
      const auto family = static_cast<ChannelFamily>(c % 3);
      const KrausChannel ch = random_unital_idempotent_channel(2 + c % 6, family, rng);
      for (int s = 0; s < 10; ++s) {
        const DensityOperator rho = random_density(ch.dim(), rng, 1 + static_cast<std::size_t>(s) % ch.dim());
        const double distance = image_distance(ch, rho);
        const double gap = std::abs(relative_entropy(rho, apply(ch, rho)) - distance);
        const DensityOperator sigma = apply(ch, random_density(ch.dim(), rng));
        ok = ok && gap <= 1e-8 && relative_entropy(rho, sigma) >= distance - 1e-8;
        worst = std::max(worst, gap);
      }
    }
    add("image_distance", ok, worst);
  }
  {
    bool ok = true;
    std::vector<Twirl> twirls{Twirl::finite(z2_phase_flip()), Twirl::finite(dihedral_group(4)),
                              Twirl::u1(ChargeGrading::hamming_weight(3)), Twirl::su2(2), Twirl::su2(4)};
    for (const auto& t : twirls) {
      const KrausChannel ch = t.as_channel();
      ok = ok && is_unital(ch) && is_idempotent(ch) && image_fix_equivalence_check(ch, 10, seed).consistent();
    }
    add("twirls_unital_idempotent", ok, static_cast<double>(twirls.size()));
  }
  {
    const Twirl t = Twirl::su2(2);
    Rng rng(derive_seed(seed, 200));
    const DensityOperator rho = random_density(4, rng);
    const double a = relative_entropy_of_frameness(t, rho);
    const double oracle = invariant_state_oracle(t, rho, 50, seed);
    add("frameness_oracle_sandwich", oracle >= a - 1e-8 && oracle <= a + 1e-8, oracle - a);
  }
  {
    const double v2 = g_asymmetry(Twirl::su2(2), maximal_asymmetry_state_su2(CollectiveSpinRep::build(2)).projector()).asymmetry;
    const double v4 = g_asymmetry(Twirl::su2(4), maximal_asymmetry_state_su2(CollectiveSpinRep::build(4)).projector()).asymmetry;
    const double err = std::max(std::abs(v2 - 2.0), std::abs(v4 - std::log2(15.0)));
    add("su2_maximal_asymmetry", err <= 1e-7, err);
  }
  {
    const BoundReport r = optimize_two_qubit_bound(bell_diagonal_state(0.75));
    const double err = std::abs(r.upper - (1.0 - binary_entropy(0.75)));
    add("ree_example", r.tight && err <= 1e-4, err);
  }
  {
    const ProbabilityDistribution half = ProbabilityDistribution::bernoulli(0.5);
    const double a = u1_ncopy_asymmetry(half, 200);
    const double err = std::abs(a - gaussian_entropy_model(0.25, 200));
    add("log_n_scaling", err <= 0.02 && a / 200.0 <= 0.05, err);
  }
  {
    ComplexVector plus(2);
    plus << std::sqrt(0.5), std::sqrt(0.5);
    const DensityOperator rho = PureState(plus).projector();
    const FiniteGroupRep rep = z2_phase_flip();
    const OrbitEnsemble ens = orbit_ensemble(rep, rho);
    const HolevoReport r = holevo_bound_check(rep, rho, {{"square-root", square_root_measurement(ens)}});
    add("holevo_bound", r.holds && std::abs(r.best_info - 1.0) <= 1e-8, r.best_info);
  }
  {
    Rng rng(derive_seed(seed, 300));
    const FiniteBoundReport r = finite_group_bound_check(dihedral_group(4), random_density(2, rng), 3);
    add("finite_group_bound", r.all_hold(), r.rows.back().asymmetry);
  }
  return checks;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const std::vector<Check> checks = run_verification(cfg.seed);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (cfg.format == "csv") {
    out << csv_preamble(cfg) << "check,passed,value\n";
    for (const auto& c : checks) out << c.name << ',' << (c.passed ? "true" : "false") << ',' << format_double(c.value) << '\n';
  } else {
    json doc = envelope(cfg);
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"check", c.name}, {"passed", c.passed}, {"value", c.value}});
    doc["checks"] = list;
    doc["all_passed"] = all;
    out << doc.dump(2) << '\n';
  }
  return all ? kOk : kValidationFailure;
}

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"asymmetry", "twirl", "extremal", "scaling",
                                              "bounds",    "ree",   "estimate", "verify"};
  return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference-frame resource measures: G-twirling, G-asymmetry and related bounds", "frameness"};
  app.footer(kCsvColumns);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(FRAMENESS_VERSION));

  Config cfg;
  auto add_common = [&](CLI::App* sub, bool csv) {
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--out", cfg.out_file, "Write output to FILE instead of stdout");
    if (csv) {
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    } else {
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    }
  };
  auto add_group = [&](CLI::App* sub, std::vector<std::string> allowed) {
    return sub->add_option("--group", cfg.group, "Symmetry group")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* asym = app.add_subcommand("asymmetry", "G-asymmetry of a state");
  add_group(asym, {"finite", "u1", "su2"})->required();
  asym->add_option("--state", cfg.state_file, "State JSON")->required();
  asym->add_option("--rep", cfg.rep_file, "Finite-group JSON");
  asym->add_option("--charges", cfg.charges_file, "Charge grading JSON (default 0..d-1)");
  asym->add_option("--qubits", cfg.qubits, "Number of qubits for su2");
  asym->add_flag("--dump-state", cfg.dump_state, "Include the twirled state");
  add_common(asym, true);

  auto* tw = app.add_subcommand("twirl", "Twirled state and its asymmetry");
  add_group(tw, {"finite", "u1", "su2"})->required();
  tw->add_option("--state", cfg.state_file, "State JSON")->required();
  tw->add_option("--rep", cfg.rep_file, "Finite-group JSON");
  tw->add_option("--charges", cfg.charges_file, "Charge grading JSON");
  tw->add_option("--qubits", cfg.qubits, "Number of qubits for su2");
  add_common(tw, false);

  auto* ext = app.add_subcommand("extremal", "State of maximal asymmetry and its value");
  add_group(ext, {"u1", "su2"})->required();
  ext->add_option("--qubits", cfg.qubits, "Even number of qubits for su2");
  ext->add_option("--nmax", cfg.n_max, "Largest charge for u1")->capture_default_str();
  add_common(ext, false);

  auto* scl = app.add_subcommand("scaling", "N-copy U(1) asymmetry against the Gaussian model");
  scl->add_option("--p", cfg.scaling_p, "Bernoulli per-copy charge distribution")->capture_default_str();
  scl->add_option("--dist", cfg.dist, "Per-copy charge distribution w0,w1,... (overrides --p)");
  scl->add_option("--copies", cfg.copies, "Largest number of copies (default 200)");
  scl->add_flag("--literal-constant", cfg.literal_constant, "Use the additive constant 1/2 instead of log2(e)/2");
  add_common(scl, true);

  auto* bnd = app.add_subcommand("bounds", "Finite-group and Lie-group asymmetry bounds");
  add_group(bnd, {"finite", "su2"})->required();
  bnd->add_option("--rep", cfg.rep_file, "Finite-group JSON");
  bnd->add_option("--state", cfg.state_file, "State JSON (su2 default: maximal state)");
  bnd->add_option("--qubits", cfg.qubits, "Number of qubits for su2");
  bnd->add_option("--copies", cfg.copies, "Largest number of copies for finite groups (default 3)");
  add_common(bnd, true);

  auto* ree = app.add_subcommand("ree", "Dephasing bounds on the relative entropy of entanglement");
  ree->add_option("--family", cfg.family, "Built-in state family")->check(CLI::IsMember({"bell-diagonal"}))->capture_default_str();
  ree->add_option("--p", cfg.p, "Family parameter")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  ree->add_option("--state", cfg.state_file, "Bipartite state JSON (d x d)");
  ree->add_option("--grid", cfg.grid, "Grid points per axis")->check(CLI::PositiveNumber)->capture_default_str();
  ree->add_option("--samples", cfg.samples, "Random bases for d > 2")->capture_default_str();
  ree->add_option("--side", cfg.side, "Dephased subsystem: A, B or both")->capture_default_str();
  ree->add_flag("--sweep", cfg.sweep, "Sweep p over [0, 1] in steps of 0.05");
  add_common(ree, true);

  auto* est = app.add_subcommand("estimate", "Accessible information of a group orbit vs the Holevo bound");
  add_group(est, {"finite", "u1"});
  est->add_option("--state", cfg.state_file, "State JSON")->required();
  est->add_option("--rep", cfg.rep_file, "Finite-group JSON");
  est->add_option("--charges", cfg.charges_file, "Charge grading JSON for u1");
  est->add_option("--order", cfg.order, "Order M of the Z_M subgroup of U(1)")->capture_default_str();
  est->add_option("--random-povms", cfg.random_povms, "Additional random projective measurements")->capture_default_str();
  add_common(est, true);

  auto* ver = app.add_subcommand("verify", "Run the invariant suite");
  add_common(ver, true);

  if (args.empty() ||
      (args[0].rfind("-", 0) != 0 &&
       std::find(subcommand_names().begin(), subcommand_names().end(), args[0]) == subcommand_names().end())) {
    err << (args.empty() ? "missing subcommand" : "unknown subcommand '" + args[0] + "'") << "\n\n"
        << app.help();
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << FRAMENESS_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (cfg.command == "asymmetry") code = cmd_asymmetry(cfg, buffer, false);
    else if (cfg.command == "twirl") code = cmd_asymmetry(cfg, buffer, true);
    else if (cfg.command == "extremal") code = cmd_extremal(cfg, buffer);
    else if (cfg.command == "scaling") code = cmd_scaling(cfg, buffer);
    else if (cfg.command == "bounds") code = cmd_bounds(cfg, buffer);
    else if (cfg.command == "ree") code = cmd_ree(cfg, buffer);
    else if (cfg.command == "estimate") code = cmd_estimate(cfg, buffer);
    else if (cfg.command == "verify") code = cmd_verify(cfg, buffer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "validation error: malformed JSON input: " << e.what() << '\n';
    return kValidationFailure;
  }

  if (cfg.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_file, std::ios::binary);
    if (!file) {
      err << "cannot write '" << cfg.out_file << "'\n";
      return kValidationFailure;
    }
    file << buffer.str();
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace frameness::cli

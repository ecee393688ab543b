#include "cmub_eur/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "cmub_eur/entropy.hpp"
#include "cmub_eur/format.hpp"
#include "cmub_eur/io.hpp"

namespace cmub::cli {

namespace {

struct ParamInfo {
  std::vector<std::string> names;
  std::map<std::string, double> defaults;
};

ParamInfo params_for(Example ex) {
  using std::numbers::pi;
  switch (ex) {
    case Example::One:
    case Example::Five:
      return {{"theta"}, {}};
    case Example::Two:
      return {{"theta", "phi"}, {{"theta", pi / 4}, {"phi", pi / 4}}};
    case Example::Four:
      return {{"theta", "phi"}, {{"theta", 2 * pi / 3}, {"phi", 2 * pi / 3}}};
    default:
      return {};
  }
}

double default_upper(const std::string& param) {
  return param == "phi" ? std::numbers::pi : 2 * std::numbers::pi;
}

void check_report(const BoundReport& r, const std::string& where) {
  const auto bad = report_violations(r);
  if (!bad.empty()) {
    std::ostringstream os;
    os << where << ": lhs=" << r.lhs_uncertainty << " thm1=" << r.thm1_lower
       << " thm2=" << r.thm2_upper;
    throw InvariantViolation(bad.front(), os.str());
  }
}

// Probabilities <v|rho|v> for each column of a raw candidate basis.
std::vector<double> raw_probs(const ComplexMatrix& columns,
                              const ComplexMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(columns.cols()));
  for (Eigen::Index k = 0; k < columns.cols(); ++k) {
    const ComplexVector v = columns.col(k);
    p[static_cast<std::size_t>(k)] = v.dot(rho * v).real();
  }
  return p;
}

double shannon_of(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

void SweepConfig::validate() const {
  const ParamInfo info = params_for(example);
  if (info.names.empty()) {
    throw UsageError(example_name(example) +
                     " is a random-state example; use the random command");
  }
  if (std::find(info.names.begin(), info.names.end(), param) ==
      info.names.end()) {
    throw UsageError("parameter '" + param + "' is not valid for " +
                     example_name(example));
  }
  for (const auto& [name, value] : fixed) {
    if (std::find(info.names.begin(), info.names.end(), name) ==
        info.names.end()) {
      throw UsageError("fixed parameter '" + name + "' is not valid for " +
                       example_name(example));
    }
    if (name == param) {
      throw UsageError("parameter '" + name + "' is both swept and fixed");
    }
    if (!std::isfinite(value)) {
      throw UsageError("fixed parameter '" + name + "' is not finite");
    }
  }
  if (steps < 2) throw UsageError("--steps must be at least 2");
  if (!(lo < hi)) throw UsageError("--from must be smaller than --to");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::map<std::string, double> values = params_for(config.example).defaults;
  for (const auto& [k, v] : config.fixed) values[k] = v;

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.steps));
  for (int k = 0; k < config.steps; ++k) {
    const double x =
        k == config.steps - 1
            ? config.hi
            : config.lo + (config.hi - config.lo) * k / (config.steps - 1);
    values[config.param] = x;
    ExampleParams p;
    p.theta = values.count("theta") ? values["theta"] : 0.0;
    p.phi = values.count("phi") ? values["phi"] : 0.0;
    BoundReport r = evaluate_all(build_scenario(config.example, p));
    check_report(r, config.param + "=" + format_number(x));
    rows.push_back({x, std::move(r)});
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "param,lhs,zhang_lower,thm1_lower,thm2_upper,delta_cmub,delta_zhang,"
         "purity_a\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << format_number(row.param) << ',' << format_number(r.lhs_uncertainty)
        << ',' << format_number(r.zhang_lower) << ','
        << format_number(r.thm1_lower) << ',' << format_number(r.thm2_upper)
        << ',' << format_number(r.delta_cmub) << ','
        << format_number(r.delta_zhang) << ',' << format_number(r.purity_a)
        << '\n';
  }
}

std::vector<RandomRow> run_random(const RandomConfig& config) {
  config.spec.validate();
  if (config.example != Example::Three && config.example != Example::Six) {
    throw UsageError("random batches are defined for example3 and example6");
  }
  if (config.spec.dim != 16) {
    throw UsageError(example_name(config.example) +
                     " uses 4x4 states; --dim must be 16");
  }
  std::vector<RandomRow> rows;
  rows.reserve(static_cast<std::size_t>(config.spec.count));
  for (int i = 0; i < config.spec.count; ++i) {
    ExampleParams p;
    p.seed = config.spec.seed;
    p.index = static_cast<std::uint64_t>(i);
    p.kind = config.spec.kind;
    BoundReport r = evaluate_all(build_scenario(config.example, p));
    check_report(r, "index " + std::to_string(i));
    rows.push_back({i, std::move(r)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.report.lhs_uncertainty < b.report.lhs_uncertainty;
  });
  return rows;
}

void write_random_csv(const std::vector<RandomRow>& rows, std::ostream& out) {
  out << "index,lhs,zhang_lower,thm1_lower,thm2_upper\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << row.index << ',' << format_number(r.lhs_uncertainty) << ','
        << format_number(r.zhang_lower) << ',' << format_number(r.thm1_lower)
        << ',' << format_number(r.thm2_upper) << '\n';
  }
}

BoundReport run_bounds(const BoundsRequest& req) {
  const int d = req.state.dim_of(req.measured);
  MubSet mubs = req.mub == "auto" ? standard_mubs(d) : mubs_by_name(req.mub);
  const int m = static_cast<int>(mubs.size());
  Partition part = req.partition.empty() ? Partition::single(m)
                                         : Partition::parse(req.partition, m);
  LabelSet memories = req.memories;
  if (memories.empty()) {
    for (const auto& l : req.state.labels()) {
      if (l != req.measured) memories.push_back(l);
    }
    if (static_cast<int>(memories.size()) < part.num_memories()) {
      throw ValidationError(
          "partition", "partition needs " +
                           std::to_string(part.num_memories()) +
                           " memories but the state has only " +
                           std::to_string(memories.size()) + " other subsystems");
    }
    memories.resize(static_cast<std::size_t>(part.num_memories()));
  }
  return evaluate_all(GameScenario(req.state, req.measured, std::move(memories),
                                   std::move(mubs), std::move(part)));
}

VerifyInputs default_verify_inputs() {
  VerifyInputs in;
  for (int d : {2, 3, 4, 5}) {
    const MubSet set = standard_mubs(d);
    std::vector<ComplexMatrix> mats;
    for (const auto& b : set.bases()) mats.push_back(b.matrix());
    in.tables.emplace_back("d" + std::to_string(d), std::move(mats));
  }
  return in;
}

std::vector<CheckResult> run_verify(const VerifyInputs& in) {
  std::vector<CheckResult> out;
  std::uint64_t stream = 0;
  for (const auto& [name, mats] : in.tables) {
    const int d = mats.empty() ? 0 : static_cast<int>(mats.front().rows());

    const MubCheck mc = verify_mub(mats, kUnbiasedTol);
    const bool complete = static_cast<int>(mats.size()) == d + 1;
    out.push_back({"unbiased_" + name, mc.passed && complete,
                   "overlap dev " + fmt(mc.max_overlap_deviation) +
                       ", gram dev " + fmt(mc.max_gram_deviation) + ", " +
                       std::to_string(mats.size()) + " bases"});

    // Memoryless sandwich and 2-design identity on random single-system states.
    double worst_sandwich = 0.0, worst_design = 0.0;
    for (int k = 0; k < in.states_per_check; ++k) {
      const QuantumState s =
          random_state(k % 2 ? StateKind::Pure : StateKind::Mixed, {{"A"}, {d}},
                       in.seed, stream++);
      const double pur = purity(s);
      double h_sum = 0.0, p2_sum = 0.0;
      for (const auto& m : mats) {
        const auto p = raw_probs(m, s.rho());
        h_sum += shannon_of(p);
        for (double x : p) p2_sum += x * x;
      }
      worst_sandwich = std::max({worst_sandwich, l_cmubs(d, pur) - h_sum,
                                 h_sum - u_cmubs(d, pur)});
      worst_design = std::max(worst_design, std::abs(p2_sum - (pur + 1.0)));
    }
    out.push_back({"sanchez_ruiz_" + name, worst_sandwich <= 1e-9,
                   "max violation " + fmt(worst_sandwich)});
    out.push_back({"two_design_" + name, worst_design <= 1e-9,
                   "max deviation " + fmt(worst_design)});

    // H(M) - I(M:B) against S(MB) - S(B) on random d x d states.
    double worst_identity = 0.0;
    bool identity_ok = true;
    std::string identity_detail;
    for (int k = 0; k < in.states_per_check && identity_ok; ++k) {
      const QuantumState s = random_state(StateKind::Mixed, {{"A", "B"}, {d, d}},
                                          in.seed, stream++);
      for (const auto& m : mats) {
        try {
          const OrthonormalBasis basis(m);
          const double h = shannon_entropy(measurement_probs(s, basis, "A"));
          const double i = holevo_quantity(s, basis, "A", {"B"});
          const double c = measured_conditional_entropy(s, basis, "A", {"B"});
          worst_identity = std::max(worst_identity, std::abs(h - i - c));
        } catch (const Error& e) {
          identity_ok = false;
          identity_detail = e.what();
          break;
        }
      }
    }
    identity_ok = identity_ok && worst_identity <= 1e-9;
    out.push_back({"entropy_identity_" + name, identity_ok,
                   identity_detail.empty() ? "max deviation " + fmt(worst_identity)
                                           : identity_detail});
  }
  return out;
}

namespace {

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("output", "cannot write " + path);
  f << text;
}

StateKind parse_kind(const std::string& s) {
  if (s == "pure") return StateKind::Pure;
  if (s == "mixed") return StateKind::Mixed;
  throw UsageError("--kind must be pure or mixed");
}

Example parse_example_flag(const std::string& s) {
  try {
    return parse_example(s);
  } catch (const ValidationError&) {
    throw UsageError("unknown example '" + s + "'");
  }
}

double parse_angle_flag(const std::string& flag, const std::string& s) {
  try {
    return parse_angle(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Entropic uncertainty bounds for complete sets of mutually "
               "unbiased bases with quantum memories"};
  app.require_subcommand(1);

  // sweep
  std::string sw_example = "example1", sw_param = "theta", sw_from, sw_to, sw_out;
  int sw_steps = 201;
  std::vector<std::string> sw_fix;
  auto* sweep = app.add_subcommand("sweep", "Evaluate all bounds along a parameter grid");
  sweep->add_option("--example", sw_example, "example1, example2, example4 or example5");
  sweep->add_option("--param", sw_param, "Swept parameter: theta or phi");
  sweep->add_option("--from", sw_from, "Lower end in radians (accepts e.g. 0.25pi)");
  sweep->add_option("--to", sw_to, "Upper end in radians");
  sweep->add_option("--steps", sw_steps, "Number of grid points (>= 2)");
  sweep->add_option("--fix", sw_fix, "Fixed parameter, name=value");
  sweep->add_option("--out", sw_out, "Output CSV path (default stdout)");

  // random
  std::string rn_example = "example3", rn_kind = "mixed", rn_out;
  std::uint64_t rn_seed = 42;
  int rn_count = 1000, rn_dim = 16;
  auto* random = app.add_subcommand("random", "Evaluate all bounds on a seeded random batch");
  random->add_option("--example", rn_example, "example3 or example6");
  random->add_option("--kind", rn_kind, "pure or mixed");
  random->add_option("--seed", rn_seed, "Batch seed");
  random->add_option("--count", rn_count, "Number of states");
  random->add_option("--dim", rn_dim, "Total state dimension (16)");
  random->add_option("--out", rn_out, "Output CSV path (default stdout)");

  // bounds
  std::string bd_state, bd_mub = "auto", bd_partition, bd_measured = "A", bd_out;
  std::vector<std::string> bd_memories;
  auto* bounds = app.add_subcommand("bounds", "Print the bound report for a state file");
  bounds->add_option("state", bd_state, "State JSON file")->required();
  bounds->add_option("--mub", bd_mub, "auto, pauli, qutrit, ququart, prime:<d> or d<d>");
  bounds->add_option("--partition", bd_partition, "Basis groups per memory, e.g. 1|2,3");
  bounds->add_option("--measured", bd_measured, "Measured subsystem label");
  bounds->add_option("--memories", bd_memories, "Memory labels in partition order")
      ->delimiter(',');
  bounds->add_option("--out", bd_out, "Output JSON path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in self-check battery");

  // export-mubs
  std::string ex_mub = "pauli", ex_out;
  auto* export_mubs = app.add_subcommand("export-mubs", "Write a MUB set as JSON");
  export_mubs->add_option("--mub", ex_mub, "pauli, qutrit, ququart, prime:<d> or d<d>");
  export_mubs->add_option("--out", ex_out, "Output JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*sweep) {
      SweepConfig cfg;
      cfg.example = parse_example_flag(sw_example);
      cfg.param = sw_param;
      cfg.steps = sw_steps;
      cfg.lo = sw_from.empty() ? 0.0 : parse_angle_flag("--from", sw_from);
      cfg.hi = sw_to.empty() ? default_upper(sw_param)
                             : parse_angle_flag("--to", sw_to);
      for (const auto& f : sw_fix) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw UsageError("--fix expects name=value");
        cfg.fixed[f.substr(0, eq)] = parse_angle_flag("--fix", f.substr(eq + 1));
      }
      cfg.out = sw_out;
      std::ostringstream csv;
      write_sweep_csv(run_sweep(cfg), csv);
      emit(sw_out, csv.str(), out);
    } else if (*random) {
      RandomConfig cfg;
      cfg.example = parse_example_flag(rn_example);
      cfg.spec.kind = parse_kind(rn_kind);
      cfg.spec.seed = rn_seed;
      cfg.spec.count = rn_count;
      cfg.spec.dim = rn_dim;
      if (rn_count < 1) throw UsageError("--count must be at least 1");
      std::ostringstream csv;
      write_random_csv(run_random(cfg), csv);
      emit(rn_out, csv.str(), out);
    } else if (*bounds) {
      BoundsRequest req{read_state_file(bd_state), bd_mub, bd_partition,
                        bd_measured, bd_memories};
      const BoundReport r = run_bounds(req);
      emit(bd_out, report_to_json(r).dump(2) + "\n", out);
      const auto bad = report_violations(r);
      if (!bad.empty()) {
        err << "invariant violated: " << bad.front() << '\n';
        return kInvariant;
      }
    } else if (*verify) {
      bool all = true;
      for (const auto& c : run_verify(default_verify_inputs())) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail
            << '\n';
        all = all && c.passed;
      }
      return all ? kOk : kInvariant;
    } else if (*export_mubs) {
      emit(ex_out, mubs_to_json(mubs_by_name(ex_mub)).dump(2) + "\n", out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const ValidationError& e) {
    err << "validation failed (" << e.invariant() << "): " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}

}  // namespace cmub::cli

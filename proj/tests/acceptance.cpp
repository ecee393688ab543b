// Acceptance battery. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cmub_eur/bounds.hpp"
#include "cmub_eur/commands.hpp"
#include "cmub_eur/entropy.hpp"
#include "cmub_eur/scenario.hpp"

using namespace cmub;
using namespace cmub::cli;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Family {
  std::string name;
  std::vector<BoundReport> reports;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BoundReport> sweep(Example ex, const std::string& param, int steps,
                               std::map<std::string, double> fixed) {
  SweepConfig cfg;
  cfg.example = ex;
  cfg.param = param;
  cfg.lo = 0.0;
  cfg.hi = param == "phi" ? pi : 2 * pi;
  cfg.steps = steps;
  cfg.fixed = std::move(fixed);
  std::vector<BoundReport> out;
  for (auto& row : run_sweep(cfg)) out.push_back(std::move(row.report));
  return out;
}

std::vector<BoundReport> batch(Example ex, StateKind kind) {
  RandomConfig cfg;
  cfg.example = ex;
  cfg.spec = {.dim = 16, .kind = kind, .seed = 42, .count = 1000};
  std::vector<BoundReport> out;
  for (auto& row : run_random(cfg)) out.push_back(std::move(row.report));
  return out;
}

// Shared by criteria 2 and 3.
std::vector<Family> families;
Outcome families_error;

void build_families() {
  try {
    families.push_back({"ex1 theta", sweep(Example::One, "theta", 201, {})});
    families.push_back({"ex5 theta", sweep(Example::Five, "theta", 201, {})});
    families.push_back({"ex2 theta|phi=pi/4", sweep(Example::Two, "theta", 101, {{"phi", pi / 4}})});
    families.push_back({"ex2 phi|theta=pi/4", sweep(Example::Two, "phi", 101, {{"theta", pi / 4}})});
    families.push_back({"ex4 theta|phi=2pi/3", sweep(Example::Four, "theta", 101, {{"phi", 2 * pi / 3}})});
    families.push_back({"ex4 phi|theta=2pi/3", sweep(Example::Four, "phi", 101, {{"theta", 2 * pi / 3}})});
    for (Example ex : {Example::Three, Example::Six}) {
      families.push_back({example_name(ex) + " mixed", batch(ex, StateKind::Mixed)});
      families.push_back({example_name(ex) + " pure", batch(ex, StateKind::Pure)});
    }
  } catch (const std::exception& e) {
    families_error = {false, std::string("evaluation aborted: ") + e.what()};
  }
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundReport bell = evaluate_all(build_scenario(Example::One, {.theta = pi / 4}));
  const BoundReport prod = evaluate_all(build_scenario(Example::One, {.theta = 0.0}));
  const double elapsed = seconds_since(t0);
  const double u = 3 - 1 / (2 * std::log(2.0));
  double err = 0.0;
  for (double x : {bell.lhs_uncertainty, bell.thm1_lower, bell.thm2_upper,
                   prod.lhs_uncertainty - 2, prod.thm1_lower - 2})
    err = std::max(err, std::abs(x));
  const double err_u = std::abs(prod.thm2_upper - u);
  return {err <= 1e-7 && err_u <= 1e-5 && elapsed < 1.0,
          "max dev " + num(err) + ", thm2(0) dev " + num(err_u) + ", " + num(elapsed) + " s"};
}

Outcome criterion2(double elapsed) {
  if (!families_error.passed) return families_error;
  std::size_t n = 0, bad = 0;
  double worst = 0.0;
  for (const auto& f : families) {
    for (const auto& r : f.reports) {
      ++n;
      const double v = std::max(r.thm1_lower - r.lhs_uncertainty, r.lhs_uncertainty - r.thm2_upper);
      worst = std::max(worst, v);
      if (v > 1e-7) ++bad;
    }
  }
  return {bad == 0 && elapsed < 60.0,
          std::to_string(n) + " evaluations, " + std::to_string(bad) + " outside, worst " +
              num(worst) + ", " + num(elapsed) + " s"};
}

Outcome criterion3() {
  if (!families_error.passed) return families_error;
  Outcome o;
  std::size_t bad = 0;
  std::string strict;
  for (const auto& f : families) {
    std::size_t better = 0;
    for (const auto& r : f.reports) {
      if (r.thm1_lower < r.zhang_lower - 1e-9) ++bad;
      if (r.thm1_lower > r.zhang_lower + 1e-6) ++better;
    }
    if (better == 0) o.passed = false;
    strict += (strict.empty() ? "" : ", ") + f.name + " " + std::to_string(better) + "/" +
              std::to_string(f.reports.size());
  }
  o.passed = o.passed && bad == 0;
  o.detail = std::to_string(bad) + " below zhang; strict: " + strict;
  return o;
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = -1.0;
  for (const MubSet& set : {pauli_mubs(), qutrit_mubs(), ququart_mubs()}) {
    const int d = set.dim();
    for (std::uint64_t i = 0; i < 500; ++i) {
      const QuantumState s =
          random_state(i % 2 ? StateKind::Pure : StateKind::Mixed, {{"A"}, {d}}, 4, i);
      double h = 0.0;
      for (const auto& b : set.bases()) h += shannon_entropy(measurement_probs(s, b, "A"));
      const double p = purity(s);
      worst = std::max({worst, l_cmubs(d, p) - h, h - u_cmubs(d, p)});
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst <= 1e-9 && elapsed < 10.0,
          "1500 states, max violation " + num(worst) + ", " + num(elapsed) + " s"};
}

Outcome criterion5() {
  double worst = 0.0;
  for (int d : {2, 3, 4}) {
    const MubSet set = standard_mubs(d);
    for (std::uint64_t i = 0; i < 200; ++i) {
      const QuantumState s =
          random_state(i % 2 ? StateKind::Pure : StateKind::Mixed, {{"A", "B"}, {d, d}}, 5, i);
      const double s_b = von_neumann_entropy(partial_trace(s, {"B"}));
      for (const auto& b : set.bases()) {
        const double h = shannon_entropy(measurement_probs(s, b, "A"));
        const double info = holevo_quantity(s, b, "A", {"B"});
        const double s_mb = von_neumann_entropy(post_measurement_state(s, b, "A"));
        worst = std::max(worst, std::abs((h - info) - (s_mb - s_b)));
      }
    }
  }
  return {worst <= 1e-9, "600 states (d = 2, 3, 4), max deviation " + num(worst)};
}

Outcome criterion6() {
  double worst = 0.0;
  for (int d : {2, 3, 4, 5}) {
    const MubSet set = standard_mubs(d);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const QuantumState s =
          random_state(i % 2 ? StateKind::Pure : StateKind::Mixed, {{"A"}, {d}}, 6, i);
      double total = 0.0;
      for (const auto& b : set.bases()) {
        const ProbabilityVector probs = measurement_probs(s, b, "A");
        for (double p : probs.values()) total += p * p;
      }
      worst = std::max(worst, std::abs(total - (purity(s) + 1.0)));
    }
  }
  return {worst <= 1e-9, "400 states (d = 2..5), max deviation " + num(worst)};
}

Outcome criterion7() {
  const MubSet pauli = pauli_mubs();
  const OrthonormalBasis& sz = pauli.basis(0);
  const OrthonormalBasis& sx = pauli.basis(1);
  const Layout abc{{"A", "B", "C"}, {2, 2, 2}};
  double worst = -1.0, order = -1.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const QuantumState s =
        random_state(i % 2 ? StateKind::Pure : StateKind::Mixed, abc, 7, i);
    const double berta_lhs = measured_conditional_entropy(s, sx, "A", {"B"}) +
                             measured_conditional_entropy(s, sz, "A", {"B"});
    const double berta = berta_bound(s, sx, sz, "A", {"B"});
    const TripartiteBounds t = tripartite_bounds(s, sx, sz);
    worst = std::max({worst, berta - berta_lhs, t.renes - t.lhs, t.ming - t.lhs, t.wu - t.lhs});
    order = std::max(order, t.ming - t.wu);
  }
  return {worst <= 1e-7 && order <= 1e-9,
          "100 states, max bound excess " + num(worst) + ", max ming - wu " + num(order)};
}

Outcome criterion8() {
  auto run = [] {
    const char* argv[] = {"cmub-eur", "random", "--seed", "42"};
    std::ostringstream out, err;
    const int code = run_cli(4, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = run();
  const auto b = run();
  return {a.first == 0 && b.first == 0 && a.second == b.second && !a.second.empty(),
          std::to_string(a.second.size()) + " bytes, identical: " +
              (a.second == b.second ? "yes" : "no")};
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  build_families();
  const double families_time = seconds_since(t0);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 tight points (example 1)", criterion1},
      {"2 sandwich validity", [&] { return criterion2(families_time); }},
      {"3 dominance over the zhang bound", criterion3},
      {"4 memoryless sandwich", criterion4},
      {"5 entropy identity", criterion5},
      {"6 2-design identity", criterion6},
      {"7 tripartite baselines", criterion7},
      {"8 reproducible random csv", criterion8},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << "criterion " << name << ": " << o.detail << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}

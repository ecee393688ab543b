#include <cmath>
#include <numbers>

#include <doctest.h>

#include "cmub_eur/bounds.hpp"
#include "cmub_eur/entropy.hpp"
#include "cmub_eur/errors.hpp"
#include "cmub_eur/scenario.hpp"
#include "oracles.hpp"

using namespace cmub;
using std::numbers::pi;

namespace {

OrthonormalBasis rotated(double alpha) {
  return OrthonormalBasis::from_vectors(
      {{std::cos(alpha), std::sin(alpha)}, {-std::sin(alpha), std::cos(alpha)}});
}

GameScenario ex1(double theta) { return build_scenario(Example::One, {.theta = theta}); }

double sum_holevo(const QuantumState& s, const MubSet& m, const Partition& p, const LabelSet& mem) {
  double total = 0.0;
  for (int t = 0; t < p.num_memories(); ++t)
    for (int i : p.group(t))
      total += holevo_quantity(s, m.basis(static_cast<std::size_t>(i)), "A", {mem[static_cast<std::size_t>(t)]});
  return total;
}

}  // namespace

TEST_SUITE("memoryless functionals") {
  TEST_CASE("q_mu") {
    const MubSet p = pauli_mubs();
    CHECK(q_mu(p.basis(0), p.basis(0)) == doctest::Approx(0.0));
    CHECK(q_mu(p.basis(0), p.basis(2)) == doctest::Approx(1.0));
    const MubSet q = ququart_mubs();
    CHECK(q_mu(q.basis(1), q.basis(4)) == doctest::Approx(2.0));
    CHECK(std::abs(q_mu(p.basis(0), rotated(pi / 8)) - 0.22844669683638807) <= 1e-9);
    CHECK_THROWS_AS(q_mu(p.basis(0), q.basis(0)), DimensionError);
  }

  TEST_CASE("l_cmubs hand values") {
    CHECK(std::abs(l_cmubs(2, 1.0) - 2.0) <= 1e-12);
    CHECK(std::abs(l_cmubs(2, 0.5) - 3.0) <= 1e-12);
    CHECK(std::abs(l_cmubs(3, 1.0) - 4.0) <= 1e-12);
    CHECK(std::abs(l_cmubs(4, 0.25) - 10.0) <= 1e-12);
    CHECK(sanchez_ruiz_v(2, 1.0) == doctest::Approx(1.5));
  }

  TEST_CASE("l_cmubs is continuous across integer v") {
    // d = 3, purity 1 gives v = 2 exactly.
    for (double eps : {1e-6, 1e-9, 1e-13}) {
      CHECK(std::abs(l_cmubs(3, 1.0 - eps) - 4.0) <= 1e-4);
    }
    // d = 4, purity 2/3 gives v = 3.
    const double at = l_cmubs(4, 2.0 / 3.0);
    CHECK(std::abs(at - 5 * std::log2(3.0)) <= 1e-12);
    CHECK(std::abs(l_cmubs(4, 2.0 / 3.0 + 1e-9) - at) <= 1e-6);
    CHECK(std::abs(l_cmubs(4, 2.0 / 3.0 - 1e-9) - at) <= 1e-6);
  }

  TEST_CASE("u_cmubs hand values") {
    CHECK(std::abs(u_cmubs(2, 1.0) - (3 - 1 / (2 * std::log(2.0)))) <= 1e-12);
    CHECK(std::abs(u_cmubs(2, 1.0) - 2.278652479555518) <= 1e-9);
    CHECK(std::abs(u_cmubs(2, 0.5) - 3.0) <= 1e-12);
    CHECK(std::abs(u_cmubs(3, 1.0) - 5.006516669551291) <= 1e-9);
    for (double pur : {0.4, 0.6, 0.9}) {
      CHECK(std::abs(u_cmubs(3, pur) - (4 * std::log2(3.0) + 2.0 / 3 - 2 * pur)) <= 1e-12);
    }
    for (double pur : {0.25, 0.5, 1.0}) {
      CHECK(std::abs(u_cmubs(4, pur) - (10 - 3 * std::log2(3.0) / 8 * (4 * pur - 1))) <= 1e-12);
    }
  }

  TEST_CASE("purity outside [1/d, 1] is rejected") {
    CHECK_THROWS_AS(l_cmubs(2, 0.4), ValidationError);
    CHECK_THROWS_AS(u_cmubs(3, 1.2), ValidationError);
    CHECK_THROWS_AS(l_cmubs(1, 1.0), ValidationError);
    CHECK_NOTHROW(l_cmubs(2, 1.0 + 1e-12));
  }

  TEST_CASE("memoryless sandwich L <= sum H <= U") {
    for (int d : {2, 3, 4, 5}) {
      const MubSet set = standard_mubs(d);
      for (std::uint64_t i = 0; i < 100; ++i) {
        const QuantumState s =
            random_state(i % 2 ? StateKind::Pure : StateKind::Mixed, {{"A"}, {d}}, 1234, i);
        double h = 0.0;
        for (const auto& b : set.bases()) h += shannon_entropy(measurement_probs(s, b, "A"));
        const double pur = purity(s);
        CHECK(l_cmubs(d, pur) <= h + 1e-9);
        CHECK(h <= u_cmubs(d, pur) + 1e-9);
      }
    }
  }
}

TEST_SUITE("baseline bounds") {
  TEST_CASE("berta_bound") {
    const MubSet p = pauli_mubs();
    CHECK(std::abs(berta_bound(example1_state(pi / 4), p.basis(1), p.basis(0))) <= 1e-12);
    CHECK(berta_bound(example1_state(0), p.basis(1), p.basis(0)) == doctest::Approx(1.0));
    const QuantumState mixed({"A", "B"}, {2, 2}, ComplexMatrix::Identity(4, 4) * 0.25);
    CHECK(berta_bound(mixed, p.basis(1), p.basis(0)) == doctest::Approx(2.0));
  }

  TEST_CASE("tripartite bounds on an uncorrelated state") {
    const MubSet p = pauli_mubs();
    const double a = pi / 8;
    Eigen::VectorXcd psi(2);
    psi << std::cos(a), std::sin(a);
    const ComplexMatrix rho =
        kron(kron(oracle::outer(psi), ComplexMatrix::Identity(2, 2) * 0.5),
             ComplexMatrix::Identity(2, 2) * 0.5);
    const QuantumState s({"A", "B", "C"}, {2, 2, 2}, rho);
    const auto t = tripartite_bounds(s, p.basis(1), p.basis(0));
    const double hz = oracle::binary_entropy(std::cos(a) * std::cos(a));
    const double hx = oracle::binary_entropy((1 + std::sin(2 * a)) / 2);
    const double delta = 1.0 - hx - hz;
    CHECK(std::abs(t.delta1 - delta) <= 1e-9);
    CHECK(std::abs(t.delta2 - delta) <= 1e-9);
    CHECK(std::abs(t.ming - (1.0 + std::max(0.0, delta))) <= 1e-9);
    CHECK(std::abs(t.wu - (1.0 + std::max(0.0, delta))) <= 1e-9);
    CHECK(t.renes == doctest::Approx(1.0));
  }

  TEST_CASE("tripartite bounds on the W and GHZ states") {
    const MubSet p = pauli_mubs();
    const double a = 2 * pi / 3;
    const QuantumState w = example4_w_state(a, a).relabeled({"A", "B", "C"}, {2, 2, 2});
    const auto t = tripartite_bounds(w, p.basis(1), p.basis(0));
    CHECK(t.ming <= t.wu + 1e-9);
    CHECK(t.wu <= t.lhs + 1e-7);

    Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(8);
    ghz(0) = ghz(7) = 1 / std::sqrt(2.0);
    const auto g = tripartite_bounds(QuantumState::pure({"A", "B", "C"}, {2, 2, 2}, ghz),
                                     p.basis(0), p.basis(1));
    CHECK(g.renes == doctest::Approx(1.0));
    CHECK(g.renes <= g.lhs + 1e-9);
    CHECK(g.lhs == doctest::Approx(1.0));
  }

  TEST_CASE("zhang_bound hand values") {
    CHECK(zhang_bound(ex1(0.0)) == doctest::Approx(1.5));
    CHECK(std::abs(zhang_bound(ex1(pi / 4))) <= 1e-12);

    // Maximally mixed 4x4: every correlation vanishes, S(A|B) = 2, first term 5.
    const QuantumState mixed({"A", "B"}, {4, 4}, ComplexMatrix::Identity(16, 16) / 16.0);
    const GameScenario sc = scenario_for_state(Example::Three, mixed);
    const BoundReport r = evaluate_all(sc);
    CHECK(std::abs(r.zhang_lower - (5.0 + 2.5 * 2.0)) <= 1e-12);
    CHECK(std::abs(r.delta_zhang) <= 1e-12);
    CHECK(std::abs(r.thm1_lower - 10.0) <= 1e-12);
    CHECK(std::abs(r.lhs_uncertainty - 10.0) <= 1e-12);

    const MubSet p = pauli_mubs();
    CHECK(std::abs(max_overlap(p.basis(0), p.basis(1)) - 0.5) <= 1e-9);
  }
}

TEST_SUITE("complete-MUB bounds") {
  TEST_CASE("example 1 tight points") {
    const BoundReport r0 = evaluate_all(ex1(0.0));
    CHECK(std::abs(r0.lhs_uncertainty - 2.0) <= 1e-7);
    CHECK(std::abs(r0.thm1_lower - 2.0) <= 1e-7);
    CHECK(std::abs(r0.l_cmubs - 2.0) <= 1e-12);
    CHECK(std::abs(r0.thm2_upper - (3 - 1 / (2 * std::log(2.0)))) <= 1e-9);

    const BoundReport rb = evaluate_all(ex1(pi / 4));
    CHECK(std::abs(rb.lhs_uncertainty) <= 1e-7);
    CHECK(std::abs(rb.thm1_lower) <= 1e-7);
    CHECK(std::abs(rb.thm2_upper) <= 1e-7);
    CHECK(std::abs(thm1_lower(ex1(pi / 4))) <= 1e-7);
    CHECK(std::abs(thm2_upper(ex1(pi / 4))) <= 1e-7);
  }

  TEST_CASE("product state: upper bound is the memoryless one") {
    const QuantumState sigma = random_state(StateKind::Mixed, {{"A"}, {3}}, 8, 0);
    const QuantumState tau = random_state(StateKind::Mixed, {{"B"}, {3}}, 8, 1);
    const QuantumState prod({"A", "B"}, {3, 3}, kron(sigma.rho(), tau.rho()));
    const BoundReport r = evaluate_all(scenario_for_state(Example::Two, prod));
    CHECK(std::abs(r.thm2_upper - u_cmubs(3, purity(sigma))) <= 1e-9);
    double h = 0.0;
    for (const auto& m : r.per_measurement) h += m.shannon;
    CHECK(std::abs(r.lhs_uncertainty - h) <= 1e-9);
    CHECK(r.lhs_uncertainty <= r.thm2_upper + 1e-9);
  }

  TEST_CASE("bipartite reduction matches the single-memory formula") {
    std::vector<GameScenario> scenarios;
    for (std::uint64_t i = 0; i < 20; ++i) {
      scenarios.push_back(build_scenario(
          Example::Three, {.seed = 5, .index = i, .kind = i % 2 ? StateKind::Pure : StateKind::Mixed}));
    }
    scenarios.push_back(build_scenario(Example::Two, {.theta = pi / 4, .phi = 0.7}));
    scenarios.push_back(ex1(pi / 6));
    for (const auto& sc : scenarios) {
      const int d = sc.dim();
      const QuantumState& s = sc.state();
      const double s_a = von_neumann_entropy(partial_trace(s, {"A"}));
      const double cond = conditional_entropy(s, {"A"}, {"B"});
      const double mi = mutual_information(s, {"A"}, {"B"});
      const double hol = sum_holevo(s, sc.mubs(), sc.partition(), sc.memories());
      const double half = (d + 1) / 2.0;
      const double l = l_cmubs(d, purity(partial_trace(s, {"A"})));
      const double delta1 = l - half * std::log2(d) - half * s_a + half * mi - hol;
      const double expected = half * (std::log2(d) + cond) + std::max(0.0, delta1);
      const BoundReport r = evaluate_all(sc);
      CHECK(std::abs(r.thm1_lower - expected) <= 1e-12);
      CHECK(std::abs(r.delta_cmub - delta1) <= 1e-12);
    }
  }

  TEST_CASE("three singleton memories reduce to the d+2 player form") {
    for (double theta : {0.0, pi / 7, pi / 5, pi / 4, 1.0}) {
      const GameScenario sc = build_scenario(Example::Five, {.theta = theta});
      const QuantumState& s = sc.state();
      const double l = l_cmubs(2, purity(partial_trace(s, {"A"})));
      const double hol = sum_holevo(s, sc.mubs(), sc.partition(), sc.memories());
      const double expected = 1.5 + std::max(0.0, l - 1.5 - hol);
      const BoundReport r = evaluate_all(sc);
      CHECK(std::abs(r.thm1_lower - expected) <= 1e-12);
      CHECK(std::abs(r.base_cmub_lower - 1.5) <= 1e-12);
    }
  }

  TEST_CASE("example 4 two-memory reduction") {
    const double a = 2 * pi / 3;
    const GameScenario sc = build_scenario(Example::Four, {.theta = a, .phi = a});
    CHECK(sc.partition().to_string() == "1|2,3");
    CHECK(sc.memories() == LabelSet{"B1", "B2"});
    const QuantumState& s = sc.state();
    const MubSet& m = sc.mubs();
    const double s_a = von_neumann_entropy(partial_trace(s, {"A"}));
    const double pur = purity(partial_trace(s, {"A"}));
    const double hol = holevo_quantity(s, m.basis(0), "A", {"B1"}) +
                       holevo_quantity(s, m.basis(1), "A", {"B2"}) +
                       holevo_quantity(s, m.basis(2), "A", {"B2"});
    const double delta2 = l_cmubs(2, pur) - 1.5 - 0.5 * s_a +
                          0.5 * mutual_information(s, {"A"}, {"B2"}) - hol;
    const double lower = 1.5 + 0.5 * conditional_entropy(s, {"A"}, {"B2"}) + std::max(0.0, delta2);
    const double upper = 3 - (2 * pur - 1) / (2 * std::log(2.0)) - hol;
    const BoundReport r = evaluate_all(sc);
    CHECK(std::abs(r.thm1_lower - lower) <= 1e-12);
    CHECK(std::abs(r.thm2_upper - upper) <= 1e-12);
    CHECK(report_violations(r).empty());
  }

  TEST_CASE("printed single-memory upper bounds for d = 3 and d = 4") {
    const GameScenario s2 = build_scenario(Example::Two, {.theta = 0.4, .phi = pi / 4});
    const BoundReport r2 = evaluate_all(s2);
    double hol2 = 0.0;
    for (const auto& m : r2.per_measurement) hol2 += m.holevo;
    CHECK(std::abs(r2.thm2_upper - (4 * std::log2(3.0) + 2.0 / 3 - 2 * r2.purity_a - hol2)) <= 1e-12);

    const BoundReport r3 = evaluate_all(build_scenario(Example::Three, {.seed = 9}));
    double hol3 = 0.0;
    for (const auto& m : r3.per_measurement) hol3 += m.holevo;
    CHECK(std::abs(r3.thm2_upper -
                   (10 - 3 * std::log2(3.0) / 8 * (4 * r3.purity_a - 1) - hol3)) <= 1e-12);
  }

  TEST_CASE("report invariants across families") {
    std::vector<GameScenario> scenarios;
    for (double t : {0.0, pi / 8, pi / 4}) scenarios.push_back(ex1(t));
    for (std::uint64_t i = 0; i < 30; ++i) {
      scenarios.push_back(build_scenario(Example::Three, {.seed = 77, .index = i}));
      scenarios.push_back(build_scenario(Example::Six, {.seed = 77, .index = i, .kind = StateKind::Pure}));
    }
    for (const auto& sc : scenarios) {
      const BoundReport r = evaluate_all(sc);
      CHECK(report_violations(r).empty());
      CHECK(r.thm1_lower - r.base_cmub_lower == doctest::Approx(std::max(0.0, r.delta_cmub)).epsilon(1e-12));
      CHECK(std::abs((r.thm1_lower - r.base_cmub_lower) - std::max(0.0, r.delta_cmub)) <= 1e-12);
      CHECK(r.per_measurement.size() == sc.mubs().size());
      for (const auto& m : r.per_measurement) {
        CHECK(std::abs(m.shannon - m.holevo - m.conditional) <= 1e-9);
      }
    }
  }

  TEST_CASE("report_violations names the failing invariant") {
    BoundReport r = evaluate_all(ex1(pi / 8));
    CHECK(report_violations(r).empty());
    BoundReport low = r;
    low.thm1_lower = r.lhs_uncertainty + 1e-3;
    CHECK(report_violations(low).front() == "thm1_validity");
    BoundReport high = r;
    high.thm2_upper = r.lhs_uncertainty - 1e-3;
    CHECK(report_violations(high).front() == "thm2_validity");
    BoundReport nan = r;
    nan.v = std::nan("");
    CHECK(report_violations(nan).front() == "finite");
  }
}

#include "cmub_eur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmub_eur/entropy.hpp"
#include "cmub_eur/errors.hpp"

namespace cmub {

namespace {

constexpr double kPuritySlack = 1e-9;
constexpr double kIntegerSnap = 1e-12;

double checked_purity(int d, double purity) {
  if (d < 2) {
    throw ValidationError("dimension", "d = " + std::to_string(d) + " < 2");
  }
  const double lo = 1.0 / d;
  if (!(purity >= lo - kPuritySlack && purity <= 1.0 + kPuritySlack)) {
    std::ostringstream os;
    os << "purity " << purity << " outside [1/" << d << ", 1]";
    throw ValidationError("purity", os.str());
  }
  return std::clamp(purity, lo, 1.0);
}

double base_term(int d) { return 0.5 * (d + 1) * std::log2(d); }

double pair_weight(int m_t, double denom) {
  return m_t * (m_t - 1) / (2.0 * denom);
}

}  // namespace

double max_overlap(const OrthonormalBasis& b1, const OrthonormalBasis& b2) {
  if (b1.dim() != b2.dim()) {
    throw DimensionError("bases have dimensions " + std::to_string(b1.dim()) +
                         " and " + std::to_string(b2.dim()));
  }
  return (b1.matrix().adjoint() * b2.matrix()).cwiseAbs2().maxCoeff();
}

double q_mu(const OrthonormalBasis& b1, const OrthonormalBasis& b2) {
  return -std::log2(max_overlap(b1, b2));
}

double berta_bound(const QuantumState& state, const OrthonormalBasis& b1,
                   const OrthonormalBasis& b2, const std::string& measured,
                   const LabelSet& memory) {
  return q_mu(b1, b2) + conditional_entropy(state, {measured}, memory);
}

TripartiteBounds tripartite_bounds(const QuantumState& state,
                                   const OrthonormalBasis& b1,
                                   const OrthonormalBasis& b2,
                                   const std::string& measured,
                                   const std::string& b, const std::string& c) {
  const double q = q_mu(b1, b2);
  const double s_a = von_neumann_entropy(partial_trace(state, {measured}));
  const double h1 = shannon_entropy(measurement_probs(state, b1, measured));
  const double h2 = shannon_entropy(measurement_probs(state, b2, measured));
  const double i_ab = mutual_information(state, {measured}, {b});
  const double i_ac = mutual_information(state, {measured}, {c});
  const double i_m1b = holevo_quantity(state, b1, measured, {b});
  const double i_m2b = holevo_quantity(state, b2, measured, {b});
  const double i_m1c = holevo_quantity(state, b1, measured, {c});
  const double i_m2c = holevo_quantity(state, b2, measured, {c});

  TripartiteBounds out;
  out.renes = q;
  out.delta1 = 2.0 * s_a + q - i_ab - i_ac + i_m2b + i_m1c - h1 - h2;
  out.delta2 = 2.0 * s_a + q - i_m1b - i_m2c - h1 - h2;
  out.ming = q + std::max(0.0, out.delta1);
  out.wu = q + std::max(0.0, out.delta2);
  out.lhs = measured_conditional_entropy(state, b1, measured, {b}) +
            measured_conditional_entropy(state, b2, measured, {c});
  return out;
}

double sanchez_ruiz_v(int d, double purity) {
  return (d + 1) / (checked_purity(d, purity) + 1.0);
}

double l_cmubs(int d, double purity) {
  const double v = sanchez_ruiz_v(d, purity);
  double k = std::floor(v);
  const double nearest = std::round(v);
  if (std::abs(v - nearest) < kIntegerSnap) k = nearest;
  return (d + 1) * (std::log2(1.0 + k) -
                    (k / v) * (1.0 + k - v) * std::log2(1.0 + 1.0 / k));
}

double u_cmubs(int d, double purity) {
  const double p = checked_purity(d, purity);
  const double top = (d + 1) * std::log2(d);
  if (d == 2) {
    return top - (d - 1) * (d * p - 1.0) / (d * std::numbers::ln2);
  }
  return top - (d - 1.0) / (d * (d - 2.0)) * std::log2(d - 1.0) * (d * p - 1.0);
}

BoundReport evaluate_all(const GameScenario& sc) {
  const int d = sc.dim();
  const int m = static_cast<int>(sc.mubs().size());
  const Partition& part = sc.partition();
  const std::string& a = sc.measured();

  BoundReport r;
  const QuantumState rho_a = partial_trace(sc.state(), {a});
  r.s_a = von_neumann_entropy(rho_a);
  r.purity_a = purity(rho_a);
  r.v = sanchez_ruiz_v(d, r.purity_a);
  r.l_cmubs = l_cmubs(d, r.purity_a);
  r.u_cmubs = u_cmubs(d, r.purity_a);

  for (int t = 0; t < part.num_memories(); ++t) {
    const std::string& bt = sc.memories()[static_cast<std::size_t>(t)];
    const QuantumState rho_ab = partial_trace(sc.state(), {a, bt});
    const double s_ab = von_neumann_entropy(rho_ab);
    const double s_b = von_neumann_entropy(partial_trace(rho_ab, {bt}));
    MemoryTerms mt;
    mt.memory = bt;
    mt.conditional = s_ab - s_b;
    mt.mutual_information = r.s_a + s_b - s_ab;
    mt.cardinality = part.cardinality(t);
    r.per_memory.push_back(mt);

    for (int i : part.group(t)) {
      const OrthonormalBasis& basis = sc.mubs().basis(static_cast<std::size_t>(i));
      const QuantumState cq = post_measurement_state(rho_ab, basis, a);
      const double s_mb = von_neumann_entropy(cq);
      const double s_m = von_neumann_entropy(partial_trace(cq, {a}));
      MeasurementTerms me;
      me.basis_index = i + 1;
      me.memory = bt;
      me.shannon = shannon_entropy(measurement_probs(rho_ab, basis, a));
      me.holevo = s_m + s_b - s_mb;
      me.conditional = s_mb - s_b;
      const double via_identity = me.shannon - me.holevo;
      if (std::abs(via_identity - me.conditional) > kIdentityTol) {
        std::ostringstream os;
        os << "basis " << i + 1 << ": H(M) - I(M:B) = " << via_identity
           << " but S(MB) - S(B) = " << me.conditional;
        throw InvariantViolation("entropy_identity", os.str());
      }
      r.per_measurement.push_back(me);
    }
  }
  std::sort(r.per_measurement.begin(), r.per_measurement.end(),
            [](const auto& x, const auto& y) { return x.basis_index < y.basis_index; });

  double holevo_sum = 0.0;
  for (const auto& me : r.per_measurement) {
    r.lhs_uncertainty += me.shannon - me.holevo;
    holevo_sum += me.holevo;
  }

  // Lower bound built from the complete-MUB structure.
  const double base = base_term(d);
  double weighted_cond = 0.0, weighted_sa = 0.0, weighted_mi = 0.0;
  for (const auto& mt : r.per_memory) {
    const double w = pair_weight(mt.cardinality, d);
    weighted_cond += w * mt.conditional;
    weighted_sa += w * r.s_a;
    weighted_mi += w * mt.mutual_information;
  }
  r.base_cmub_lower = base + weighted_cond;
  r.delta_cmub = r.l_cmubs - base - weighted_sa + weighted_mi - holevo_sum;
  r.thm1_lower = r.base_cmub_lower + std::max(0.0, r.delta_cmub);
  r.thm2_upper = r.u_cmubs - holevo_sum;

  // Multi-memory bound with general complementarity factors.
  double log_c = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      log_c += std::log2(max_overlap(sc.mubs().basis(static_cast<std::size_t>(i)),
                                     sc.mubs().basis(static_cast<std::size_t>(j))));
    }
  }
  const double zhang_base = -log_c / (m - 1);
  double zw_cond = 0.0, zw_mi = 0.0;
  int pair_count = 0;
  for (const auto& mt : r.per_memory) {
    zw_cond += pair_weight(mt.cardinality, m - 1) * mt.conditional;
    zw_mi += pair_weight(mt.cardinality, m - 1) * mt.mutual_information;
    pair_count += mt.cardinality * (mt.cardinality - 1);
  }
  r.delta_zhang = (m * (m - 1) - pair_count) / (2.0 * (m - 1)) * r.s_a + zw_mi -
                  holevo_sum;
  r.zhang_lower = zhang_base + zw_cond + std::max(0.0, r.delta_zhang);
  return r;
}

double zhang_bound(const GameScenario& scenario) {
  return evaluate_all(scenario).zhang_lower;
}

double thm1_lower(const GameScenario& scenario) {
  return evaluate_all(scenario).thm1_lower;
}

double thm2_upper(const GameScenario& scenario) {
  return evaluate_all(scenario).thm2_upper;
}

std::vector<std::string> report_violations(const BoundReport& r) {
  std::vector<std::string> out;
  for (double x : {r.lhs_uncertainty, r.thm1_lower, r.thm2_upper, r.zhang_lower,
                   r.base_cmub_lower, r.delta_cmub, r.delta_zhang, r.l_cmubs,
                   r.u_cmubs, r.purity_a, r.v, r.s_a}) {
    if (!std::isfinite(x)) {
      out.emplace_back("finite");
      return out;
    }
  }
  if (r.thm1_lower > r.lhs_uncertainty + kValidityTol) {
    out.emplace_back("thm1_validity");
  }
  if (r.lhs_uncertainty > r.thm2_upper + kValidityTol) {
    out.emplace_back("thm2_validity");
  }
  if (r.thm1_lower < r.base_cmub_lower - 1e-12) out.emplace_back("thm1_base");
  return out;
}

}  // namespace cmub

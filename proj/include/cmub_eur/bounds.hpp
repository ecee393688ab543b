#pragma once

#include <string>
#include <vector>

#include "cmub_eur/basis.hpp"
#include "cmub_eur/game.hpp"
#include "cmub_eur/qstate.hpp"

// Entropic uncertainty bounds for measurements on one subsystem, with and
// without quantum memories. All values are in bits.
namespace cmub {

// -log2 max_jk |<a_j|b_k>|^2 (Maassen-Uffink complementarity).
double q_mu(const OrthonormalBasis& b1, const OrthonormalBasis& b2);

// Max squared overlap between two bases.
double max_overlap(const OrthonormalBasis& b1, const OrthonormalBasis& b2);

// Two measurements, one memory: q_MU + S(A|B).
double berta_bound(const QuantumState& state, const OrthonormalBasis& b1,
                   const OrthonormalBasis& b2, const std::string& measured = "A",
                   const LabelSet& memory = {"B"});

struct TripartiteBounds {
  double renes = 0.0;   // q_MU
  double ming = 0.0;    // q_MU + max{0, delta1}
  double wu = 0.0;      // q_MU + max{0, delta2}
  double delta1 = 0.0;
  double delta2 = 0.0;
  double lhs = 0.0;     // S(M1|B) + S(M2|C)
};

// M1 guessed by memory `b`, M2 by memory `c`.
TripartiteBounds tripartite_bounds(const QuantumState& state,
                                   const OrthonormalBasis& b1,
                                   const OrthonormalBasis& b2,
                                   const std::string& measured = "A",
                                   const std::string& b = "B",
                                   const std::string& c = "C");

// v = (d+1)/(purity+1)
double sanchez_ruiz_v(int d, double purity);

// Purity-dependent lower bound on sum_i H(M_i) over a complete MUB set:
// (d+1)[log2(1+k) - (k/v)(1+k-v) log2(1+1/k)], k = floor(v).
// Requires purity in [1/d, 1] (1e-9 slack); otherwise ValidationError.
double l_cmubs(int d, double purity);

// Matching upper bound:
//   d > 2: (d+1) log2 d - (d-1)/(d(d-2)) log2(d-1) (d*purity - 1)
//   d = 2: 3 - (2*purity - 1)/(2 ln 2)
double u_cmubs(int d, double purity);

struct MeasurementTerms {
  int basis_index = 0;  // 1-based
  std::string memory;
  double shannon = 0.0;      // H(M_i)
  double conditional = 0.0;  // S(M_i|B_t)
  double holevo = 0.0;       // I(M_i:B_t)
};

struct MemoryTerms {
  std::string memory;
  double conditional = 0.0;         // S(A|B_t)
  double mutual_information = 0.0;  // I(A:B_t)
  int cardinality = 0;              // m_t
};

// Every quantity computed for one scenario.
struct BoundReport {
  double lhs_uncertainty = 0.0;
  double thm1_lower = 0.0;
  double thm2_upper = 0.0;
  double zhang_lower = 0.0;
  double base_cmub_lower = 0.0;
  double delta_cmub = 0.0;   // before max{0, .}
  double delta_zhang = 0.0;  // before max{0, .}
  double l_cmubs = 0.0;
  double u_cmubs = 0.0;
  double purity_a = 0.0;
  double v = 0.0;
  double s_a = 0.0;
  std::vector<MeasurementTerms> per_measurement;
  std::vector<MemoryTerms> per_memory;
};

inline constexpr double kValidityTol = 1e-7;
inline constexpr double kIdentityTol = 1e-9;

// Multi-memory bound for an arbitrary m-tuple of bases; the complementarity
// factors c_ij come from the actual basis vectors.
double zhang_bound(const GameScenario& scenario);

// Lower bound: ((d+1)/2) log2 d + sum_t m_t(m_t-1)/(2d) S(A|B_t)
//   + max{0, L - ((d+1)/2) log2 d - sum_t m_t(m_t-1)/(2d) (S(A) - I(A:B_t))
//             - sum_t sum_{i in S_t} I(M_i:B_t)}.
double thm1_lower(const GameScenario& scenario);

// Upper bound: U - sum_t sum_{i in S_t} I(M_i:B_t).
double thm2_upper(const GameScenario& scenario);

// Computes every bound and intermediate quantity. The uncertainty is summed
// as H(M_i) - I(M_i:B_t) and cross-checked against S(M_i B_t) - S(B_t);
// a disagreement above 1e-9 throws InvariantViolation("entropy_identity").
BoundReport evaluate_all(const GameScenario& scenario);

// Names of the report invariants that fail (empty when the report is valid):
// "thm1_validity", "thm2_validity", "thm1_base", "finite".
std::vector<std::string> report_violations(const BoundReport& report);

}  // namespace cmub

#include "cmub_eur/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "cmub_eur/errors.hpp"

namespace cmub {

namespace {

constexpr double kProbNegTol = 1e-12;
constexpr double kProbSumTol = 1e-9;
constexpr double kEigClampTol = 1e-10;

double plogp_sum(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

void require_disjoint(const LabelSet& x, const LabelSet& y) {
  const std::set<std::string> xs(x.begin(), x.end());
  for (const auto& l : y) {
    if (xs.contains(l)) {
      throw LabelError("label '" + l + "' appears in both label sets");
    }
  }
}

LabelSet join(const LabelSet& x, const LabelSet& y) {
  LabelSet out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs)
    : probs_(std::move(probs)) {
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    double& p = probs_[i];
    if (!std::isfinite(p)) {
      throw ValidationError("probability", "entry " + std::to_string(i) +
                                               " is not finite");
    }
    if (p < -kProbNegTol) {
      std::ostringstream os;
      os << "entry " << i << " is negative (" << p << ")";
      throw ValidationError("probability", os.str());
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > kProbSumTol) {
    std::ostringstream os;
    os << "entries sum to " << total << ", expected 1";
    throw ValidationError("probability", os.str());
  }
}

double shannon_entropy(const ProbabilityVector& p) {
  return plogp_sum(p.values());
}

double spectrum_entropy(const RealVector& eigenvalues) {
  std::vector<double> lam(eigenvalues.begin(), eigenvalues.end());
  for (double& x : lam) {
    if (x < -kEigClampTol) {
      std::ostringstream os;
      os << "eigenvalue " << x << " is below -1e-10";
      throw ValidationError("positive_semidefinite", os.str());
    }
    if (x < 0.0) x = 0.0;
  }
  return plogp_sum(lam);
}

double von_neumann_entropy(const QuantumState& state) {
  if (state.total_dim() == 1) return 0.0;
  return spectrum_entropy(hermitian_eig(state.rho()).eigenvalues);
}

double conditional_entropy(const QuantumState& state, const LabelSet& target,
                           const LabelSet& memory) {
  require_disjoint(target, memory);
  const QuantumState joint = partial_trace(state, join(target, memory));
  return von_neumann_entropy(joint) -
         von_neumann_entropy(partial_trace(joint, memory));
}

double mutual_information(const QuantumState& state, const LabelSet& x,
                          const LabelSet& y) {
  require_disjoint(x, y);
  const QuantumState joint = partial_trace(state, join(x, y));
  return von_neumann_entropy(partial_trace(joint, x)) +
         von_neumann_entropy(partial_trace(joint, y)) -
         von_neumann_entropy(joint);
}

ProbabilityVector measurement_probs(const QuantumState& state,
                                    const OrthonormalBasis& basis,
                                    std::string_view measured) {
  const QuantumState reduced = partial_trace(state, {std::string(measured)});
  if (basis.dim() != reduced.total_dim()) {
    throw DimensionError("basis dimension " + std::to_string(basis.dim()) +
                         " does not match subsystem '" + std::string(measured) +
                         "' of dimension " +
                         std::to_string(reduced.total_dim()));
  }
  std::vector<double> p(static_cast<std::size_t>(basis.dim()));
  for (int i = 0; i < basis.dim(); ++i) {
    const ComplexVector v = basis.vector(i);
    p[static_cast<std::size_t>(i)] = v.dot(reduced.rho() * v).real();
  }
  return ProbabilityVector(std::move(p));
}

double holevo_quantity(const QuantumState& state, const OrthonormalBasis& basis,
                       std::string_view measured, const LabelSet& memory) {
  const LabelSet m{std::string(measured)};
  require_disjoint(m, memory);
  const QuantumState cq =
      post_measurement_state(partial_trace(state, join(m, memory)), basis,
                             measured);
  return mutual_information(cq, m, memory);
}

double measured_conditional_entropy(const QuantumState& state,
                                    const OrthonormalBasis& basis,
                                    std::string_view measured,
                                    const LabelSet& memory) {
  const LabelSet m{std::string(measured)};
  require_disjoint(m, memory);
  const QuantumState cq =
      post_measurement_state(partial_trace(state, join(m, memory)), basis,
                             measured);
  return conditional_entropy(cq, m, memory);
}

double purity(const QuantumState& state) {
  // tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return state.rho().cwiseAbs2().sum();
}

}  // namespace cmub

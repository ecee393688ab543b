#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "cmub_eur/basis.hpp"
#include "cmub_eur/qstate.hpp"

// Entropic functionals. Every entropy is returned in bits (log base 2).
namespace cmub {

// A discrete probability distribution. Entries in [-1e-12, 0) are clamped to
// 0 on construction; anything more negative, or a total that is not 1 within
// 1e-9, throws ValidationError.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs);

  std::span<const double> values() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

// Entropy of a density-matrix spectrum. Eigenvalues in [-1e-10, 0) count as
// 0; more negative ones throw ValidationError("positive_semidefinite").
double spectrum_entropy(const RealVector& eigenvalues);

double von_neumann_entropy(const QuantumState& state);

// S(target ∪ memory) - S(memory), evaluated on the reduced state.
// Throws LabelError if the two sets overlap.
double conditional_entropy(const QuantumState& state, const LabelSet& target,
                           const LabelSet& memory);

// S(x) + S(y) - S(xy). Throws LabelError if x and y overlap.
double mutual_information(const QuantumState& state, const LabelSet& x,
                          const LabelSet& y);

// p_i = <psi_i| rho_measured |psi_i>.
ProbabilityVector measurement_probs(const QuantumState& state,
                                    const OrthonormalBasis& basis,
                                    std::string_view measured);

// Holevo quantity I(M:B): the mutual information between the outcome
// register and `memory` in the post-measurement state of rho^{measured,memory}.
double holevo_quantity(const QuantumState& state, const OrthonormalBasis& basis,
                       std::string_view measured, const LabelSet& memory);

// Conditional entropy S(M|B) of the post-measurement state.
double measured_conditional_entropy(const QuantumState& state,
                                    const OrthonormalBasis& basis,
                                    std::string_view measured,
                                    const LabelSet& memory);

// tr(rho^2)
double purity(const QuantumState& state);

}  // namespace cmub

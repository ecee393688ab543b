#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cmub_eur/basis.hpp"
#include "cmub_eur/matrix.hpp"

namespace cmub {

using LabelSet = std::vector<std::string>;

// Numerical tolerances for the density-matrix invariants.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

// Density matrix over an ordered list of labelled subsystems. The first
// label is the most significant tensor factor. Instances are immutable and
// always satisfy: Hermitian, unit trace, positive semidefinite (all within
// 1e-10). Construction throws ValidationError naming the failed invariant.
class QuantumState {
 public:
  QuantumState(LabelSet labels, std::vector<int> dims, ComplexMatrix rho);

  // |psi><psi| with psi normalized first. psi must be non-zero.
  static QuantumState pure(LabelSet labels, std::vector<int> dims,
                           const ComplexVector& psi);

  const LabelSet& labels() const { return labels_; }
  const std::vector<int>& dims() const { return dims_; }
  const ComplexMatrix& rho() const { return rho_; }
  int total_dim() const { return static_cast<int>(rho_.rows()); }
  std::size_t num_subsystems() const { return labels_.size(); }

  bool has_label(std::string_view label) const;
  // Position of `label` in labels(); throws LabelError if absent.
  std::size_t index_of(std::string_view label) const;
  int dim_of(std::string_view label) const { return dims_[index_of(label)]; }

  // Same matrix, different tensor factorization (product of dims must match).
  QuantumState relabeled(LabelSet labels, std::vector<int> dims) const;

 private:
  LabelSet labels_;
  std::vector<int> dims_;
  ComplexMatrix rho_;
};

// Reduced state on `keep`. Kept subsystems stay in their original relative
// order. An empty `keep` traces out everything and yields the 1x1 state [1].
// Throws LabelError for labels not present in the state.
QuantumState partial_trace(const QuantumState& state, const LabelSet& keep);

// sum_i (P_i ⊗ 1) rho (P_i ⊗ 1) with P_i the projectors of `basis` acting on
// subsystem `measured`. Labels and ordering are unchanged; the measured slot
// now holds the classical outcome register.
QuantumState post_measurement_state(const QuantumState& state,
                                    const OrthonormalBasis& basis,
                                    std::string_view measured);

// Embeds an operator on subsystem `label` into the full space as 1 ⊗ op ⊗ 1.
ComplexMatrix embed_operator(const QuantumState& state, std::string_view label,
                             const ComplexMatrix& op);

}  // namespace cmub

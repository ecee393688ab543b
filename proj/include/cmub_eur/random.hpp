#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cmub_eur/qstate.hpp"

namespace cmub {

enum class StateKind { Pure, Mixed };

struct RandomStateSpec {
  int dim = 16;
  StateKind kind = StateKind::Mixed;
  std::uint64_t seed = 0;
  int count = 1;

  // Throws ValidationError("random_spec") unless dim >= 2 and count >= 1.
  void validate() const;
};

// Per-item random stream. Item `index` of a batch seeded with `seed` draws
// from MT19937-64 initialized through std::seed_seq with the 32-bit words
// (seed_lo, seed_hi, index_lo, index_hi). Both std::mt19937_64 and
// std::seed_seq are fully specified by the C++ standard, and the uniform and
// normal transforms below are written out explicitly, so a given
// (seed, index) yields the same numbers on every conforming platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t index);

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  // Uniform on (lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal pair via Box-Muller; returns the cosine branch and keeps
  // the sine branch for the next call.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Random density matrix sum_k p_k |psi_k><psi_k|. Draw order: dim draws for
// the probability cascade q_1 = u, q_{k+1} = u q_k, then dim*dim entries of a
// real matrix R uniform on (-1, 1), row-major. With D, U, L the diagonal,
// strict upper and strict lower parts of R, the eigenvectors psi_k come from
// the Hermitian matrix D + (U^T + U) + i(L - L^T), in ascending eigenvalue
// order, and are paired with p_k = q_k / sum_j q_j.
ComplexMatrix random_mixed_density(int dim, std::uint64_t seed,
                                   std::uint64_t index);

// Normalized vector of i.i.d. standard complex Gaussians (Haar direction).
// Component j takes (re, im) from one Box-Muller pair.
ComplexVector random_pure_vector(int dim, std::uint64_t seed,
                                 std::uint64_t index);

struct Layout {
  LabelSet labels;
  std::vector<int> dims;
};

// k x k labelled (A, B) when dim is a perfect square k^2 with k >= 2,
// otherwise a single subsystem A.
Layout default_layout(int dim);

QuantumState random_state(StateKind kind, const Layout& layout,
                          std::uint64_t seed, std::uint64_t index);

// The full batch, item i drawn from substream (spec.seed, i).
std::vector<QuantumState> random_states(const RandomStateSpec& spec,
                                        const Layout& layout);
std::vector<QuantumState> random_states(const RandomStateSpec& spec);

std::vector<QuantumState> random_mixed_states(const RandomStateSpec& spec);
std::vector<QuantumState> random_pure_states(const RandomStateSpec& spec);

}  // namespace cmub

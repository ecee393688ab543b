#pragma once

#include <span>
#include <string>
#include <vector>

#include "cmub_eur/basis.hpp"

namespace cmub {

inline constexpr double kUnbiasedTol = 1e-9;

// A complete set of d+1 pairwise mutually unbiased bases in dimension d.
// Construction verifies cardinality and |<a_j|b_k>|^2 = 1/d within 1e-9.
class MubSet {
 public:
  explicit MubSet(std::vector<OrthonormalBasis> bases);

  int dim() const { return bases_.front().dim(); }
  std::size_t size() const { return bases_.size(); }
  const OrthonormalBasis& basis(std::size_t i) const { return bases_.at(i); }
  const std::vector<OrthonormalBasis>& bases() const { return bases_; }

 private:
  std::vector<OrthonormalBasis> bases_;
};

struct MubCheck {
  double max_overlap_deviation = 0.0;  // max | |<a_j|b_k>|^2 - 1/d |, a != b
  double max_gram_deviation = 0.0;     // max |<a_j|a_k> - delta_jk|
  bool passed = false;
};

// Checks an arbitrary list of candidate bases (columns are vectors). Never
// throws for numerical failures; shape problems throw DimensionError.
MubCheck verify_mub(std::span<const ComplexMatrix> candidates, double tol);
MubCheck verify_mub(const MubSet& set, double tol);

// Eigenbases of sigma_z, sigma_x, sigma_y, in that order.
MubSet pauli_mubs();
// The four qutrit bases with omega = (-1 + sqrt(3) i)/2, as tabulated.
MubSet qutrit_mubs();
// The five ququart bases with entries in {±1, ±i}/2, as tabulated.
MubSet ququart_mubs();
// Computational basis plus the d bases with components
// omega^(a j^2 + k j)/sqrt(d), omega = exp(2 pi i/d), a = 0..d-1.
// Requires an odd prime d <= 31, otherwise throws UnsupportedDimension.
MubSet prime_mubs(int d);

// Tabulated set for d = 2, 3, 4 and the prime construction for odd primes.
MubSet standard_mubs(int d);

// "pauli", "qutrit", "ququart", "prime:<d>" or "d<d>" (standard_mubs).
MubSet mubs_by_name(const std::string& name);

bool is_odd_prime(int d);

}  // namespace cmub

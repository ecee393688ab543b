#pragma once

#include <vector>

#include "cmub_eur/matrix.hpp"

namespace cmub {

// An orthonormal basis of C^d, stored as the columns of a d x d matrix.
// Construction checks that the Gram matrix is the identity within 1e-10.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(ComplexMatrix columns);

  // Each inner vector is one basis vector, in order.
  static OrthonormalBasis from_vectors(
      const std::vector<std::vector<Complex>>& vectors);
  static OrthonormalBasis computational(int dim);

  int dim() const { return static_cast<int>(columns_.rows()); }
  ComplexVector vector(int k) const { return columns_.col(k); }
  const ComplexMatrix& matrix() const { return columns_; }

  // |k><k| for the k-th basis vector.
  ComplexMatrix projector(int k) const;

 private:
  ComplexMatrix columns_;
};

// max |<a_j|a_k> - delta_jk| over the columns of m.
double gram_defect(const ComplexMatrix& columns);

}  // namespace cmub

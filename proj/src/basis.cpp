#include "cmub_eur/basis.hpp"

#include <sstream>
#include <string>

#include "cmub_eur/errors.hpp"

namespace cmub {

OrthonormalBasis::OrthonormalBasis(ComplexMatrix columns)
    : columns_(std::move(columns)) {
  if (columns_.rows() != columns_.cols() || columns_.rows() < 1) {
    throw DimensionError("OrthonormalBasis: expected d vectors of length d");
  }
  const double defect = gram_defect(columns_);
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "Gram matrix deviates from identity by " << defect;
    throw ValidationError("orthonormal", os.str());
  }
}

OrthonormalBasis OrthonormalBasis::from_vectors(
    const std::vector<std::vector<Complex>>& vectors) {
  const auto d = static_cast<Eigen::Index>(vectors.size());
  ComplexMatrix cols(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (static_cast<Eigen::Index>(vectors[k].size()) != d) {
      throw DimensionError("OrthonormalBasis: vector " + std::to_string(k) +
                           " has the wrong length");
    }
    for (Eigen::Index j = 0; j < d; ++j) cols(j, k) = vectors[k][j];
  }
  return OrthonormalBasis(std::move(cols));
}

OrthonormalBasis OrthonormalBasis::computational(int dim) {
  return OrthonormalBasis(ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix OrthonormalBasis::projector(int k) const {
  const ComplexVector v = columns_.col(k);
  return v * v.adjoint();
}

double gram_defect(const ComplexMatrix& columns) {
  const Eigen::Index n = columns.cols();
  const ComplexMatrix gram = columns.adjoint() * columns;
  return (gram - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace cmub

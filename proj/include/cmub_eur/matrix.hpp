#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cmub {

using Complex = std::complex<double>;

// Dense, row-major complex matrix. Every Hilbert space in this library is
// small (at most a few dozen dimensions), so there is no sparse path.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct SpectralDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // column k belongs to eigenvalues[k]
};

// Kronecker product: (a ⊗ b)(i*p + k, j*q + l) = a(i, j) * b(k, l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
// (m + m†)/2 first so that rounding-level asymmetry never produces complex
// eigenvalues. Eigenvector phases are whatever the solver returns.
// Throws DimensionError for non-square input.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

// max_ij |m(i,j) - m(j,i)*|
double hermiticity_defect(const ComplexMatrix& m);

// max_ij |a(i,j) - b(i,j)|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cmub

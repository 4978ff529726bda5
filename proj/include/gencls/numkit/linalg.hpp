#pragma once

#include <cstddef>

#include "gencls/numkit/vec.hpp"

namespace gencls::num {

// argmin_x ||Ax - b||_2 for full-column-rank A (rows >= cols), via Householder
// QR with column pivoting. Throws SingularSystemError when a pivot falls below
// 1e-12 relative to the largest one.
Vector least_squares_solve(const Matrix& a, const Vector& b);

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// values are sorted nonincreasing; vectors.row(i) is the eigenvector paired
// with values[i] (rows orthonormal to machine precision).
struct EigenDecomposition {
  Vector values;
  Matrix vectors;
};
EigenDecomposition symmetric_eigen(Matrix a);

// Principal component analysis of the rows of x.
//   mean: column means (length d)
//   components: m x d, orthonormal rows, leading directions first
//   eigenvalues: top m eigenvalues of the covariance (1/n) Xc^T Xc
//   total_variance: trace of the covariance, so the expected total squared
//   reconstruction error of the fit is n * (total_variance - sum(eigenvalues)).
struct PcaResult {
  Vector mean;
  Matrix components;
  Vector eigenvalues;
  double total_variance = 0.0;
};
PcaResult pca_fit(const Matrix& x, std::size_t m);

}  // namespace gencls::num

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace minf {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default relative algebraic tolerance (scaled by the Frobenius norm of the
// input where applicable).
inline constexpr double kAlgebraicTol = 1e-10;

struct HermitianEigenResult {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns, unitary
};

enum class Subsystem { A, B };

/// Kronecker product, first factor outermost.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of an (m*n)x(m*n) operator over the discarded subsystem.
/// Party a is the slower-varying (outer) tensor index.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b,
                            Subsystem keep);

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (a + a^dag)/2 before solving; asymmetry above tol * ||a||_F is an error.
HermitianEigenResult hermitian_eig(const ComplexMatrix& a,
                                   double tol = kAlgebraicTol);

/// Hilbert-Schmidt inner product tr(a^dag b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(rho^2).
double purity(const ComplexMatrix& rho);

}  // namespace minf

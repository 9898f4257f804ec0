#include "minf/qlin.hpp"

namespace minf {

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  ComplexMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b,
                            Subsystem keep) {
  if (rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i)
    out += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
  return out;
}

HermitianEigenResult hermitian_eig(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eig: matrix not square");
  const double scale = a.norm();
  const double asym = (a - a.adjoint()).norm();
  if (asym > tol * std::max(scale, 1.0))
    throw std::invalid_argument("hermitian_eig: input not Hermitian");
  ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  return a.conjugate().cwiseProduct(b).sum();
}

double purity(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("purity: matrix not square");
  // tr(rho^2) = sum_ij rho_ij rho_ji; real for Hermitian rho
  return rho.transpose().cwiseProduct(rho).sum().real();
}

}  // namespace minf

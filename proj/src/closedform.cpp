#include "minf/closedform.hpp"

#include <cmath>

namespace minf {

namespace {

RealVector ascending_eigs(const RealMatrix& sym) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
  return solver.eigenvalues();
}

}  // namespace

double pure_min(const SchmidtDecomposition& sd) {
  return 1.0 - sd.coefficients.array().square().sum();
}

ClosedFormIntermediates closed_form_intermediates(
    const BlochDecomposition& bloch, const OperatorBasis& basis_a,
    const ProjectiveMeasurement& pi) {
  const int m = basis_a.dim;
  const int m2 = m * m;
  ClosedFormIntermediates out;
  out.coefficients.resize(m, m2);
  for (int k = 0; k < m; ++k) {
    const ComplexVector v = pi.vectors.col(k);
    for (int i = 0; i < m2; ++i)
      out.coefficients(k, i) = (v.adjoint() * basis_a.elements[i] * v)(0).real();
  }
  const RealMatrix gg = bloch.gamma * bloch.gamma.transpose();
  const RealMatrix reduced = bloch.reduced();
  out.mu_full = ascending_eigs(gg);
  out.mu_reduced = ascending_eigs(reduced * reduced.transpose());
  out.epsilon =
      (out.coefficients * gg * out.coefficients.transpose()).trace();
  out.gamma_norm_sq = bloch.gamma.squaredNorm();
  return out;
}

Thm2Bound bound_thm2_details(const BlochDecomposition& bloch, int m) {
  const double norm_sq = bloch.gamma.squaredNorm();
  const RealMatrix reduced = bloch.reduced();
  const RealVector mu_reduced =
      ascending_eigs(reduced * reduced.transpose());
  const RealVector mu_full =
      ascending_eigs(bloch.gamma * bloch.gamma.transpose());
  Thm2Bound out;
  // keep everything above the m-1 smallest
  out.bound = mu_reduced.tail(mu_reduced.size() - (m - 1)).sum() / norm_sq;
  // the same index window i = m .. m^2-1 read against the full spectrum
  out.full_reading =
      mu_full.segment(m - 1, mu_full.size() - m).sum() / norm_sq;
  return out;
}

double bound_thm2(const BlochDecomposition& bloch, int m) {
  return bound_thm2_details(bloch, m).bound;
}

MINResult min_2xn(const BipartiteState& state) {
  return min_2xn(state, gell_mann_basis(state.dim_a),
                 gell_mann_basis(state.dim_b));
}

MINResult min_2xn(const BipartiteState& state, const OperatorBasis& basis_a,
                  const OperatorBasis& basis_b) {
  if (state.dim_a != 2)
    throw std::invalid_argument("min_2xn: party a must have dimension 2");
  const BlochDecomposition bloch = decompose(state, basis_a, basis_b);
  const double norm_sq = bloch.gamma.squaredNorm();
  const RealMatrix reduced = bloch.reduced();
  const RealMatrix gg = reduced * reduced.transpose();  // 3 x 3
  const RealVector& x = bloch.bloch_a;

  MINResult result;
  result.method = "closed-2xn";
  RealVector direction(3);
  if (x.norm() <= kBlochZeroTol) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(gg);
    direction = solver.eigenvectors().col(0);
    result.value =
        (reduced.squaredNorm() - solver.eigenvalues()(0)) / norm_sq;
  } else {
    direction = x.normalized();
    result.value =
        (reduced.squaredNorm() - direction.dot(gg * direction)) / norm_sq;
  }
  // measurement basis: eigenvectors of the traceless direction operator
  ComplexMatrix op = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 3; ++i) op += direction(i) * basis_a.elements[i + 1];
  result.measurement = {hermitian_eig(op).eigenvectors};
  result.diagnostics.free_parameters = (x.norm() <= kBlochZeroTol) ? 4 : 0;
  return result;
}

double hs_min_closed_2xn(const BipartiteState& state) {
  if (state.dim_a != 2)
    throw std::invalid_argument(
        "hs_min_closed_2xn: party a must have dimension 2");
  const BlochDecomposition bloch = decompose(
      state, gell_mann_basis(2), gell_mann_basis(state.dim_b));
  const RealMatrix reduced = bloch.reduced();
  const RealMatrix gg = reduced * reduced.transpose();
  const RealVector& x = bloch.bloch_a;
  if (x.norm() <= kBlochZeroTol)
    return reduced.squaredNorm() - ascending_eigs(gg)(0);
  const RealVector u = x.normalized();
  return reduced.squaredNorm() - u.dot(gg * u);
}

double isotropic_min_formula(int m, double x) {
  if (m < 2) throw std::invalid_argument("isotropic_min_formula: m < 2");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("isotropic_min_formula: x outside [0,1]");
  const double md = m;
  const double num = (md * md * x - 1.0) * (md * md * x - 1.0) / md;
  const double den = md * (1.0 - x) * (1.0 - x) +
                     (md - 1.0) / md * (1.0 + md * x) * (1.0 + md * x) + num;
  return num / den;
}

double werner_min_formula(int m, double x) {
  if (m < 2) throw std::invalid_argument("werner_min_formula: m < 2");
  if (x < -1.0 || x > 1.0)
    throw std::invalid_argument("werner_min_formula: x outside [-1,1]");
  // With a = (m-x)/(m^3-m), b = (mx-1)/(m^3-m) the state is a*I + b*F and
  // every admissible basis gives tr(omega Pi(omega)) = a^2 m^2 + 2abm + mb^2,
  // so N = b^2 (m-1) / (a^2 m + 2ab + b^2 m); the (m^3-m)^2 factors cancel.
  const double md = m;
  const double num = (md - 1.0) * (md * x - 1.0) * (md * x - 1.0);
  const double den = md * (md - x) * (md - x) +
                     2.0 * (md - x) * (md * x - 1.0) +
                     md * (md * x - 1.0) * (md * x - 1.0);
  return num / den;
}

}  // namespace minf

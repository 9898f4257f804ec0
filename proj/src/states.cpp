#include "minf/states.hpp"

#include <cmath>
#include <random>

namespace minf {

namespace {

void validate_density_matrix(const ComplexMatrix& rho, const char* who) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument(std::string(who) + ": matrix not square");
  if (!rho.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  const double scale = std::max(rho.norm(), 1.0);
  if ((rho - rho.adjoint()).norm() > kAlgebraicTol * scale)
    throw std::invalid_argument(std::string(who) + ": not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kAlgebraicTol)
    throw std::invalid_argument(std::string(who) + ": trace not 1");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      0.5 * (rho + rho.adjoint()));
  if (solver.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument(std::string(who) +
                                ": not positive semidefinite");
}

}  // namespace

BipartiteState BipartiteState::create(int m, int n, ComplexMatrix matrix) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("BipartiteState: invalid dimensions");
  if (matrix.rows() != static_cast<Eigen::Index>(m) * n)
    throw std::invalid_argument("BipartiteState: matrix/dims mismatch");
  validate_density_matrix(matrix, "BipartiteState");
  return {m, n, std::move(matrix)};
}

OperatorBasis gell_mann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: d < 2");
  OperatorBasis basis;
  basis.dim = d;
  basis.elements.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(double(d)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // symmetric
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(j, k) = inv_sqrt2;
      e(k, j) = inv_sqrt2;
      basis.elements.push_back(e);
    }
  // antisymmetric
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(j, k) = Complex(0, -inv_sqrt2);
      e(k, j) = Complex(0, inv_sqrt2);
      basis.elements.push_back(e);
    }
  // diagonal
  for (int l = 1; l < d; ++l) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
    for (int j = 0; j < l; ++j) e(j, j) = norm;
    e(l, l) = -double(l) * norm;
    basis.elements.push_back(e);
  }
  return basis;
}

BlochDecomposition decompose(const BipartiteState& state,
                             const OperatorBasis& basis_a,
                             const OperatorBasis& basis_b) {
  if (basis_a.dim != state.dim_a || basis_b.dim != state.dim_b)
    throw std::invalid_argument("decompose: basis/state dimension mismatch");
  const int m2 = state.dim_a * state.dim_a;
  const int n2 = state.dim_b * state.dim_b;
  BlochDecomposition out;
  out.gamma.resize(m2, n2);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < n2; ++j) {
      const Complex g = hs_inner(
          tensor_product(basis_a.elements[i], basis_b.elements[j]), state.rho);
      out.gamma(i, j) = g.real();
    }
  out.bloch_a.resize(m2 - 1);
  const double sqrt_n = std::sqrt(double(state.dim_b));
  for (int i = 1; i < m2; ++i) out.bloch_a(i - 1) = sqrt_n * out.gamma(i, 0);
  return out;
}

SchmidtDecomposition schmidt(const ComplexVector& psi, int m, int n) {
  if (psi.size() != static_cast<Eigen::Index>(m) * n)
    throw std::invalid_argument("schmidt: vector/dims mismatch");
  if (std::abs(psi.norm() - 1.0) > kAlgebraicTol)
    throw std::invalid_argument("schmidt: state vector not normalized");
  ComplexMatrix mat(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) mat(i, j) = psi(i * n + j);
  Eigen::JacobiSVD<ComplexMatrix> svd(
      mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues().array().square();
  out.left = svd.matrixU();
  out.right = svd.matrixV().conjugate();
  return out;
}

BipartiteState isotropic_state(int m, double x) {
  if (m < 2) throw std::invalid_argument("isotropic_state: m < 2");
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("isotropic_state: x outside [0,1]");
  const int d = m * m;
  ComplexVector psi = ComplexVector::Zero(d);
  for (int i = 0; i < m; ++i) psi(i * m + i) = 1.0 / std::sqrt(double(m));
  ComplexMatrix rho =
      ((1.0 - x) / (d - 1)) * ComplexMatrix::Identity(d, d) +
      ((d * x - 1.0) / (d - 1)) * (psi * psi.adjoint());
  return BipartiteState::create(m, m, std::move(rho));
}

BipartiteState werner_state(int m, double x) {
  if (m < 2) throw std::invalid_argument("werner_state: m < 2");
  if (x < -1.0 || x > 1.0)
    throw std::invalid_argument("werner_state: x outside [-1,1]");
  const int d = m * m;
  ComplexMatrix flip = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) flip(a * m + b, b * m + a) = 1.0;
  const double denom = double(m) * m * m - m;
  ComplexMatrix rho = ((m - x) / denom) * ComplexMatrix::Identity(d, d) +
                      ((m * x - 1.0) / denom) * flip;
  return BipartiteState::create(m, m, std::move(rho));
}

BipartiteState random_state(int m, int n, int rank, std::uint64_t seed) {
  const int d = m * n;
  if (rank < 1 || rank > d)
    throw std::invalid_argument("random_state: invalid rank");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return BipartiteState::create(m, n, std::move(rho));
}

BipartiteState append_ancilla(const BipartiteState& state,
                              const ComplexMatrix& rho_c) {
  validate_density_matrix(rho_c, "append_ancilla");
  ComplexMatrix joint = tensor_product(state.rho, rho_c);
  return BipartiteState::create(
      state.dim_a, state.dim_b * static_cast<int>(rho_c.rows()),
      std::move(joint));
}

BipartiteState classical_quantum_state(
    const std::vector<double>& probs,
    const std::vector<ComplexMatrix>& blocks) {
  if (probs.empty() || probs.size() != blocks.size())
    throw std::invalid_argument("classical_quantum_state: size mismatch");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0)
      throw std::invalid_argument(
          "classical_quantum_state: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kAlgebraicTol)
    throw std::invalid_argument(
        "classical_quantum_state: probabilities do not sum to 1");
  const int m = static_cast<int>(probs.size());
  const int n = static_cast<int>(blocks[0].rows());
  ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
  for (int i = 0; i < m; ++i) {
    if (blocks[i].rows() != n || blocks[i].cols() != n)
      throw std::invalid_argument(
          "classical_quantum_state: block dimension mismatch");
    validate_density_matrix(blocks[i], "classical_quantum_state");
    rho.block(i * n, i * n, n, n) = probs[i] * blocks[i];
  }
  return BipartiteState::create(m, n, std::move(rho));
}

ComplexVector random_pure_vector(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
  psi.normalize();
  return psi;
}

}  // namespace minf

#pragma once

#include <cstdint>
#include <vector>

#include "minf/qlin.hpp"

namespace minf {

// Tolerance on the smallest eigenvalue when validating positivity.
inline constexpr double kPsdTol = 1e-10;

/// Bipartite density matrix with subsystem dimensions (m, n). Party a is the
/// slower-varying (outer) tensor index. Construction validates Hermiticity,
/// unit trace and positivity; invalid inputs are rejected, never projected.
struct BipartiteState {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix rho;

  static BipartiteState create(int m, int n, ComplexMatrix matrix);

  int dim() const { return dim_a * dim_b; }
  ComplexMatrix marginal_a() const {
    return partial_trace(rho, dim_a, dim_b, Subsystem::A);
  }
  ComplexMatrix marginal_b() const {
    return partial_trace(rho, dim_a, dim_b, Subsystem::B);
  }
};

struct SchmidtDecomposition {
  RealVector coefficients;  // lambda_i, descending, sum 1
  ComplexMatrix left;       // columns |alpha_i>
  ComplexMatrix right;      // columns |beta_i>
};

/// Orthonormal Hermitian operator basis; element 0 is I/sqrt(d).
struct OperatorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> elements;
};

/// Correlation matrix of a state over a product of operator bases,
/// gamma_ij = tr(rho X_i (x) Y_j), together with the Bloch vector of the
/// a-marginal over the traceless elements X_1..X_{m^2-1}.
struct BlochDecomposition {
  RealMatrix gamma;    // m^2 x n^2
  RealVector bloch_a;  // length m^2 - 1, x_i = sqrt(n) * gamma(i, 0)

  /// Gamma without the identity row (rows 1..m^2-1).
  RealMatrix reduced() const {
    return gamma.bottomRows(gamma.rows() - 1);
  }
};

/// Generalized Gell-Mann matrices at unit Hilbert-Schmidt norm, prefixed by
/// I/sqrt(d); order is symmetric, antisymmetric, diagonal.
OperatorBasis gell_mann_basis(int d);

BlochDecomposition decompose(const BipartiteState& state,
                             const OperatorBasis& basis_a,
                             const OperatorBasis& basis_b);

SchmidtDecomposition schmidt(const ComplexVector& psi, int m, int n);

/// (1-x)/(m^2-1) I + (m^2 x - 1)/(m^2-1) |Psi+><Psi+|, x in [0,1].
BipartiteState isotropic_state(int m, double x);

/// (m-x)/(m^3-m) I + (m x - 1)/(m^3-m) F with F the flip operator,
/// x in [-1,1].
BipartiteState werner_state(int m, double x);

/// G G^dag / tr(G G^dag) with G an (m*n) x rank standard complex Ginibre
/// matrix drawn from std::mt19937_64(seed).
BipartiteState random_state(int m, int n, int rank, std::uint64_t seed);

/// rho (x) rho_c regarded as a state with partition a : bc.
BipartiteState append_ancilla(const BipartiteState& state,
                              const ComplexMatrix& rho_c);

/// sum_i p_i |i><i| (x) rho_i in the computational basis of party a.
BipartiteState classical_quantum_state(
    const std::vector<double>& probs,
    const std::vector<ComplexMatrix>& blocks);

/// Haar-random state vector of the given dimension.
ComplexVector random_pure_vector(int dim, std::uint64_t seed);

}  // namespace minf

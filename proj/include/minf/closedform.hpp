#pragma once

#include "minf/measure.hpp"

namespace minf {

// ||x|| at or below this routes the 2xn closed form to the degenerate branch,
// matching the measure module's clustering tolerance.
inline constexpr double kBlochZeroTol = 1e-8;

/// Coefficient machinery behind the bound and the 2xn formula, surfaced for
/// diagnostics: A has rows a_ki = tr(|k><k| X_i) for a measurement basis.
struct ClosedFormIntermediates {
  RealMatrix coefficients;   // A, m x m^2
  RealVector mu_reduced;     // ascending eigenvalues of Gtilde Gtilde^t
  RealVector mu_full;        // ascending eigenvalues of Gamma Gamma^t
  double epsilon = 0.0;      // tr(A Gamma Gamma^t A^t)
  double gamma_norm_sq = 0.0;
};

ClosedFormIntermediates closed_form_intermediates(
    const BlochDecomposition& bloch, const OperatorBasis& basis_a,
    const ProjectiveMeasurement& pi);

/// Theorem-2 style bound evaluated on both eigenvalue-index readings.
struct Thm2Bound {
  double bound = 0.0;         // reduced-block reading, the one reported
  double full_reading = 0.0;  // same index window applied to Gamma Gamma^t
};

/// 1 - sum lambda_i^2 for a pure bipartite state.
double pure_min(const SchmidtDecomposition& sd);

/// Upper bound on the fidelity MIN: the eigenvalues of Gtilde Gtilde^t
/// (Gamma without the identity row) with the m-1 smallest removed, divided
/// by ||Gamma||^2.
double bound_thm2(const BlochDecomposition& bloch, int m);
Thm2Bound bound_thm2_details(const BlochDecomposition& bloch, int m);

/// Exact fidelity MIN for 2 x n states via the correlation-matrix formula;
/// branches on whether the a-marginal Bloch vector vanishes.
MINResult min_2xn(const BipartiteState& state);
MINResult min_2xn(const BipartiteState& state, const OperatorBasis& basis_a,
                  const OperatorBasis& basis_b);

/// Closed 2 x n Hilbert-Schmidt MIN (same minimizing measurement).
double hs_min_closed_2xn(const BipartiteState& state);

/// Analytic fidelity MIN of the m x m isotropic state, x in [0,1].
double isotropic_min_formula(int m, double x);

/// Analytic fidelity MIN of the m x m Werner state, x in [-1,1].
double werner_min_formula(int m, double x);

}  // namespace minf

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minf/states.hpp"

namespace minf {

// Absolute gap tolerance used when clustering eigenvalues of the a-marginal.
inline constexpr double kDegeneracyTol = 1e-8;

/// Rank-1 orthonormal von Neumann measurement on party a; columns are the
/// measurement basis vectors.
struct ProjectiveMeasurement {
  ComplexMatrix vectors;

  int dim() const { return static_cast<int>(vectors.rows()); }
};

struct EigenCluster {
  double value = 0.0;       // representative eigenvalue of rho^a
  ComplexMatrix vectors;    // m x d_j eigenvector block, orthonormal columns
  int multiplicity() const { return static_cast<int>(vectors.cols()); }
};

/// Family of measurements leaving the a-marginal invariant: every basis
/// vector lies inside a single eigenspace (cluster) of rho^a. Clusters are
/// ordered by descending eigenvalue.
struct InvariantMeasurementFamily {
  std::vector<EigenCluster> clusters;
  double degeneracy_tol = kDegeneracyTol;

  int dim() const;
  /// sum of d_j^2 over clusters with d_j >= 2
  int free_parameters() const;
  /// The reference measurement built from the cluster eigenbases.
  ProjectiveMeasurement reference_measurement() const;
};

struct OptimizerSettings {
  int restarts = 24;
  int max_iterations = 500;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  int oracle_samples = 20000;
  double degeneracy_tol = kDegeneracyTol;
};

struct MINDiagnostics {
  std::vector<double> restart_values;
  std::vector<int> cluster_sizes;
  int free_parameters = 0;
  bool converged = true;
};

struct MINResult {
  double value = 0.0;
  ProjectiveMeasurement measurement;
  std::string method;
  MINDiagnostics diagnostics;
};

/// Superfidelity F(rho, sigma) = (tr(rho sigma))^2 / (tr(rho^2) tr(sigma^2)).
double superfidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// C^2(rho, sigma) = 1 - F(rho, sigma).
double sine_metric_sq(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Pi(rho) = sum_k (Pi_k (x) 1) rho (Pi_k (x) 1).
BipartiteState apply_channel(const BipartiteState& state,
                             const ProjectiveMeasurement& pi);

/// tr(rho Pi(rho)) without forming the post-measurement state; equals
/// tr(Pi(rho)^2) by the conditional-expectation identity.
double post_measurement_overlap(const BipartiteState& state,
                                const ProjectiveMeasurement& pi);

InvariantMeasurementFamily invariant_family(
    const BipartiteState& state, double degeneracy_tol = kDegeneracyTol);

/// Objective evaluated on the post-measurement pair (rho, Pi).
using PostMeasurementObjective =
    std::function<double(const BipartiteState&, const ProjectiveMeasurement&)>;

/// Extremum of the objective over the marginal-invariant measurement family.
/// Exact single evaluation when the family has no free parameters; otherwise
/// seeded multi-restart optimization.
MINResult min_generic(const BipartiteState& state,
                      const PostMeasurementObjective& objective, bool maximize,
                      const OptimizerSettings& opts = {});

/// Fidelity-based MIN, eq-(2) style: max over the family of C^2(rho, Pi(rho)).
MINResult min_fidelity(const BipartiteState& state,
                       const OptimizerSettings& opts = {});

/// Hilbert-Schmidt MIN: max over the family of ||rho - Pi(rho)||_F^2.
/// Not normalized to [0,1].
MINResult min_hs(const BipartiteState& state, const OptimizerSettings& opts = {});

/// Deterministic gauge for reporting measurements: vectors grouped by
/// descending eigenvalue cluster, ordered inside a cluster by the index of
/// their largest-magnitude component, first nonzero component real positive.
ProjectiveMeasurement canonicalize_measurement(const ProjectiveMeasurement& pi,
                                               const InvariantMeasurementFamily& family);

}  // namespace minf

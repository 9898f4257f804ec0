#pragma once

#include <random>

#include "minf/measure.hpp"

namespace minf {

/// Deterministic 64-bit mixer for deriving per-restart / per-sample RNG
/// streams from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// One point of the search space: a unitary per degenerate cluster of the
/// family (clusters of multiplicity 1 contribute nothing).
struct BlockUnitaryPoint {
  std::vector<ComplexMatrix> blocks;  // one per cluster with d_j >= 2, in order
};

/// Measurement induced by rotating each degenerate cluster's reference
/// eigenbasis by its block unitary.
ProjectiveMeasurement measurement_from_point(
    const InvariantMeasurementFamily& family, const BlockUnitaryPoint& point);

/// Haar-distributed unitary via QR of a complex Ginibre matrix with the
/// R diagonal phases absorbed.
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);

BlockUnitaryPoint haar_block_sample(const InvariantMeasurementFamily& family,
                                    std::uint64_t seed);

/// Objective over block-unitary points, to be maximized.
using PointObjective = std::function<double(const BlockUnitaryPoint&)>;

struct RefineResult {
  BlockUnitaryPoint point;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free ascent: random anti-Hermitian perturbations per block,
/// exponentiated with an adaptive step size. Monotone nonworsening.
RefineResult local_refine(const PointObjective& objective,
                          BlockUnitaryPoint start,
                          const OptimizerSettings& settings,
                          std::uint64_t stream);

struct ExtremizeResult {
  double value = 0.0;
  BlockUnitaryPoint point;
  std::vector<double> restart_values;
  bool converged = true;
};

/// Best of restarts x (haar_block_sample -> local_refine); deterministic given
/// the seed, ties resolved by lowest restart index.
ExtremizeResult extremize(const PointObjective& objective,
                          const InvariantMeasurementFamily& family,
                          const OptimizerSettings& settings);

/// Brute-force oracle: best objective over `oracle_samples` Haar samples,
/// no refinement.
double oracle_sample(const PointObjective& objective,
                     const InvariantMeasurementFamily& family,
                     const OptimizerSettings& settings);

}  // namespace minf

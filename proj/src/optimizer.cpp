#include "minf/optimizer.hpp"

#include <cmath>

namespace minf {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer on the combined word
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ProjectiveMeasurement measurement_from_point(
    const InvariantMeasurementFamily& family, const BlockUnitaryPoint& point) {
  const int m = family.dim();
  ComplexMatrix vectors(m, m);
  int col = 0;
  std::size_t block_idx = 0;
  for (const auto& cluster : family.clusters) {
    const int d = cluster.multiplicity();
    if (d >= 2) {
      if (block_idx >= point.blocks.size())
        throw std::invalid_argument("measurement_from_point: missing block");
      vectors.middleCols(col, d) = cluster.vectors * point.blocks[block_idx];
      ++block_idx;
    } else {
      vectors.middleCols(col, d) = cluster.vectors;
    }
    col += d;
  }
  return {std::move(vectors)};
}

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0) ? rjj / mag : Complex(1, 0);
  }
  return q;
}

BlockUnitaryPoint haar_block_sample(const InvariantMeasurementFamily& family,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BlockUnitaryPoint point;
  for (const auto& cluster : family.clusters) {
    const int d = cluster.multiplicity();
    if (d >= 2) point.blocks.push_back(haar_unitary(d, rng));
  }
  return point;
}

namespace {

// exp(t * G) for anti-Hermitian G, through the Hermitian eigenproblem of iG.
ComplexMatrix unitary_exp(const ComplexMatrix& g, double t) {
  const ComplexMatrix herm = Complex(0, 1) * g;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  const ComplexMatrix& v = solver.eigenvectors();
  ComplexVector phases(herm.rows());
  for (Eigen::Index k = 0; k < herm.rows(); ++k)
    phases(k) = std::exp(Complex(0, -t * solver.eigenvalues()(k)));
  return v * phases.asDiagonal() * v.adjoint();
}

ComplexMatrix random_antihermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix g = 0.5 * (h - h.adjoint());
  const double norm = g.norm();
  if (norm > 0) g /= norm;
  return g;
}

double checked(const PointObjective& objective, const BlockUnitaryPoint& p) {
  const double v = objective(p);
  if (!std::isfinite(v))
    throw std::runtime_error("optimizer: objective returned non-finite value");
  return v;
}

}  // namespace

RefineResult local_refine(const PointObjective& objective,
                          BlockUnitaryPoint start,
                          const OptimizerSettings& settings,
                          std::uint64_t stream) {
  RefineResult out;
  out.value = checked(objective, start);
  out.point = std::move(start);
  if (out.point.blocks.empty()) {
    out.converged = true;
    return out;
  }
  std::mt19937_64 rng(stream);
  double step = 0.5;
  const double step_floor = 1e-10;
  for (int it = 0; it < settings.max_iterations; ++it) {
    out.iterations = it + 1;
    BlockUnitaryPoint trial = out.point;
    for (auto& u : trial.blocks) {
      const int d = static_cast<int>(u.rows());
      u = u * unitary_exp(random_antihermitian(d, rng), step);
    }
    const double v = checked(objective, trial);
    if (v > out.value) {
      out.point = std::move(trial);
      out.value = v;
      step = std::min(step * 1.4, 1.0);
    } else {
      step *= 0.8;
    }
    if (step < step_floor) {
      out.converged = true;
      break;
    }
  }
  return out;
}

ExtremizeResult extremize(const PointObjective& objective,
                          const InvariantMeasurementFamily& family,
                          const OptimizerSettings& settings) {
  if (settings.restarts < 1 || settings.max_iterations < 1 ||
      settings.tolerance <= 0)
    throw std::invalid_argument("extremize: invalid settings");
  ExtremizeResult out;
  if (family.free_parameters() == 0) {
    BlockUnitaryPoint point;  // reference measurement, nothing to search
    out.value = checked(objective, point);
    out.point = std::move(point);
    out.restart_values = {out.value};
    out.converged = true;
    return out;
  }
  bool first = true;
  out.converged = true;
  for (int r = 0; r < settings.restarts; ++r) {
    const std::uint64_t sr = mix_seed(settings.seed, r);
    BlockUnitaryPoint start = haar_block_sample(family, sr);
    RefineResult refined =
        local_refine(objective, std::move(start), settings, mix_seed(sr, 1));
    out.restart_values.push_back(refined.value);
    if (!refined.converged) out.converged = false;
    if (first || refined.value > out.value) {
      out.value = refined.value;
      out.point = std::move(refined.point);
      first = false;
    }
  }
  return out;
}

double oracle_sample(const PointObjective& objective,
                     const InvariantMeasurementFamily& family,
                     const OptimizerSettings& settings) {
  if (family.free_parameters() == 0) {
    BlockUnitaryPoint point;
    return checked(objective, point);
  }
  bool first = true;
  double best = 0.0;
  for (int i = 0; i < settings.oracle_samples; ++i) {
    BlockUnitaryPoint p = haar_block_sample(family, mix_seed(settings.seed, i));
    const double v = checked(objective, p);
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

}  // namespace minf

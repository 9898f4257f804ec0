#include "minf/measure.hpp"

#include <algorithm>
#include <cmath>

#include "minf/optimizer.hpp"

namespace minf {

namespace {

void check_measurement(const BipartiteState& state,
                       const ProjectiveMeasurement& pi) {
  if (pi.vectors.rows() != state.dim_a || pi.vectors.cols() != state.dim_a)
    throw std::invalid_argument("measurement dimension mismatch");
}

// n x n conditional block M_k = (<k| (x) 1) rho (|k> (x) 1)
ComplexMatrix conditional_block(const BipartiteState& state,
                                const ComplexVector& k) {
  const int m = state.dim_a, n = state.dim_b;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Complex w = std::conj(k(i)) * k(j);
      if (w != Complex(0, 0))
        out += w * state.rho.block(i * n, j * n, n, n);
    }
  return out;
}

}  // namespace

int InvariantMeasurementFamily::dim() const {
  int d = 0;
  for (const auto& c : clusters) d += c.multiplicity();
  return d;
}

int InvariantMeasurementFamily::free_parameters() const {
  int p = 0;
  for (const auto& c : clusters) {
    const int d = c.multiplicity();
    if (d >= 2) p += d * d;
  }
  return p;
}

ProjectiveMeasurement InvariantMeasurementFamily::reference_measurement()
    const {
  const int m = dim();
  ComplexMatrix vectors(m, m);
  int col = 0;
  for (const auto& c : clusters) {
    vectors.middleCols(col, c.multiplicity()) = c.vectors;
    col += c.multiplicity();
  }
  return {std::move(vectors)};
}

double superfidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("superfidelity: dimension mismatch");
  const double overlap = hs_inner(rho, sigma).real();
  return overlap * overlap / (purity(rho) * purity(sigma));
}

double sine_metric_sq(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  return 1.0 - superfidelity(rho, sigma);
}

BipartiteState apply_channel(const BipartiteState& state,
                             const ProjectiveMeasurement& pi) {
  check_measurement(state, pi);
  const int m = state.dim_a, n = state.dim_b;
  ComplexMatrix out = ComplexMatrix::Zero(m * n, m * n);
  for (int k = 0; k < m; ++k) {
    const ComplexVector v = pi.vectors.col(k);
    const ComplexMatrix block = conditional_block(state, v);
    const ComplexMatrix proj = v * v.adjoint();
    out += tensor_product(proj, block);
  }
  return BipartiteState::create(m, n, std::move(out));
}

double post_measurement_overlap(const BipartiteState& state,
                                const ProjectiveMeasurement& pi) {
  check_measurement(state, pi);
  double total = 0.0;
  for (int k = 0; k < state.dim_a; ++k) {
    const ComplexMatrix block = conditional_block(state, pi.vectors.col(k));
    total += block.squaredNorm();  // tr(M_k^2), M_k Hermitian
  }
  return total;
}

InvariantMeasurementFamily invariant_family(const BipartiteState& state,
                                            double degeneracy_tol) {
  const HermitianEigenResult eig = hermitian_eig(state.marginal_a());
  const int m = state.dim_a;
  InvariantMeasurementFamily family;
  family.degeneracy_tol = degeneracy_tol;
  // chain-cluster the ascending spectrum, then emit descending
  std::vector<std::pair<int, int>> ranges;  // [begin, end)
  int begin = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m ||
        eig.eigenvalues(i) - eig.eigenvalues(i - 1) > degeneracy_tol) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }
  for (auto it = ranges.rbegin(); it != ranges.rend(); ++it) {
    EigenCluster cluster;
    const int d = it->second - it->first;
    cluster.value = eig.eigenvalues.segment(it->first, d).mean();
    cluster.vectors = eig.eigenvectors.middleCols(it->first, d);
    family.clusters.push_back(std::move(cluster));
  }
  return family;
}

ProjectiveMeasurement canonicalize_measurement(
    const ProjectiveMeasurement& pi, const InvariantMeasurementFamily& family) {
  const int m = pi.dim();
  // assign each vector to the cluster whose eigenspace contains it
  std::vector<std::vector<int>> members(family.clusters.size());
  for (int k = 0; k < m; ++k) {
    double best = -1.0;
    std::size_t best_c = 0;
    for (std::size_t c = 0; c < family.clusters.size(); ++c) {
      const double w =
          (family.clusters[c].vectors.adjoint() * pi.vectors.col(k))
              .squaredNorm();
      if (w > best) {
        best = w;
        best_c = c;
      }
    }
    members[best_c].push_back(k);
  }
  ComplexMatrix out(m, m);
  int col = 0;
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::sort(members[c].begin(), members[c].end(), [&](int a, int b) {
      Eigen::Index ia, ib;
      pi.vectors.col(a).cwiseAbs().maxCoeff(&ia);
      pi.vectors.col(b).cwiseAbs().maxCoeff(&ib);
      if (ia != ib) return ia < ib;
      return a < b;
    });
    for (int k : members[c]) {
      ComplexVector v = pi.vectors.col(k);
      for (int i = 0; i < m; ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-12) {
          v *= std::conj(v(i)) / mag;
          break;
        }
      }
      out.col(col++) = v;
    }
  }
  return {std::move(out)};
}

MINResult min_generic(const BipartiteState& state,
                      const PostMeasurementObjective& objective, bool maximize,
                      const OptimizerSettings& opts) {
  const InvariantMeasurementFamily family =
      invariant_family(state, opts.degeneracy_tol);
  const double sign = maximize ? 1.0 : -1.0;
  const PointObjective point_objective = [&](const BlockUnitaryPoint& p) {
    return sign * objective(state, measurement_from_point(family, p));
  };
  const ExtremizeResult best = extremize(point_objective, family, opts);

  MINResult result;
  result.value = sign * best.value;
  result.measurement = canonicalize_measurement(
      measurement_from_point(family, best.point), family);
  result.diagnostics.free_parameters = family.free_parameters();
  for (const auto& c : family.clusters)
    result.diagnostics.cluster_sizes.push_back(c.multiplicity());
  for (double v : best.restart_values)
    result.diagnostics.restart_values.push_back(sign * v);
  result.diagnostics.converged = best.converged;
  return result;
}

MINResult min_fidelity(const BipartiteState& state,
                       const OptimizerSettings& opts) {
  const double state_purity = purity(state.rho);
  // F(rho, Pi(rho)) = tr(rho Pi(rho)) / tr(rho^2); maximize 1 - F
  MINResult result = min_generic(
      state,
      [state_purity](const BipartiteState& rho,
                     const ProjectiveMeasurement& pi) {
        return 1.0 - post_measurement_overlap(rho, pi) / state_purity;
      },
      /*maximize=*/true, opts);
  result.method = "direct";
  return result;
}

MINResult min_hs(const BipartiteState& state, const OptimizerSettings& opts) {
  const double state_purity = purity(state.rho);
  // ||rho - Pi(rho)||^2 = tr(rho^2) - tr(rho Pi(rho))
  MINResult result = min_generic(
      state,
      [state_purity](const BipartiteState& rho,
                     const ProjectiveMeasurement& pi) {
        return state_purity - post_measurement_overlap(rho, pi);
      },
      /*maximize=*/true, opts);
  result.method = "direct-hs";
  return result;
}

}  // namespace minf

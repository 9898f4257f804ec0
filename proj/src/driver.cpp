#include "minf/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "minf/optimizer.hpp"

namespace minf {

namespace {

OptimizerSettings with_seed(OptimizerSettings opts, std::uint64_t seed) {
  opts.seed = seed;
  return opts;
}

ComplexMatrix random_density(int d, int rank, std::uint64_t seed) {
  return random_state(1, d, rank, seed).rho;
}

// Pauli twirl on party a of a 2 x n state; forces the a-marginal to I/2.
BipartiteState twirl_a(const BipartiteState& state) {
  const int n = state.dim_b;
  std::vector<ComplexMatrix> paulis;
  paulis.push_back(ComplexMatrix::Identity(2, 2));
  ComplexMatrix p(2, 2);
  p << 0, 1, 1, 0;
  paulis.push_back(p);
  p << 0, Complex(0, -1), Complex(0, 1), 0;
  paulis.push_back(p);
  p << 1, 0, 0, -1;
  paulis.push_back(p);
  ComplexMatrix rho = ComplexMatrix::Zero(2 * n, 2 * n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  for (const auto& pauli : paulis) {
    const ComplexMatrix lift = tensor_product(pauli, id);
    rho += 0.25 * lift * state.rho * lift.adjoint();
  }
  return BipartiteState::create(2, n, std::move(rho));
}

}  // namespace

std::vector<SweepRow> run_sweep(const std::string& family, int m, int points,
                                const SweepOptions& opts) {
  if (m < 2) throw std::invalid_argument("run_sweep: m < 2");
  if (points < 2) throw std::invalid_argument("run_sweep: points < 2");
  double lo, hi, vanish;
  const bool werner = family == "werner";
  if (werner) {
    lo = -1.0;
    hi = 1.0;
    vanish = 1.0 / m;
  } else if (family == "isotropic") {
    lo = 0.0;
    hi = 1.0;
    vanish = 1.0 / (double(m) * m);
  } else {
    throw std::invalid_argument("run_sweep: unknown family " + family);
  }

  std::vector<double> grid;
  for (int i = 0; i < points; ++i)
    grid.push_back(lo + (hi - lo) * i / (points - 1));
  grid.push_back(vanish);  // the paper's vanishing claim is checked exactly
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-15; }),
             grid.end());

  const OperatorBasis basis_a = gell_mann_basis(m);
  const OperatorBasis basis_b = gell_mann_basis(m);
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const BipartiteState state =
        werner ? werner_state(m, x) : isotropic_state(m, x);
    SweepRow row;
    row.family = family;
    row.m = m;
    row.x = x;
    const OptimizerSettings row_opts =
        with_seed(opts.optimizer, mix_seed(opts.optimizer.seed, i));
    if (opts.fidelity) {
      row.min_f = werner ? werner_min_formula(m, x)
                         : isotropic_min_formula(m, x);
      row.method_f = "formula";
      const MINResult direct = min_fidelity(state, row_opts);
      if (std::abs(direct.value - row.min_f) > opts.cross_check_tol)
        throw std::runtime_error(
            "run_sweep: closed form and direct optimizer disagree at x=" +
            std::to_string(x));
    }
    if (opts.hilbert_schmidt) {
      if (m == 2) {
        row.min_hs = hs_min_closed_2xn(state);
        row.method_hs = "closed-2xn";
      } else {
        row.min_hs = min_hs(state, row_opts).value;
        row.method_hs = "direct";
      }
    }
    row.bound = bound_thm2(decompose(state, basis_a, basis_b), m);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "nan";
  if (v == 0.0) return "0";
  const double a = std::abs(v);
  char buf[64];
  if (a < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.11e", v);
  } else {
    const int digits_before = (a < 1.0) ? 0 : int(std::floor(std::log10(a))) + 1;
    const int prec = std::max(0, 12 - digits_before);
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  }
  return buf;
}

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows,
                     const SweepOptions& opts) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << "family,m,x,N_F,N_HS,bound\n";
    for (const auto& row : rows) {
      out << row.family << ',' << row.m << ',' << format_number(row.x) << ','
          << (opts.fidelity ? format_number(row.min_f) : std::string()) << ','
          << (opts.hilbert_schmidt ? format_number(row.min_hs) : std::string())
          << ',' << format_number(row.bound) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

VerifyReport run_verify(const std::string& suite, int trials,
                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_verify: trials < 1");
  VerifyReport report;
  report.trials = trials;

  auto record = [&](int t, double deviation, double tol) {
    const bool ok = deviation <= tol;
    if (!ok) ++report.failures;
    report.worst_deviation = std::max(report.worst_deviation, deviation);
    char buf[128];
    std::snprintf(buf, sizeof buf, "trial %03d: %s (deviation %.3e)", t,
                  ok ? "pass" : "FAIL", deviation);
    report.lines.emplace_back(buf);
  };

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = mix_seed(seed, t);
    const OptimizerSettings opts = with_seed({}, mix_seed(s, 100));
    if (suite == "pure") {
      std::mt19937_64 rng(s);
      const int m = 2 + int(rng() % 3), n = 2 + int(rng() % 3);
      const ComplexVector psi = random_pure_vector(m * n, mix_seed(s, 1));
      const BipartiteState state =
          BipartiteState::create(m, n, psi * psi.adjoint());
      const double closed = pure_min(schmidt(psi, m, n));
      const double direct = min_fidelity(state, opts).value;
      record(t, std::abs(closed - direct), 1e-6);
    } else if (suite == "twoxn") {
      std::mt19937_64 rng(s);
      const int n = 2 + int(rng() % 2);
      const int rank = 1 + int(rng() % (2 * n));
      BipartiteState state = random_state(2, n, rank, mix_seed(s, 1));
      if (t % 3 == 0) state = twirl_a(state);  // engineered x = 0
      const double closed = min_2xn(state).value;
      const double direct = min_fidelity(state, opts).value;
      record(t, std::abs(closed - direct), 1e-7);
    } else if (suite == "bound") {
      std::mt19937_64 rng(s);
      const int m = 2 + int(rng() % 2), n = 2 + int(rng() % 2);
      const int rank = 1 + int(rng() % (m * n));
      const BipartiteState state = random_state(m, n, rank, mix_seed(s, 1));
      const double direct = min_fidelity(state, opts).value;
      const double bound = bound_thm2(
          decompose(state, gell_mann_basis(m), gell_mann_basis(n)), m);
      record(t, direct - bound, 1e-9);
    } else if (suite == "ancilla") {
      const BipartiteState state = random_state(2, 2, 4, mix_seed(s, 1));
      const ComplexMatrix rho_c = random_density(2, 2, mix_seed(s, 2));
      const BipartiteState extended = append_ancilla(state, rho_c);
      const double base_f = min_fidelity(state, opts).value;
      const double ext_f = min_fidelity(extended, opts).value;
      const double base_hs = min_hs(state, opts).value;
      const double ext_hs = min_hs(extended, opts).value;
      const double dev =
          std::max(std::abs(ext_f - base_f),
                   std::abs(ext_hs - base_hs * purity(rho_c)));
      record(t, dev, 1e-7);
    } else if (suite == "unitary") {
      std::mt19937_64 rng(s);
      const int n = 2 + int(rng() % 2);
      const BipartiteState state =
          random_state(2, n, 2 * n, mix_seed(s, 1));
      std::mt19937_64 urng(mix_seed(s, 2));
      const ComplexMatrix rot =
          tensor_product(haar_unitary(2, urng), haar_unitary(n, urng));
      const BipartiteState rotated = BipartiteState::create(
          2, n, rot * state.rho * rot.adjoint());
      const double dev = std::abs(min_fidelity(rotated, opts).value -
                                  min_fidelity(state, opts).value);
      record(t, dev, 1e-7);
    } else if (suite == "nullity") {
      BipartiteState state = [&]() {
        if (t % 2 == 0) {
          const ComplexMatrix rho_a = random_density(2, 2, mix_seed(s, 1));
          const ComplexMatrix rho_b = random_density(3, 3, mix_seed(s, 2));
          return BipartiteState::create(2, 3, tensor_product(rho_a, rho_b));
        }
        // classical-quantum with strictly decreasing distinct probabilities
        std::mt19937_64 rng(mix_seed(s, 3));
        const double p = 0.55 + 0.35 * (double(rng() % 1000) / 1000.0);
        return classical_quantum_state(
            {p, 1.0 - p}, {random_density(2, 2, mix_seed(s, 4)),
                           random_density(2, 2, mix_seed(s, 5))});
      }();
      record(t, min_fidelity(state, opts).value, 1e-9);
    } else {
      throw std::invalid_argument("run_verify: unknown suite " + suite);
    }
  }
  return report;
}

}  // namespace minf

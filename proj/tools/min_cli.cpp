#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "minf/driver.hpp"
#include "minf/optimizer.hpp"
#include "minf/statefile.hpp"

namespace {

constexpr int kExitBadFile = 1;
constexpr int kExitBadFlags = 2;
constexpr int kExitInapplicable = 3;

void print_measurement(const minf::ProjectiveMeasurement& pi) {
  std::cout << "measurement basis (columns):\n";
  for (int i = 0; i < pi.dim(); ++i) {
    for (int k = 0; k < pi.dim(); ++k) {
      const auto v = pi.vectors(i, k);
      std::printf("  (%+.9f%+.9fi)", v.real(), v.imag());
    }
    std::cout << "\n";
  }
}

int run_compute(const std::string& state_path, const std::string& measure,
                std::string method, const minf::OptimizerSettings& opts,
                bool show_measurement) {
  minf::BipartiteState state = [&] {
    try {
      return minf::load_state_file(state_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::exit(kExitBadFile);
    }
  }();

  const bool is_pure = std::abs(minf::purity(state.rho) - 1.0) < 1e-9;
  if (method == "auto") {
    if (measure == "hs")
      method = (state.dim_a == 2) ? "closed-2xn" : "direct";
    else if (is_pure)
      method = "pure";
    else if (state.dim_a == 2)
      method = "closed-2xn";
    else
      method = "direct";
  }

  minf::MINResult result;
  if (method == "pure") {
    if (measure == "hs" || !is_pure) {
      std::cerr << "error: method=pure needs a pure state and the fidelity "
                   "measure\n";
      return kExitInapplicable;
    }
    const minf::HermitianEigenResult eig = minf::hermitian_eig(state.rho);
    const minf::ComplexVector psi =
        eig.eigenvectors.col(eig.eigenvalues.size() - 1);
    result.value = minf::pure_min(minf::schmidt(psi, state.dim_a, state.dim_b));
    result.method = "pure";
  } else if (method == "closed-2xn") {
    if (state.dim_a != 2) {
      std::cerr << "error: closed-2xn needs a 2 x n state (got m="
                << state.dim_a << ")\n";
      return kExitInapplicable;
    }
    if (measure == "hs") {
      result.value = minf::hs_min_closed_2xn(state);
      result.method = "closed-2xn";
    } else {
      result = minf::min_2xn(state);
    }
  } else if (method == "bound") {
    if (measure == "hs") {
      std::cerr << "error: the bound applies to the fidelity measure only\n";
      return kExitInapplicable;
    }
    result.value = minf::bound_thm2(
        minf::decompose(state, minf::gell_mann_basis(state.dim_a),
                        minf::gell_mann_basis(state.dim_b)),
        state.dim_a);
    result.method = "bound";
  } else {  // direct
    result = (measure == "hs") ? minf::min_hs(state, opts)
                               : minf::min_fidelity(state, opts);
  }

  std::cout << "value: " << minf::format_number(result.value) << "\n";
  std::cout << "method: " << result.method << "\n";
  if (!result.diagnostics.restart_values.empty()) {
    std::cout << "restarts: " << result.diagnostics.restart_values.size()
              << ", free parameters: " << result.diagnostics.free_parameters
              << ", converged: "
              << (result.diagnostics.converged ? "yes" : "no") << "\n";
  }
  if (method == "direct" && state.dim_a != 2 && measure != "hs") {
    const double bound = minf::bound_thm2(
        minf::decompose(state, minf::gell_mann_basis(state.dim_a),
                        minf::gell_mann_basis(state.dim_b)),
        state.dim_a);
    std::cout << "bound: " << minf::format_number(bound) << "\n";
  }
  if (show_measurement && result.measurement.vectors.size() > 0)
    print_measurement(result.measurement);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement-induced nonlocality of bipartite quantum states"};
  app.require_subcommand(1);

  minf::OptimizerSettings opts;

  // compute
  std::string state_path, measure = "fidelity", method = "auto";
  bool show_measurement = false;
  CLI::App* compute = app.add_subcommand(
      "compute", "Evaluate MIN for a state loaded from a JSON file");
  compute->add_option("state", state_path, "state file path")->required();
  compute->add_option("--measures,--measure", measure)
      ->check(CLI::IsMember({"fidelity", "hs"}));
  compute->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "direct", "closed-2xn", "pure", "bound"}));
  compute->add_option("--seed", opts.seed);
  compute->add_option("--restarts", opts.restarts)->check(CLI::PositiveNumber);
  compute->add_flag("--show-measurement", show_measurement);

  // sweep
  std::string family = "werner", out_path = "sweep.csv",
              measures_flag = "fidelity,hs";
  int m = 2, points = 101;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Family parameter sweep with CSV output");
  sweep->add_option("--family", family)
      ->check(CLI::IsMember({"werner", "isotropic"}));
  sweep->add_option("--m", m)->check(CLI::Range(2, 16));
  sweep->add_option("--points", points)->check(CLI::Range(2, 100000));
  sweep->add_option("--measures", measures_flag);
  sweep->add_option("--out", out_path);
  sweep->add_option("--seed", opts.seed);
  sweep->add_option("--restarts", opts.restarts)->check(CLI::PositiveNumber);

  // verify
  std::string suite = "pure";
  int trials = 100;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a randomized property suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"pure", "twoxn", "bound", "ancilla", "unitary", "nullity"}));
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", opts.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadFlags;
  }

  try {
    if (compute->parsed())
      return run_compute(state_path, measure, method, opts, show_measurement);

    if (sweep->parsed()) {
      minf::SweepOptions sweep_opts;
      sweep_opts.optimizer = opts;
      sweep_opts.fidelity =
          measures_flag.find("fidelity") != std::string::npos;
      sweep_opts.hilbert_schmidt = measures_flag.find("hs") != std::string::npos;
      if (!sweep_opts.fidelity && !sweep_opts.hilbert_schmidt) {
        std::cerr << "error: --measures selects neither fidelity nor hs\n";
        return kExitBadFlags;
      }
      const std::vector<minf::SweepRow> rows =
          minf::run_sweep(family, m, points, sweep_opts);
      minf::write_sweep_csv(out_path, rows, sweep_opts);
      std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const minf::VerifyReport report =
          minf::run_verify(suite, trials, opts.seed);
      for (const std::string& line : report.lines) std::cout << line << "\n";
      std::printf("%s: %d/%d passed, worst deviation %.3e\n", suite.c_str(),
                  report.trials - report.failures, report.trials,
                  report.worst_deviation);
      return report.failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitBadFlags;
}

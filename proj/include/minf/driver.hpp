#pragma once

#include <string>
#include <vector>

#include "minf/closedform.hpp"

namespace minf {

struct SweepRow {
  std::string family;
  int m = 0;
  double x = 0.0;
  double min_f = 0.0;   // fidelity MIN, closed form
  double min_hs = 0.0;  // Hilbert-Schmidt MIN
  double bound = 0.0;   // Theorem-2 style upper bound
  std::string method_f;
  std::string method_hs;
};

struct SweepOptions {
  bool fidelity = true;
  bool hilbert_schmidt = true;
  OptimizerSettings optimizer;
  // closed-form vs direct disagreement above this aborts the sweep
  double cross_check_tol = 1e-6;
};

/// Uniform grid over the family's parameter domain with the exact vanishing
/// point (1/m^2 or 1/m) inserted; every fidelity row is computed by closed
/// form and cross-checked against the direct optimizer.
std::vector<SweepRow> run_sweep(const std::string& family, int m, int points,
                                const SweepOptions& opts);

/// 12-significant-digit decimal, exponent only below 1e-3.
std::string format_number(double v);

/// CSV with header family,m,x,N_F,N_HS,bound; written to a temp file and
/// atomically renamed into place.
void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows,
                     const SweepOptions& opts);

struct VerifyReport {
  int trials = 0;
  int failures = 0;
  double worst_deviation = 0.0;
  std::vector<std::string> lines;  // one per trial
};

/// suite in {pure, twoxn, bound, ancilla, unitary, nullity}
VerifyReport run_verify(const std::string& suite, int trials,
                        std::uint64_t seed);

}  // namespace minf

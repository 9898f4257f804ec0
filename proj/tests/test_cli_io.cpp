#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "minf/driver.hpp"
#include "minf/statefile.hpp"

using namespace minf;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
           "/" + name;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("state file round trip") {
  const BipartiteState state = random_state(2, 3, 4, 31337);
  TempFile f("minf_roundtrip.json");
  save_state_file(f.path, state);
  const BipartiteState loaded = load_state_file(f.path);
  CHECK(loaded.dim_a == 2);
  CHECK(loaded.dim_b == 3);
  CHECK((loaded.rho - state.rho).norm() < 1e-12);
}

TEST_CASE("state file accepts the nested row form") {
  TempFile f("minf_nested.json");
  {
    std::ofstream out(f.path);
    out << R"({"dims":[1,2],"matrix":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})";
  }
  const BipartiteState loaded = load_state_file(f.path);
  CHECK(loaded.rho(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("state file rejection names the violated invariant") {
  TempFile f("minf_bad.json");
  {
    std::ofstream out(f.path);
    // trace 2, not a state
    out << R"({"dims":[1,2],"matrix":[[1,0],[0,0],[0,0],[1,0]]})";
  }
  CHECK_THROWS_WITH_AS(load_state_file(f.path),
                       doctest::Contains("trace"), std::runtime_error);

  {
    std::ofstream out(f.path);
    out << R"({"dims":[1,2],"matrix":[[1.5,0],[0,0],[0,0],[-0.5,0]]})";
  }
  CHECK_THROWS_WITH_AS(load_state_file(f.path),
                       doctest::Contains("positive"), std::runtime_error);

  {
    std::ofstream out(f.path);
    out << R"({"dims":[1,2],"matrix":[[1,0],[0,0]]})";
  }
  CHECK_THROWS_AS(load_state_file(f.path), std::runtime_error);

  CHECK_THROWS_AS(load_state_file("/nonexistent/state.json"),
                  std::runtime_error);
}

TEST_CASE("format_number: 12 significant digits, exponent only below 1e-3") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.5) == "0.500000000000");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(12.5) == "12.5000000000");
  CHECK(format_number(0.0005).find('e') != std::string::npos);
  CHECK(format_number(0.001).find('e') == std::string::npos);
}

TEST_CASE("sweep rows and byte-stable CSV") {
  SweepOptions opts;
  opts.optimizer.seed = 5;
  const std::vector<SweepRow> rows = run_sweep("isotropic", 2, 11, opts);
  // grid plus the inserted vanishing point 1/4
  CHECK(rows.size() == 12);
  bool found = false;
  for (const auto& row : rows)
    if (std::abs(row.x - 0.25) < 1e-15) {
      found = true;
      CHECK(row.min_f <= 1e-12);
    }
  CHECK(found);

  TempFile a("minf_sweep_a.csv"), b("minf_sweep_b.csv");
  write_sweep_csv(a.path, rows, opts);
  write_sweep_csv(b.path, run_sweep("isotropic", 2, 11, opts), opts);
  std::ifstream fa(a.path, std::ios::binary), fb(b.path, std::ios::binary);
  const std::string ca((std::istreambuf_iterator<char>(fa)), {});
  const std::string cb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(ca == cb);
  CHECK(ca.rfind("family,m,x,N_F,N_HS,bound\n", 0) == 0);
  CHECK(ca.find("\r") == std::string::npos);
}

TEST_CASE("verify suites run clean at small trial counts") {
  for (const char* suite : {"pure", "twoxn", "bound", "ancilla", "unitary",
                            "nullity"}) {
    const VerifyReport report = run_verify(suite, 5, 99);
    CHECK(report.failures == 0);
    CHECK(report.lines.size() == 5);
  }
  CHECK_THROWS_AS(run_verify("bogus", 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_verify("pure", 0, 1), std::invalid_argument);
}

#include "minf/statefile.hpp"

#include <fstream>

#include <json.hpp>

namespace minf {

namespace {

Complex parse_entry(const nlohmann::json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number())
    throw std::runtime_error("state file: matrix entry is not a [re,im] pair");
  return {pair[0].get<double>(), pair[1].get<double>()};
}

}  // namespace

BipartiteState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("state file: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("state file: invalid JSON: ") +
                             e.what());
  }
  if (!doc.contains("dims") || !doc["dims"].is_array() ||
      doc["dims"].size() != 2)
    throw std::runtime_error("state file: missing dims [m, n]");
  const int m = doc["dims"][0].get<int>();
  const int n = doc["dims"][1].get<int>();
  if (m < 1 || n < 1) throw std::runtime_error("state file: invalid dims");
  const int d = m * n;
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw std::runtime_error("state file: missing matrix");
  const auto& mat = doc["matrix"];

  ComplexMatrix rho(d, d);
  if (mat.size() == static_cast<std::size_t>(d) * d) {
    // flat list of pairs
    for (int idx = 0; idx < d * d; ++idx)
      rho(idx / d, idx % d) = parse_entry(mat[idx]);
  } else if (mat.size() == static_cast<std::size_t>(d)) {
    // list of rows of pairs
    for (int i = 0; i < d; ++i) {
      if (!mat[i].is_array() || mat[i].size() != static_cast<std::size_t>(d))
        throw std::runtime_error("state file: row length mismatch");
      for (int j = 0; j < d; ++j) rho(i, j) = parse_entry(mat[i][j]);
    }
  } else {
    throw std::runtime_error("state file: matrix length does not match dims");
  }
  try {
    return BipartiteState::create(m, n, std::move(rho));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("state file: ") + e.what());
  }
}

void save_state_file(const std::string& path, const BipartiteState& state) {
  nlohmann::json doc;
  doc["dims"] = {state.dim_a, state.dim_b};
  nlohmann::json mat = nlohmann::json::array();
  const int d = state.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      mat.push_back({state.rho(i, j).real(), state.rho(i, j).imag()});
  doc["matrix"] = std::move(mat);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("state file: cannot write " + path);
  out << doc.dump(1) << "\n";
}

}  // namespace minf

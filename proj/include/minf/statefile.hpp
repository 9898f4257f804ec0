#pragma once

#include <string>

#include "minf/states.hpp"

namespace minf {

/// Reads a JSON state file {"dims":[m,n],"matrix":...} where matrix is either
/// a flat list of (m*n)^2 [re,im] pairs or a list of rows of pairs, row-major.
/// Throws std::runtime_error naming the violated invariant on bad input.
BipartiteState load_state_file(const std::string& path);

/// Writes the flat-pair form.
void save_state_file(const std::string& path, const BipartiteState& state);

}  // namespace minf

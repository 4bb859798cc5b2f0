#pragma once

#include <optional>
#include <vector>

#include "flows/rational.hpp"

namespace flows {

// Any exact solution of A x = b (free variables set to 0), or nullopt when
// the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b);

} // namespace flows

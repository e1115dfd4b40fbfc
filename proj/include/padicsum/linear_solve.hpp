#pragma once

#include <vector>

#include "padicsum/rational.hpp"

namespace padicsum {

using RatMatrix = std::vector<std::vector<BigRational>>;

/// Solves the square system A y = b exactly by Gauss-Jordan elimination.
/// Throws std::domain_error if A is singular.
std::vector<BigRational> solve_linear(RatMatrix a, std::vector<BigRational> b);

}  // namespace padicsum

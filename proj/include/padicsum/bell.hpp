#pragma once

#include <cstddef>
#include <vector>

#include "padicsum/bigint.hpp"

namespace padicsum {

/// B_0 .. B_kmax from B_{k+1} = sum_{l=0..k} C(k,l) B_l, B_0 = 1.
std::vector<BigInt> bell_numbers(std::size_t kmax);

}  // namespace padicsum

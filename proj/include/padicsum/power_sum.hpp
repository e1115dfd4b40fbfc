#pragma once

#include <cstdint>

#include "padicsum/rational.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

/// S_k(n; x) = sum_{i=0..n-1} eps^i i! i^k x^i, with 0^0 = 1.
BigRational power_sum(std::uint64_t k, Sign eps, const BigRational& x, std::uint64_t n);

/**
 * S_{k+1}(n; x) obtained from S_0 .. S_k (computed directly) by solving
 *     S_k = [k==0] + eps x S_0 + eps x sum_{l=1..k+1} C(k+1,l) S_l - eps^n n! n^k x^n
 * for its l = k+1 term. Requires x != 0 (std::invalid_argument otherwise).
 */
BigRational power_sum_via_recurrence(std::uint64_t k, Sign eps, const BigRational& x,
                                     std::uint64_t n);

}  // namespace padicsum

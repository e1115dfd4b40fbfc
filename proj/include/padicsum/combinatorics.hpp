#pragma once

#include <cstdint>

#include "padicsum/bigint.hpp"
#include "padicsum/prime.hpp"

namespace padicsum {

/// n!, served from a process-wide memo table that grows on demand.
/// Safe to call concurrently.
BigInt factorial(std::uint64_t n);

/// C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// [(base+1)(base+2)...(base+width)]^power.
///
/// With base = mu*n + nu this is the factor taking ((mu*n+nu)!)^power to
/// ((mu*(n+1)+nu)!)^power.
BigInt rising_block(const BigInt& base, std::uint64_t width, std::uint64_t power);

/// Sum of the base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, const Prime& p);

}  // namespace padicsum

#pragma once

#include <cstddef>

#include "padicsum/a_table.hpp"
#include "padicsum/ratpoly.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

struct ClosedForms {
    RatPoly diagonal;  ///< A_kk(n) = sum_i (-1)^(k+i) C(k+1, i+1) n^i
    RatPoly linear;    ///< A_k1(n) = (n - k(k+3)/2) eps^(k+1)
};

/// Requires k >= 1.
ClosedForms closed_forms(std::size_t k, Sign eps);

/// Compares closed_forms(k) with the generated A_kk and A_k1 for every
/// 1 <= k <= kmax; throws CrossCheckError on the first mismatch.
void check_closed_forms(const ATable& table);

/// Degree in n of A_kj is j and its leading coefficient is eps^(k+j).
/// Throws CrossCheckError otherwise.
void check_structure(const ATable& table);

}  // namespace padicsum

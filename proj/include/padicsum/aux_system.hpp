#pragma once

#include <cstddef>

#include "padicsum/bigint.hpp"
#include "padicsum/ratpoly.hpp"

namespace padicsum {

struct AuxSolution {
    std::size_t k;
    RatPoly a;    ///< A_{k-1}(n), degree k-1
    BigRational u;  ///< u_k
    BigRational v;  ///< v_k = -A_{k-1}(0)
};

/**
 * Solves (n+1) A(n+1) - A(n) = n^k + u for the k coefficients of A and the
 * constant u, as a (k+1) x (k+1) linear system over the rationals (one
 * equation per power of n). Requires k >= 1.
 */
AuxSolution solve_aux_system(std::size_t k);

}  // namespace padicsum

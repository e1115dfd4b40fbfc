#include "padicsum/aux_system.hpp"

#include <stdexcept>

#include "padicsum/combinatorics.hpp"
#include "padicsum/errors.hpp"
#include "padicsum/linear_solve.hpp"

namespace padicsum {

AuxSolution solve_aux_system(std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("auxiliary system needs k >= 1");
    }
    const std::size_t size = k + 1;
    // Unknowns: a_0 .. a_{k-1}, then u. Row d is the coefficient of n^d.
    RatMatrix m(size, std::vector<BigRational>(size));
    std::vector<BigRational> rhs(size);
    for (std::size_t d = 0; d < size; ++d) {
        for (std::size_t i = 0; i < k; ++i) {
            // n^d coefficient of (n+1)^(i+1) - n^i
            BigRational c(binomial(i + 1, d));
            if (d == i) {
                c -= BigRational(1);
            }
            m[d][i] = c;
        }
        m[d][k] = d == 0 ? BigRational(-1) : BigRational(0);
        rhs[d] = d == k ? BigRational(1) : BigRational(0);
    }

    std::vector<BigRational> y;
    try {
        y = solve_linear(std::move(m), std::move(rhs));
    } catch (const std::domain_error&) {
        throw CrossCheckError("auxiliary system for k=" + std::to_string(k) + " is singular");
    }
    BigRational u = y.back();
    y.pop_back();
    RatPoly a(std::move(y));
    return {k, a, u, -a(0)};
}

}  // namespace padicsum

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "padicsum/genpoly.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

/// Generating polynomials A_0 .. A_kmax for one epsilon.
struct ATable {
    Sign eps = Sign::plus;
    std::vector<GenPoly> entries;

    std::size_t kmax() const { return entries.size() - 1; }
    const GenPoly& operator[](std::size_t k) const { return entries.at(k); }
};

/**
 * Builds A_k(n; x) = sum_j A_kj(n) x^j column by column.
 *
 * For k >= 1 and 0 <= j <= k,
 *     sum_{m=0..j} C(k+1, k+1-m) A_{k-m, j-m}(n) = eps * A_{k-1, j}(n)   (j < k)
 *                                                = n^k                   (j = k)
 * seeded with A_0 = 1. The m = 0 term has coefficient 1, so each A_kj is
 * solved for directly from earlier rows.
 */
ATable generate_a_table(std::size_t kmax, Sign eps);

struct RecurrenceResidual {
    std::size_t k;
    GenPoly residual;
};

struct RecurrenceReport {
    std::vector<RecurrenceResidual> residuals;  ///< k = 1 .. kmax
    std::optional<std::size_t> first_failure;

    bool ok() const { return !first_failure.has_value(); }
};

/**
 * Substitutes the whole family into
 *     sum_{l=1..k+1} C(k+1, l) x^(k-l+1) A_{l-1}(n;x) - eps A_{k-1}(n;x) - n^k x^k
 * as a two-variable polynomial, for every k = 1 .. kmax. Works on whole
 * GenPolys, independently of the coefficient-wise solver above.
 */
RecurrenceReport verify_a_recurrence(const ATable& table);

/**
 * Residual of the shift identity
 *     (n+1) x A_{k-1}(n+1; x) - eps A_{k-1}(n; x) - n^k x^k - U_k(x),
 * where U_k(x) = x A_{k-1}(1;x) - eps A_{k-1}(0;x). Zero for a correct table;
 * this is what makes the finite summation formula telescope.
 */
GenPoly shift_identity_residual(const ATable& table, std::size_t k);

}  // namespace padicsum

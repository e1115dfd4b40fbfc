#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "padicsum/rational.hpp"
#include "padicsum/ratpoly.hpp"
#include "padicsum/sign.hpp"
#include "padicsum/tables.hpp"

namespace padicsum {

/// A finite sum checked against its closed form: value = rhs_constant + boundary.
struct PartialSumResult {
    std::uint64_t n_terms = 0;
    BigRational value;
    BigRational boundary;
    BigRational rhs_constant;

    BigRational residual() const { return value - rhs_constant - boundary; }
    bool holds() const { return residual().is_zero(); }
};

/// sum_{j=1..k} C_j [n^j x^j + U_j(x)] summed against n! x^n.
struct SeriesSpec {
    Sign eps = Sign::plus;
    std::vector<BigRational> coeffs;  ///< coeffs[j-1] = C_j, last one nonzero
    BigRational x;

    SeriesSpec(Sign eps, std::vector<BigRational> coeffs, BigRational x);

    /// C = e_k: the single-power series.
    static SeriesSpec single(std::size_t k, Sign eps, BigRational x);

    std::size_t degree() const { return coeffs.size(); }
};

/**
 * LHS  = sum_{i<n} eps^i i! [i^k x^k + U_k(x)] x^i,
 * RHS  = V_k(x),
 * boundary = eps^(n-1) n! A_{k-1}(n; x) x^n.
 * Requires 1 <= k <= tables.uv.kmax().
 */
PartialSumResult finite_identity_check(const GeneratedTables& tables, std::size_t k,
                                       const BigRational& x, std::uint64_t n);

/// finite_identity_check for n = 1 .. n_max, sharing one running sum.
std::vector<PartialSumResult> finite_identity_sweep(const GeneratedTables& tables, std::size_t k,
                                                    const BigRational& x, std::uint64_t n_max);

/// Right-hand side Q(x) = sum_j C_j V_j(x).
BigRational series_claim(const GeneratedTables& tables, const SeriesSpec& spec);

/// P(n; x) = sum_j C_j [n^j x^j + U_j(x)] evaluated at integer n.
BigRational series_poly_at(const GeneratedTables& tables, const SeriesSpec& spec, std::uint64_t n);

/// sum_j C_j A_{j-1}(n; x): the polynomial factor of the remainder.
BigRational series_remainder_factor(const GeneratedTables& tables, const SeriesSpec& spec,
                                    std::uint64_t n);

/**
 * sum_{i<n} eps^i i! P(i; x) x^i = Q(x) + eps^(n-1) n! x^n sum_j C_j A_{j-1}(n; x).
 * spec.eps must match the tables.
 */
PartialSumResult general_sum_check(const GeneratedTables& tables, const SeriesSpec& spec,
                                   std::uint64_t n);

}  // namespace padicsum

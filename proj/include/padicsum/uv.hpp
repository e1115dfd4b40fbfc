#pragma once

#include <cstddef>
#include <vector>

#include "padicsum/a_table.hpp"
#include "padicsum/bigint.hpp"
#include "padicsum/ratpoly.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

/// Corrective polynomials U_k(x), V_k(x) for k = 1 .. kmax.
struct UVPolyTable {
    Sign eps = Sign::plus;
    std::vector<RatPoly> U;  ///< U[k-1] = U_k
    std::vector<RatPoly> V;  ///< V[k-1] = V_k

    std::size_t kmax() const { return U.size(); }
    const RatPoly& u_poly(std::size_t k) const { return U.at(k - 1); }
    const RatPoly& v_poly(std::size_t k) const { return V.at(k - 1); }
};

/**
 * U_k(x) = x A_{k-1}(1; x) - eps A_{k-1}(0; x) and V_k(x) = -eps A_{k-1}(0; x)
 * for k = 1 .. table.kmax() + 1.
 *
 * The result is cross-checked against uv_by_recurrence(); a mismatch
 * throws CrossCheckError.
 */
UVPolyTable derive_uv(const ATable& table);

/// Same as derive_uv() without the cross-check.
UVPolyTable derive_uv_unchecked(const ATable& table);

/**
 * U_k and V_k straight from their own recurrences, independent of any A table:
 *     U_{k+1} = x^(k+1) + eps U_k - sum_{l=1..k} C(k+1,l) x^(k-l+1) U_l,   U_1 = x - eps
 *     W_k     = eps W_{k-1} - sum_{l=1..k} C(k+1,l) x^(k-l+1) W_{l-1},     W_0 = -eps
 * with V_k = W_{k-1}.
 */
UVPolyTable uv_by_recurrence(std::size_t kmax, Sign eps);

/// The integer pairs (u_k, v_k), k = 1 .. kmax.
struct UVIntTable {
    std::vector<BigInt> u;  ///< u[k-1] = u_k
    std::vector<BigInt> v;

    std::size_t kmax() const { return u.size(); }
};

/**
 * Integer recurrences
 *     u_{k+1} = -k u_k - sum_{l=1..k-1} C(k+1,l) u_l + 1,          u_1 = 0
 *     v_{k+1} = -k v_k - sum_{l=1..k-1} C(k+1,l) v_l - [k == 0]
 */
UVIntTable generate_uv_integers(std::size_t kmax);

/// Checks u_k = U_k(1), v_k = V_k(1) for the common range; `polys` must be
/// the eps = +1 table. Throws CrossCheckError on mismatch.
void cross_check_uv(const UVIntTable& ints, const UVPolyTable& polys);

}  // namespace padicsum

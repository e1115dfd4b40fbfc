#include "padicsum/uv.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "padicsum/combinatorics.hpp"
#include "padicsum/errors.hpp"

namespace padicsum {

UVPolyTable derive_uv_unchecked(const ATable& table) {
    UVPolyTable out;
    out.eps = table.eps;
    const BigRational e(to_int(table.eps));
    for (std::size_t k = 1; k <= table.kmax() + 1; ++k) {
        const GenPoly& a = table[k - 1];
        RatPoly at_zero = a.at_n(0);
        out.U.push_back(a.at_n(1).times_power(1) - at_zero * e);
        out.V.push_back(-(at_zero * e));
    }
    return out;
}

UVPolyTable derive_uv(const ATable& table) {
    UVPolyTable derived = derive_uv_unchecked(table);
    UVPolyTable direct = uv_by_recurrence(derived.kmax(), table.eps);
    for (std::size_t k = 1; k <= derived.kmax(); ++k) {
        if (derived.u_poly(k) != direct.u_poly(k)) {
            throw CrossCheckError("U_" + std::to_string(k) + " mismatch: " +
                                  derived.u_poly(k).to_string("x") + " vs " +
                                  direct.u_poly(k).to_string("x"));
        }
        if (derived.v_poly(k) != direct.v_poly(k)) {
            throw CrossCheckError("V_" + std::to_string(k) + " mismatch: " +
                                  derived.v_poly(k).to_string("x") + " vs " +
                                  direct.v_poly(k).to_string("x"));
        }
    }
    return derived;
}

UVPolyTable uv_by_recurrence(std::size_t kmax, Sign eps) {
    UVPolyTable out;
    out.eps = eps;
    if (kmax == 0) {
        return out;
    }
    const BigRational e(to_int(eps));

    std::vector<RatPoly> u{RatPoly::linear(1, -e)};
    std::vector<RatPoly> w{RatPoly::constant(-e)};
    for (std::size_t k = 1; k < kmax; ++k) {
        RatPoly next_u = RatPoly::monomial(1, k + 1) + u[k - 1] * e;
        RatPoly next_w = w[k - 1] * e;
        for (std::size_t l = 1; l <= k; ++l) {
            BigRational c(binomial(k + 1, l));
            next_u -= u[l - 1].times_power(k - l + 1) * c;
            next_w -= w[l - 1].times_power(k - l + 1) * c;
        }
        u.push_back(std::move(next_u));
        w.push_back(std::move(next_w));
    }
    out.U = std::move(u);
    out.V = std::move(w);
    return out;
}

UVIntTable generate_uv_integers(std::size_t kmax) {
    UVIntTable out;
    if (kmax == 0) {
        return out;
    }
    out.u.push_back(BigInt(0));
    out.v.push_back(BigInt(-1));  // k = 0 step: v_1 = -delta_{00}
    for (std::size_t k = 1; k < kmax; ++k) {
        BigInt next_u = -BigInt(k) * out.u[k - 1] + BigInt(1);
        BigInt next_v = -BigInt(k) * out.v[k - 1];
        for (std::size_t l = 1; l + 1 <= k; ++l) {
            BigInt c = binomial(k + 1, l);
            next_u -= c * out.u[l - 1];
            next_v -= c * out.v[l - 1];
        }
        out.u.push_back(std::move(next_u));
        out.v.push_back(std::move(next_v));
    }
    return out;
}

void cross_check_uv(const UVIntTable& ints, const UVPolyTable& polys) {
    if (polys.eps != Sign::plus) {
        throw std::invalid_argument("integer pairs correspond to the eps = +1 polynomials");
    }
    std::size_t common = std::min(ints.kmax(), polys.kmax());
    for (std::size_t k = 1; k <= common; ++k) {
        BigRational u_at_one = polys.u_poly(k)(1);
        BigRational v_at_one = polys.v_poly(k)(1);
        if (u_at_one != BigRational(ints.u[k - 1]) || v_at_one != BigRational(ints.v[k - 1])) {
            throw CrossCheckError("(u_" + std::to_string(k) + ", v_" + std::to_string(k) +
                                  ") = (" + ints.u[k - 1].to_string() + ", " +
                                  ints.v[k - 1].to_string() + ") but U(1), V(1) = (" +
                                  u_at_one.to_string() + ", " + v_at_one.to_string() + ")");
        }
    }
}

}  // namespace padicsum

#include "padicsum/finite_identity.hpp"

#include <stdexcept>
#include <string>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

namespace {

void require_k(const GeneratedTables& tables, std::size_t k) {
    if (k == 0 || k > tables.uv.kmax()) {
        throw std::out_of_range("k=" + std::to_string(k) + " outside the generated tables (1.." +
                                std::to_string(tables.uv.kmax()) + ")");
    }
}

void require_eps(const GeneratedTables& tables, Sign eps) {
    if (tables.eps() != eps) {
        throw std::invalid_argument("series sign does not match the tables");
    }
}

BigRational boundary_factor(Sign eps, std::uint64_t n, const BigRational& x) {
    // eps^(n-1) n! x^n
    int sign = n == 0 ? to_int(eps) : sign_pow(eps, n - 1);
    return BigRational(sign) * BigRational(factorial(n)) * pow(x, n);
}

}  // namespace

SeriesSpec::SeriesSpec(Sign eps_, std::vector<BigRational> coeffs_, BigRational x_)
    : eps(eps_), coeffs(std::move(coeffs_)), x(std::move(x_)) {
    if (coeffs.empty() || coeffs.back().is_zero()) {
        throw std::invalid_argument("series coefficients must end with a nonzero C_k");
    }
}

SeriesSpec SeriesSpec::single(std::size_t k, Sign eps, BigRational x) {
    if (k == 0) {
        throw std::invalid_argument("single-power series needs k >= 1");
    }
    std::vector<BigRational> c(k);
    c[k - 1] = BigRational(1);
    return SeriesSpec(eps, std::move(c), std::move(x));
}

std::vector<PartialSumResult> finite_identity_sweep(const GeneratedTables& tables, std::size_t k,
                                                    const BigRational& x, std::uint64_t n_max) {
    require_k(tables, k);
    const Sign eps = tables.eps();
    const BigRational u = tables.uv.u_poly(k)(x);
    const BigRational v = tables.uv.v_poly(k)(x);
    const BigRational xk = pow(x, k);
    const GenPoly& a = tables.a[k - 1];

    std::vector<PartialSumResult> out;
    out.reserve(n_max);
    BigRational sum(0);
    BigRational running(1);  // eps^i i! x^i
    for (std::uint64_t i = 0; i < n_max; ++i) {
        if (i > 0) {
            running *= BigRational(to_int(eps) * static_cast<long>(i)) * x;
        }
        sum += running * (BigRational(pow(BigInt(i), k)) * xk + u);

        std::uint64_t n = i + 1;
        out.push_back({n, sum, boundary_factor(eps, n, x) * a.eval(BigRational(BigInt(n)), x), v});
    }
    return out;
}

PartialSumResult finite_identity_check(const GeneratedTables& tables, std::size_t k,
                                       const BigRational& x, std::uint64_t n) {
    if (n == 0) {
        require_k(tables, k);
        const GenPoly& a = tables.a[k - 1];
        return {0, BigRational(0), boundary_factor(tables.eps(), 0, x) * a.eval(0, x),
                tables.uv.v_poly(k)(x)};
    }
    return finite_identity_sweep(tables, k, x, n).back();
}

BigRational series_claim(const GeneratedTables& tables, const SeriesSpec& spec) {
    require_eps(tables, spec.eps);
    require_k(tables, spec.degree());
    BigRational q(0);
    for (std::size_t j = 1; j <= spec.degree(); ++j) {
        q += spec.coeffs[j - 1] * tables.uv.v_poly(j)(spec.x);
    }
    return q;
}

BigRational series_poly_at(const GeneratedTables& tables, const SeriesSpec& spec, std::uint64_t n) {
    BigRational p(0);
    BigRational nx = BigRational(BigInt(n)) * spec.x;
    for (std::size_t j = 1; j <= spec.degree(); ++j) {
        const BigRational& c = spec.coeffs[j - 1];
        if (c.is_zero()) {
            continue;
        }
        p += c * (pow(nx, j) + tables.uv.u_poly(j)(spec.x));
    }
    return p;
}

BigRational series_remainder_factor(const GeneratedTables& tables, const SeriesSpec& spec,
                                    std::uint64_t n) {
    BigRational r(0);
    for (std::size_t j = 1; j <= spec.degree(); ++j) {
        const BigRational& c = spec.coeffs[j - 1];
        if (!c.is_zero()) {
            r += c * tables.a[j - 1].eval(BigRational(BigInt(n)), spec.x);
        }
    }
    return r;
}

PartialSumResult general_sum_check(const GeneratedTables& tables, const SeriesSpec& spec,
                                   std::uint64_t n) {
    BigRational q = series_claim(tables, spec);
    BigRational sum(0);
    BigRational running(1);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i > 0) {
            running *= BigRational(to_int(spec.eps) * static_cast<long>(i)) * spec.x;
        }
        sum += running * series_poly_at(tables, spec, i);
    }
    BigRational boundary =
        boundary_factor(spec.eps, n, spec.x) * series_remainder_factor(tables, spec, n);
    return {n, sum, boundary, q};
}

}  // namespace padicsum

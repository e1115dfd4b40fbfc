#include "padicsum/truncated_ps.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

TruncatedPS::TruncatedPS(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("truncated series needs at least c_0");
    }
}

RatPoly TruncatedPS::to_poly() const {
    return RatPoly(coeffs_);
}

TruncatedPS build_F(const RatPoly& p, std::size_t order) {
    std::vector<BigRational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        c.push_back(BigRational(factorial(n)) * p(BigRational(BigInt(n))));
    }
    return TruncatedPS(std::move(c));
}

TruncatedPS ps_diff(const TruncatedPS& f) {
    if (f.order() == 0) {
        return TruncatedPS({BigRational(0)});
    }
    std::vector<BigRational> c(f.order());
    for (std::size_t i = 1; i <= f.order(); ++i) {
        c[i - 1] = f[i] * BigRational(BigInt(i));
    }
    return TruncatedPS(std::move(c));
}

TruncatedPS ps_mul_poly(const RatPoly& p, const TruncatedPS& f) {
    std::vector<BigRational> c(f.order() + 1);
    const auto& pc = p.coefficients();
    for (std::size_t i = 0; i < pc.size() && i <= f.order(); ++i) {
        for (std::size_t j = 0; i + j <= f.order(); ++j) {
            c[i + j] += pc[i] * f[j];
        }
    }
    return TruncatedPS(std::move(c));
}

TruncatedPS ps_add(const TruncatedPS& a, const TruncatedPS& b) {
    std::size_t order = std::min(a.order(), b.order());
    std::vector<BigRational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        c[i] = a[i] + b[i];
    }
    return TruncatedPS(std::move(c));
}

TruncatedPS ps_mul_xpow(const TruncatedPS& f, std::size_t m) {
    std::vector<BigRational> c(f.order() + 1);
    for (std::size_t i = m; i <= f.order(); ++i) {
        c[i] = f[i - m];
    }
    return TruncatedPS(std::move(c));
}

TruncatedPS ps_scale(const TruncatedPS& f, const BigRational& s) {
    std::vector<BigRational> c = f.coefficients();
    for (auto& x : c) {
        x *= s;
    }
    return TruncatedPS(std::move(c));
}

}  // namespace padicsum

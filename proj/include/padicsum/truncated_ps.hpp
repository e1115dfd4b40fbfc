#pragma once

#include <cstddef>
#include <vector>

#include "padicsum/rational.hpp"
#include "padicsum/ratpoly.hpp"

namespace padicsum {

/**
 * Power series known through degree N: c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)).
 * Holds exactly N+1 coefficients; results never claim accuracy past the
 * smallest order involved.
 */
class TruncatedPS {
public:
    /// coeffs.size() must be >= 1; order = coeffs.size() - 1.
    explicit TruncatedPS(std::vector<BigRational> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }
    BigRational& operator[](std::size_t i) { return coeffs_.at(i); }

    /// The known part as an ordinary polynomial.
    RatPoly to_poly() const;

    friend bool operator==(const TruncatedPS&, const TruncatedPS&) = default;

private:
    std::vector<BigRational> coeffs_;
};

/// F(x) = sum_{n=0..N} n! P(n) x^n.
TruncatedPS build_F(const RatPoly& p, std::size_t order);

/// d/dx; order drops by one (order 0 gives the zero series of order 0).
TruncatedPS ps_diff(const TruncatedPS& f);

/// Product with a polynomial, truncated at f's order.
TruncatedPS ps_mul_poly(const RatPoly& p, const TruncatedPS& f);

/// Sum, truncated at the smaller order.
TruncatedPS ps_add(const TruncatedPS& a, const TruncatedPS& b);

/// Multiplication by x^m: shifts up and truncates at f's order.
TruncatedPS ps_mul_xpow(const TruncatedPS& f, std::size_t m);

TruncatedPS ps_scale(const TruncatedPS& f, const BigRational& c);

}  // namespace padicsum

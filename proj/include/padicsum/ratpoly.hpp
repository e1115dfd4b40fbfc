#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "padicsum/rational.hpp"

namespace padicsum {

/**
 * Dense univariate polynomial over the rationals, lowest degree first.
 *
 * Canonical form: no trailing zero coefficients; the zero polynomial has no
 * coefficients and degree -1. Every operation returns canonical output.
 */
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRational> coeffs);

    static RatPoly constant(const BigRational& c);
    static RatPoly monomial(const BigRational& c, std::size_t degree);
    /// The polynomial t.
    static RatPoly variable();
    /// (a*t + b)
    static RatPoly linear(const BigRational& a, const BigRational& b);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^i (zero beyond the degree).
    BigRational coeff(std::size_t i) const;
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    BigRational leading() const;

    bool has_integer_coefficients() const;

    /// Horner evaluation.
    BigRational operator()(const BigRational& t) const;

    /// q(t) = p(t + 1).
    RatPoly shifted() const;
    RatPoly derivative() const;
    /// t^k * p(t).
    RatPoly times_power(std::size_t k) const;
    /// p(q(t)).
    RatPoly compose(const RatPoly& q) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const BigRational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const BigRational& c) { return a *= c; }
    friend RatPoly operator*(const BigRational& c, RatPoly a) { return a *= c; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// e.g. "n^2-3n+3"; "0" for the zero polynomial.
    std::string to_string(std::string_view var = "n") const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

RatPoly pow(const RatPoly& p, std::uint64_t exponent);

}  // namespace padicsum

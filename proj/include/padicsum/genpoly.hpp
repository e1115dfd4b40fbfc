#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "padicsum/bigint.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/ratpoly.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

/**
 * Two-level polynomial sum_j A_j(n) x^j for one fixed epsilon.
 *
 * coeff(j) is the polynomial in n multiplying x^j. Epsilon is a tag, not
 * a variable: arithmetic between GenPolys requires matching signs, and
 * symbolic-epsilon output is reconstructed from the two sign runs (see
 * eps_split.hpp).
 */
class GenPoly {
public:
    GenPoly(Sign eps, std::vector<RatPoly> coeffs_in_x);

    static GenPoly zero(Sign eps) { return GenPoly(eps, {}); }
    static GenPoly one(Sign eps);

    Sign eps() const { return eps_; }
    int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Polynomial in n multiplying x^j (zero beyond the degree).
    RatPoly coeff(std::size_t j) const;
    const std::vector<RatPoly>& coefficients() const { return coeffs_; }

    BigRational eval(const BigRational& n, const BigRational& x) const;

    /// Substitute n, leaving a polynomial in x.
    RatPoly at_n(const BigRational& n) const;
    /// Substitute x, leaving a polynomial in n.
    RatPoly at_x(const BigRational& x) const;

    /// A(n+1; x).
    GenPoly shifted_n() const;
    /// x^k * A.
    GenPoly times_x_power(std::size_t k) const;
    /// Multiply every coefficient by a polynomial in n.
    GenPoly times_n_poly(const RatPoly& p) const;

    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    GenPoly& operator*=(const GenPoly& o);
    GenPoly& operator*=(const BigRational& c);

    friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
    friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
    friend GenPoly operator*(GenPoly a, const GenPoly& b) { return a *= b; }
    friend GenPoly operator*(GenPoly a, const BigRational& c) { return a *= c; }
    friend GenPoly operator*(const BigRational& c, GenPoly a) { return a *= c; }

    friend bool operator==(const GenPoly&, const GenPoly&) = default;

    /// Concrete-sign rendering, e.g. "(n-2)x + 1".
    std::string to_string() const;

private:
    void require_same_eps(const GenPoly& o) const;
    void trim();

    Sign eps_;
    std::vector<RatPoly> coeffs_;
};

/// Renders sum_j c_j(n) * tag_j * x^j where each tag is "" or "e".
/// Used by both the concrete and the symbolic-epsilon renderers.
std::string render_x_terms(const std::vector<std::pair<RatPoly, RatPoly>>& even_odd);

}  // namespace padicsum

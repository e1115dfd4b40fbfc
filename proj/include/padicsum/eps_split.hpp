#pragma once

#include <string>
#include <utility>
#include <vector>

#include "padicsum/genpoly.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/ratpoly.hpp"

namespace padicsum {

// Symbolic-epsilon reconstruction. Anything computed once with eps = +1 and
// once with eps = -1 is an affine function of eps, f = even + eps * odd,
// with even = (f+ + f-)/2 and odd = (f+ - f-)/2.

struct EpsValue {
    BigRational even;
    BigRational odd;

    static EpsValue from_runs(const BigRational& at_plus, const BigRational& at_minus);

    /// "-2+e", "4-5e", "1", "e".
    std::string to_string() const;

    friend bool operator==(const EpsValue&, const EpsValue&) = default;
};

struct EpsPoly {
    RatPoly even;
    RatPoly odd;

    static EpsPoly from_runs(const RatPoly& at_plus, const RatPoly& at_minus);

    friend bool operator==(const EpsPoly&, const EpsPoly&) = default;
};

/// Per-x-power split of a GenPoly pair; index j is the x^j coefficient.
std::vector<EpsPoly> split_genpoly(const GenPoly& plus, const GenPoly& minus);

/// "(n^2-3n+3)x^2 + (n-5)e x + 1"
std::string render_symbolic(const GenPoly& plus, const GenPoly& minus);

/// Symbolic rendering of a polynomial in x (for U_k, V_k), e.g. "-x^2 + 3e x - 1".
std::string render_symbolic(const RatPoly& plus, const RatPoly& minus);

}  // namespace padicsum

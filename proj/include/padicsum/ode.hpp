#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padicsum/ratpoly.hpp"
#include "padicsum/report.hpp"
#include "padicsum/truncated_ps.hpp"

namespace padicsum {

/// sum_d coeffs[d](x) F^(d)(x) = rhs(x), polynomial coefficients.
struct LinearOde {
    std::vector<RatPoly> coeffs;
    RatPoly rhs;
};

/// x^2 F' + (x - 1) F = -1
LinearOde first_order_F0_ode();
/// x^2 F'' + (3x - 1) F' + F = 0
LinearOde second_order_F0_ode();

struct OdeResidual {
    /// Coefficients of L[F_N] - rhs, where F_N is the truncation of F taken
    /// as an exact polynomial; no truncation is applied to the product.
    std::vector<BigRational> coeffs;
    /// Degrees 0 .. exact_through only involve known coefficients of F.
    std::ptrdiff_t exact_through;
};

/**
 * Applies the operator to the known part of f. A coefficient of L[F] at
 * degree m involves c_{m - s + d} for each monomial x^s of coeffs[d], so it
 * is exact for m <= N - max_d(d - lowdeg(coeffs[d])).
 */
OdeResidual apply_operator(const LinearOde& ode, const TruncatedPS& f);

/// Degree -> required value; nullopt allows any value at that degree.
using ArtifactWhitelist = std::map<std::size_t, std::optional<BigRational>>;

struct OdeCheck {
    std::string name;
    std::size_t order;
    OdeResidual residual;
    ArtifactWhitelist artifacts;
    /// Degrees with a nonzero coefficient not on the whitelist, or with an
    /// artifact different from its required value.
    std::vector<std::size_t> violations;

    bool pass() const { return violations.empty(); }
    CheckRecord to_record() const;
};

/// Nonzero coefficients are allowed only at the explicitly listed degrees.
OdeCheck check_residual(std::string name, const LinearOde& ode, const TruncatedPS& f,
                        ArtifactWhitelist artifacts);

/// First-order operator on F_0 through degree N (N >= 2): degrees 0..N must
/// vanish; degree N+1 is the truncation artifact and must equal (N+1)!.
TruncatedPS ode_residual_first(std::size_t order);
OdeCheck ode_check_first(std::size_t order);
OdeCheck ode_check_first(const TruncatedPS& f);

/// Second-order operator on F_0 through degree N (N >= 3): degrees 0..N-1
/// must vanish; artifacts allowed at N and N+1.
TruncatedPS ode_residual_second(std::size_t order);
OdeCheck ode_check_second(std::size_t order);
OdeCheck ode_check_second(const TruncatedPS& f);

}  // namespace padicsum

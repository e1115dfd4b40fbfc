#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "padicsum/prime.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/valuation.hpp"

namespace padicsum {

/// Exponent data of a factorial series: the x-power step alpha and the
/// total factorial growth sum(mu_i * lambda_i).
struct ConvergenceParams {
    std::uint64_t alpha = 1;
    std::uint64_t mu_lambda_sum = 0;

    ConvergenceParams(std::uint64_t alpha, std::uint64_t mu_lambda_sum);
};

/**
 * Integer threshold T such that the series converges at x iff v_p(x) > T.
 *
 * The real boundary is -mu_lambda_sum / ((p - 1) * alpha); since valuations
 * are integers, T is its floor. Always finite, and always < 0 when
 * mu_lambda_sum >= 1, so every p-adic integer lies in the domain.
 */
Valuation convergence_bound(const ConvergenceParams& params, const Prime& p);

bool in_convergence_domain(const ConvergenceParams& params, const Prime& p, const BigRational& x);

enum class TermTrend {
    tends_to_infinity,
    does_not_converge,
    inconclusive,
};

const char* to_string(TermTrend trend);

struct TermProfile {
    std::vector<Valuation> valuations;  ///< index i holds term n = i + 1
    TermTrend trend = TermTrend::inconclusive;
};

/**
 * Valuations of term(1) .. term(n_max) and an empirical trend verdict.
 *
 * The verdict is tends_to_infinity when every term is zero, or when the
 * minimum valuation over the second half of the window strictly exceeds
 * the minimum over the first half; inconclusive when n_max < 2.
 */
TermProfile term_val_profile(const std::function<BigRational(std::uint64_t)>& term,
                             const Prime& p, std::uint64_t n_max);

/// Trend rule of term_val_profile applied to an arbitrary sequence.
TermTrend classify_trend(const std::vector<Valuation>& valuations);

}  // namespace padicsum

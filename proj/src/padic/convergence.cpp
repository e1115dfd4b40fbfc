#include "padicsum/convergence.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicsum {

ConvergenceParams::ConvergenceParams(std::uint64_t alpha_, std::uint64_t mu_lambda_sum_)
    : alpha(alpha_), mu_lambda_sum(mu_lambda_sum_) {
    if (alpha == 0) {
        throw std::invalid_argument("alpha must be >= 1");
    }
}

Valuation convergence_bound(const ConvergenceParams& params, const Prime& p) {
    auto den = static_cast<std::int64_t>((p.value() - 1) * params.alpha);
    auto num = static_cast<std::int64_t>(params.mu_lambda_sum);
    // floor(-num / den) for num >= 0, den > 0
    std::int64_t threshold = -((num + den - 1) / den);
    return Valuation::finite(threshold);
}

bool in_convergence_domain(const ConvergenceParams& params, const Prime& p, const BigRational& x) {
    return val_rat(x, p) > convergence_bound(params, p);
}

const char* to_string(TermTrend trend) {
    switch (trend) {
        case TermTrend::tends_to_infinity: return "tends_to_infinity";
        case TermTrend::does_not_converge: return "does_not_converge";
        case TermTrend::inconclusive: return "inconclusive";
    }
    return "unknown";
}

TermTrend classify_trend(const std::vector<Valuation>& valuations) {
    if (std::all_of(valuations.begin(), valuations.end(),
                    [](const Valuation& v) { return v.is_infinite(); }) &&
        !valuations.empty()) {
        return TermTrend::tends_to_infinity;
    }
    if (valuations.size() < 2) {
        return TermTrend::inconclusive;
    }
    auto mid = valuations.begin() + static_cast<std::ptrdiff_t>(valuations.size() / 2);
    auto head_min = *std::min_element(valuations.begin(), mid);
    auto tail_min = *std::min_element(mid, valuations.end());
    return tail_min > head_min ? TermTrend::tends_to_infinity : TermTrend::does_not_converge;
}

TermProfile term_val_profile(const std::function<BigRational(std::uint64_t)>& term,
                             const Prime& p, std::uint64_t n_max) {
    TermProfile profile;
    profile.valuations.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        profile.valuations.push_back(val_rat(term(n), p));
    }
    profile.trend = classify_trend(profile.valuations);
    return profile;
}

}  // namespace padicsum

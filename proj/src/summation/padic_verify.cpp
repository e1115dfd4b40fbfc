#include "padicsum/padic_verify.hpp"

#include "padicsum/convergence.hpp"
#include "padicsum/telescope.hpp"

namespace padicsum {

PadicVerdict padic_sum_verify(const GeneratedTables& tables, const SeriesSpec& spec,
                              const BigRational& claimed, const Prime& p, std::uint64_t n_max) {
    // sum n! P(n) x^n: one factorial block, alpha = 1
    if (!in_convergence_domain(ConvergenceParams(1, 1), p, spec.x)) {
        throw DomainError(p, "x = " + spec.x.to_string() + " is outside the domain at p = " +
                                 p.to_string());
    }
    series_claim(tables, spec);  // validates eps and degree against the tables

    PadicVerdict verdict{p, claimed, {}, false, std::nullopt, false};
    verdict.samples.reserve(n_max);
    const Valuation vx = val_rat(spec.x, p);

    BigRational sum(0);
    BigRational running(1);
    std::vector<Valuation> errors;
    errors.reserve(n_max);
    for (std::uint64_t i = 0; i < n_max; ++i) {
        if (i > 0) {
            running *= BigRational(to_int(spec.eps) * static_cast<long>(i)) * spec.x;
        }
        sum += running * series_poly_at(tables, spec, i);

        const std::uint64_t big_n = i + 1;
        Valuation x_part = vx.is_infinite()
                               ? Valuation::infinity()
                               : Valuation::finite(static_cast<std::int64_t>(big_n) * vx.value());
        Valuation bound = val_factorial(big_n, p) + x_part +
                          val_rat(series_remainder_factor(tables, spec, big_n), p);
        Valuation error = val_rat(sum - claimed, p);
        if (error < bound && !verdict.first_violation) {
            verdict.first_violation = big_n;
        }
        errors.push_back(error);
        verdict.samples.push_back({big_n, sum, error, bound});
    }
    verdict.error_grows = classify_trend(errors) == TermTrend::tends_to_infinity;
    verdict.pass = !verdict.first_violation && verdict.error_grows;
    return verdict;
}

}  // namespace padicsum

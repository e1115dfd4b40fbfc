#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padicsum/finite_identity.hpp"
#include "padicsum/prime.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/tables.hpp"
#include "padicsum/valuation.hpp"

namespace padicsum {

struct PadicSample {
    std::uint64_t n_terms;     ///< N: the partial sum runs over n = 0 .. N-1
    BigRational partial;
    Valuation error;           ///< v_p(partial - claimed)
    Valuation bound;           ///< v_p(N!) + N v_p(x) + v_p(sum_j C_j A_{j-1}(N; x))
};

struct PadicVerdict {
    Prime prime;
    BigRational claimed;
    std::vector<PadicSample> samples;
    bool pass = false;
    std::optional<std::uint64_t> first_violation;  ///< first N with error < bound
    bool error_grows = false;
};

/**
 * p-adic check of a claimed infinite sum of the series in `spec`.
 *
 * For N = 1 .. n_max the partial sum over n < N is compared with `claimed`.
 * The exact remainder of the correct claim is eps^(N-1) N! x^N sum_j C_j A_{j-1}(N;x),
 * so the error valuation must reach that remainder's valuation at every N.
 * PASS additionally requires the error valuations to grow (the rule of
 * classify_trend()). Throws DomainError when x is not a p-adic integer.
 */
PadicVerdict padic_sum_verify(const GeneratedTables& tables, const SeriesSpec& spec,
                              const BigRational& claimed, const Prime& p, std::uint64_t n_max);

}  // namespace padicsum

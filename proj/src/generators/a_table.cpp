#include "padicsum/a_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

ATable generate_a_table(std::size_t kmax, Sign eps) {
    const BigRational e(to_int(eps));
    // rows[k][j] = A_kj(n)
    std::vector<std::vector<RatPoly>> rows;
    rows.push_back({RatPoly::constant(BigRational(1))});

    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<RatPoly> row(k + 1);
        for (std::size_t j = 0; j <= k; ++j) {
            RatPoly value = (j == k) ? RatPoly::monomial(BigRational(1), k)
                                     : rows[k - 1][j] * e;
            for (std::size_t m = 1; m <= j; ++m) {
                value -= rows[k - m][j - m] * BigRational(binomial(k + 1, k + 1 - m));
            }
            row[j] = std::move(value);
        }
        rows.push_back(std::move(row));
    }

    ATable table;
    table.eps = eps;
    table.entries.reserve(rows.size());
    for (auto& row : rows) {
        table.entries.emplace_back(eps, std::move(row));
    }
    return table;
}

RecurrenceReport verify_a_recurrence(const ATable& table) {
    RecurrenceReport report;
    const Sign eps = table.eps;
    for (std::size_t k = 1; k <= table.kmax(); ++k) {
        GenPoly acc = GenPoly::zero(eps);
        for (std::size_t l = 1; l <= k + 1; ++l) {
            acc += table[l - 1].times_x_power(k - l + 1) * BigRational(binomial(k + 1, l));
        }
        acc -= table[k - 1] * BigRational(to_int(eps));
        std::vector<RatPoly> nk_xk(k + 1);
        nk_xk[k] = RatPoly::monomial(BigRational(1), k);
        acc -= GenPoly(eps, std::move(nk_xk));

        if (!acc.is_zero() && !report.first_failure) {
            report.first_failure = k;
        }
        report.residuals.push_back({k, std::move(acc)});
    }
    return report;
}

GenPoly shift_identity_residual(const ATable& table, std::size_t k) {
    if (k == 0 || k > table.kmax() + 1) {
        throw std::out_of_range("shift identity needs 1 <= k <= kmax + 1");
    }
    const Sign eps = table.eps;
    const BigRational e(to_int(eps));
    const GenPoly& a = table[k - 1];

    GenPoly lhs = a.shifted_n().times_n_poly(RatPoly::linear(1, 1)).times_x_power(1) - a * e;

    RatPoly u = a.at_n(1).times_power(1) - a.at_n(0) * e;
    std::vector<RatPoly> rhs(k + 1);
    rhs[k] = RatPoly::monomial(BigRational(1), k);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(std::max(u.degree(), 0)); ++j) {
        if (j < rhs.size()) {
            rhs[j] += RatPoly::constant(u.coeff(j));
        } else {
            rhs.push_back(RatPoly::constant(u.coeff(j)));
        }
    }
    return lhs - GenPoly(eps, std::move(rhs));
}

}  // namespace padicsum

#include "padicsum/telescope.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

TelescopeSpec::TelescopeSpec(std::vector<FactorialBlock> blocks, std::uint64_t alpha,
                             std::uint64_t beta, Sign eps, BigRational x, RatPoly aux)
    : blocks_(std::move(blocks)), alpha_(alpha), beta_(beta), eps_(eps), x_(std::move(x)),
      aux_(std::move(aux)) {
    if (blocks_.empty()) {
        throw std::invalid_argument("telescope spec needs at least one factorial block");
    }
    bool any_lambda = false;
    for (const auto& b : blocks_) {
        if (b.mu < 1) {
            throw std::invalid_argument("mu must be >= 1");
        }
        if (b.mu + b.nu < 1) {
            throw std::invalid_argument("mu + nu must be >= 1");
        }
        if (b.lambda < 0) {
            throw std::invalid_argument("lambda must be >= 0");
        }
        any_lambda = any_lambda || b.lambda >= 1;
    }
    if (!any_lambda) {
        throw std::invalid_argument("at least one lambda must be >= 1");
    }
    if (alpha_ < 1) {
        throw std::invalid_argument("alpha must be >= 1");
    }
    if (!aux_.has_integer_coefficients()) {
        throw std::invalid_argument("auxiliary polynomial must have integer coefficients");
    }
}

TelescopeSpec TelescopeSpec::factorial_power_family(std::uint64_t k, std::uint64_t l,
                                                    std::int64_t w, std::uint64_t m,
                                                    BigRational x) {
    RatPoly base = RatPoly::monomial(1, l) + RatPoly::constant(BigRational(w));
    return TelescopeSpec({{1, 0, static_cast<std::int64_t>(k)}}, 1, 0, Sign::plus, std::move(x),
                         pow(base, m));
}

std::uint64_t TelescopeSpec::mu_lambda_sum() const {
    std::uint64_t s = 0;
    for (const auto& b : blocks_) {
        s += static_cast<std::uint64_t>(b.mu * b.lambda);
    }
    return s;
}

ConvergenceParams TelescopeSpec::convergence_params() const {
    return ConvergenceParams(alpha_, mu_lambda_sum());
}

BigInt TelescopeSpec::factorial_product(std::uint64_t n) const {
    BigInt f(1);
    for (const auto& b : blocks_) {
        auto arg = b.mu * static_cast<std::int64_t>(n) + b.nu;
        f *= pow(factorial(static_cast<std::uint64_t>(arg)), static_cast<std::uint64_t>(b.lambda));
    }
    return f;
}

BigInt TelescopeSpec::rising_product(std::uint64_t n) const {
    BigInt r(1);
    for (const auto& b : blocks_) {
        BigInt base(b.mu * static_cast<std::int64_t>(n) + b.nu);
        r *= rising_block(base, static_cast<std::uint64_t>(b.mu),
                          static_cast<std::uint64_t>(b.lambda));
    }
    return r;
}

BigRational TelescopeSpec::term(std::uint64_t n) const {
    const BigRational e(to_int(eps_));
    BigRational bracket = BigRational(rising_product(n)) * aux_(BigRational(BigInt(n + 1))) *
                              pow(x_, alpha_) -
                          e * aux_(BigRational(BigInt(n)));
    return BigRational(sign_pow(eps_, n)) * BigRational(factorial_product(n)) * bracket *
           pow(x_, alpha_ * n + beta_);
}

BigRational TelescopeSpec::boundary(std::uint64_t big_n) const {
    if (big_n == 0) {
        throw std::invalid_argument("boundary term is defined for N >= 1");
    }
    return BigRational(sign_pow(eps_, big_n - 1)) * BigRational(factorial_product(big_n)) *
           aux_(BigRational(BigInt(big_n))) * pow(x_, alpha_ * big_n + beta_);
}

BigRational TelescopeSpec::rhs_constant() const {
    return -(BigRational(factorial_product(1)) * aux_(1) * pow(x_, alpha_ + beta_));
}

PartialSumResult telescope_check(const TelescopeSpec& spec, std::uint64_t big_n) {
    BigRational sum(0);
    for (std::uint64_t n = 1; n < big_n; ++n) {
        sum += spec.term(n);
    }
    return {big_n == 0 ? 0 : big_n - 1, sum, spec.boundary(big_n), spec.rhs_constant()};
}

RatPoly rising_product_poly(const TelescopeSpec& spec) {
    RatPoly r = RatPoly::constant(1);
    for (const auto& b : spec.blocks()) {
        for (std::int64_t s = 1; s <= b.mu; ++s) {
            RatPoly factor = RatPoly::linear(BigRational(b.mu), BigRational(b.nu + s));
            r *= pow(factor, static_cast<std::uint64_t>(b.lambda));
        }
    }
    return r;
}

RatPoly construct_pk(const TelescopeSpec& spec, const BigRational& t,
                     const std::vector<Prime>& primes) {
    ConvergenceParams params = spec.convergence_params();
    for (const auto& p : primes) {
        if (!in_convergence_domain(params, p, t)) {
            throw DomainError(p, "t = " + t.to_string() + " lies outside the convergence domain at p = " +
                                     p.to_string() + " (v_p(t) = " + val_rat(t, p).to_string() +
                                     ", need > " + convergence_bound(params, p).to_string() + ")");
        }
    }
    const BigRational e(to_int(spec.eps()));
    RatPoly shifted = spec.aux().shifted();
    return rising_product_poly(spec) * shifted * pow(t, spec.alpha()) - spec.aux() * e;
}

TermProfile telescope_term_profile(const TelescopeSpec& spec, const Prime& p, std::uint64_t n_max) {
    return term_val_profile([&spec](std::uint64_t n) { return spec.term(n); }, p, n_max);
}

TelescopeSpec factorial_times_n_spec() {
    return TelescopeSpec({{1, 0, 1}}, 1, 0, Sign::plus, BigRational(1), RatPoly::constant(1));
}

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::vector<TelescopeSpec> random_telescope_specs(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<TelescopeSpec> out;
    out.reserve(count);
    while (out.size() < count) {
        std::vector<FactorialBlock> blocks(static_cast<std::size_t>(draw(rng, 1, 2)));
        for (auto& b : blocks) {
            b.mu = draw(rng, 1, 3);
            b.nu = draw(rng, std::max<std::int64_t>(-2, 1 - b.mu), 2);
            b.lambda = draw(rng, 0, 2);
        }
        if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.lambda >= 1; })) {
            blocks.front().lambda = 1;
        }
        auto alpha = static_cast<std::uint64_t>(draw(rng, 1, 2));
        auto beta = static_cast<std::uint64_t>(draw(rng, 0, 1));
        Sign eps = draw(rng, 0, 1) == 0 ? Sign::plus : Sign::minus;
        std::int64_t den = draw(rng, 1, 2);
        std::int64_t num = 0;
        while (num == 0) {
            num = draw(rng, -2 * den, 2 * den);
        }
        std::vector<BigRational> aux(static_cast<std::size_t>(draw(rng, 0, 2)) + 1);
        for (auto& c : aux) {
            c = BigRational(draw(rng, -3, 3));
        }
        RatPoly a(std::move(aux));
        if (a.is_zero()) {
            a = RatPoly::constant(1);
        }
        out.emplace_back(std::move(blocks), alpha, beta, eps, BigRational(BigInt(num), BigInt(den)),
                         std::move(a));
    }
    return out;
}

}  // namespace padicsum

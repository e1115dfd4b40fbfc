#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "padicsum/convergence.hpp"
#include "padicsum/finite_identity.hpp"
#include "padicsum/prime.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/ratpoly.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

/// One factorial block ((mu n + nu)!)^lambda.
struct FactorialBlock {
    std::int64_t mu = 1;
    std::int64_t nu = 0;
    std::int64_t lambda = 1;
};

/**
 * Parameters of the telescoping family
 *
 *   sum_{n>=1} eps^n F(n) [R(n) A(n+1) x^alpha - eps A(n)] x^(alpha n + beta)
 *      = -F(1) A(1) x^(alpha + beta),
 *
 * F(n) = prod_i ((mu_i n + nu_i)!)^lambda_i and R(n) = F(n+1)/F(n) the
 * product of rising blocks. Blocks with lambda = 0 contribute a factor 1.
 */
class TelescopeSpec {
public:
    /// Validates mu_i >= 1, mu_i + nu_i >= 1, lambda_i >= 0 with at least one
    /// lambda_i >= 1, alpha >= 1, beta >= 0 and an integer-coefficient aux.
    /// Throws std::invalid_argument.
    TelescopeSpec(std::vector<FactorialBlock> blocks, std::uint64_t alpha, std::uint64_t beta,
                  Sign eps, BigRational x, RatPoly aux);

    /**
     * (n!)^k {(n+1)^k [(n+1)^l + w]^m x - (n^l + w)^m} x^n summed over n >= 1
     * equals -(1+w)^m x. This is the alpha = 1, beta = 0, eps = +1 member with
     * A(n) = (n^l + w)^m; the sum written with x^(n-1) is the same identity
     * divided by x.
     */
    static TelescopeSpec factorial_power_family(std::uint64_t k, std::uint64_t l, std::int64_t w,
                                                std::uint64_t m, BigRational x);

    const std::vector<FactorialBlock>& blocks() const { return blocks_; }
    std::uint64_t alpha() const { return alpha_; }
    std::uint64_t beta() const { return beta_; }
    Sign eps() const { return eps_; }
    const BigRational& x() const { return x_; }
    const RatPoly& aux() const { return aux_; }

    /// sum_i mu_i lambda_i
    std::uint64_t mu_lambda_sum() const;
    ConvergenceParams convergence_params() const;

    /// F(n) = prod_i ((mu_i n + nu_i)!)^lambda_i for n >= 1.
    BigInt factorial_product(std::uint64_t n) const;
    /// R(n) = prod_i rising_block(mu_i n + nu_i, mu_i, lambda_i).
    BigInt rising_product(std::uint64_t n) const;

    /// The n-th summand.
    BigRational term(std::uint64_t n) const;
    /// G(N) = eps^(N-1) F(N) A(N) x^(alpha N + beta).
    BigRational boundary(std::uint64_t big_n) const;
    /// -F(1) A(1) x^(alpha + beta).
    BigRational rhs_constant() const;

private:
    std::vector<FactorialBlock> blocks_;
    std::uint64_t alpha_;
    std::uint64_t beta_;
    Sign eps_;
    BigRational x_;
    RatPoly aux_;
};

/// I = mu = lambda = alpha = 1, nu = beta = 0, A = 1, x = 1: the series sum n! n.
TelescopeSpec factorial_times_n_spec();

/**
 * `count` valid specs drawn from a 64-bit Mersenne twister seeded with
 * `seed`: I <= 2, mu <= 3, |nu| <= 2, lambda <= 2, alpha <= 2, beta <= 1,
 * deg A <= 2 with coefficients in [-3, 3], x = a/b with |x| <= 2, x != 0.
 */
std::vector<TelescopeSpec> random_telescope_specs(std::uint64_t seed, std::size_t count);

/// sum_{n=1..N-1} term(n) against rhs_constant() + boundary(N).
PartialSumResult telescope_check(const TelescopeSpec& spec, std::uint64_t big_n);

/// Thrown when an argument lies outside the convergence domain at some prime.
class DomainError : public std::domain_error {
public:
    DomainError(const Prime& p, const std::string& what) : std::domain_error(what), prime_(p) {}
    const Prime& prime() const { return prime_; }

private:
    Prime prime_;
};

/**
 * P(n; t) = R(n) A(n+1) t^alpha - eps A(n) as a polynomial in n; of degree
 * deg A + sum mu_i lambda_i when t != 0. Throws DomainError naming the first
 * prime in `primes` at which t lies outside the convergence domain.
 */
RatPoly construct_pk(const TelescopeSpec& spec, const BigRational& t,
                     const std::vector<Prime>& primes);

/// The rising-block product R(n) as a polynomial in n.
RatPoly rising_product_poly(const TelescopeSpec& spec);

/// Valuations of the summands term(1) .. term(n_max).
TermProfile telescope_term_profile(const TelescopeSpec& spec, const Prime& p, std::uint64_t n_max);

}  // namespace padicsum

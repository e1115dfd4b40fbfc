#include <doctest.h>

#include "oracles.hpp"
#include "padicsum/combinatorics.hpp"
#include "padicsum/finite_identity.hpp"
#include "padicsum/padic_verify.hpp"
#include "padicsum/power_sum.hpp"
#include "padicsum/report.hpp"
#include "padicsum/tables.hpp"
#include "padicsum/telescope.hpp"
#include "padicsum/valuation.hpp"

using namespace padicsum;

namespace {

BigRational from_mpq(const mpq_class& q) {
    return BigRational(BigInt(mpz_class(q.get_num())), BigInt(mpz_class(q.get_den())));
}

mpq_class to_mpq(const BigRational& q) {
    mpq_class r(q.numerator().mpz(), q.denominator().mpz());
    r.canonicalize();
    return r;
}

const GeneratedTables& tables(Sign s) {
    static const GeneratedTables plus = build_tables(15, Sign::plus);
    static const GeneratedTables minus = build_tables(15, Sign::minus);
    return s == Sign::plus ? plus : minus;
}

std::vector<BigRational> x_grid() {
    return {BigRational(-3), BigRational(-2), BigRational(-1), BigRational(1), BigRational(2),
            BigRational(3),  BigRational(1, 2), BigRational(-2, 3)};
}

RatPoly P(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return RatPoly(std::move(v));
}

}  // namespace

TEST_CASE("power sums") {
    CHECK(power_sum(1, Sign::plus, 1, 4) == BigRational(23));
    CHECK(power_sum(0, Sign::minus, BigRational(5, 7), 1) == BigRational(1));
    CHECK(power_sum(0, Sign::plus, BigRational(2), 1) == BigRational(1));
    CHECK(power_sum(2, Sign::plus, 1, 3) == BigRational(9));
    CHECK(power_sum(3, Sign::plus, 1, 0) == BigRational(0));
    for (unsigned k = 0; k <= 6; ++k) {
        for (int e : {1, -1}) {
            for (const auto& x : x_grid()) {
                for (unsigned n = 0; n <= 9; ++n) {
                    REQUIRE(power_sum(k, sign_from_int(e), x, n) ==
                            from_mpq(oracle::power_sum(k, e, to_mpq(x), n)));
                }
            }
        }
    }
}

TEST_CASE("power sums by recurrence agree with direct sums") {
    CHECK(power_sum_via_recurrence(0, Sign::plus, 1, 4) == BigRational(23));
    CHECK(power_sum_via_recurrence(1, Sign::plus, 1, 3) == BigRational(9));
    for (std::uint64_t k = 0; k <= 4; ++k) {
        CHECK(power_sum_via_recurrence(k, Sign::plus, 1, 0) == BigRational(0));
    }
    for (std::uint64_t k = 0; k < 10; ++k) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            for (const auto& x : x_grid()) {
                for (std::uint64_t n = 0; n <= 12; ++n) {
                    REQUIRE(power_sum_via_recurrence(k, s, x, n) == power_sum(k + 1, s, x, n));
                }
            }
        }
    }
    CHECK_THROWS_AS(power_sum_via_recurrence(1, Sign::plus, 0, 3), std::invalid_argument);
}

TEST_CASE("finite identity examples") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
        auto r = finite_identity_check(tables(Sign::plus), 1, 1, n);
        CHECK(r.holds());
        CHECK(r.rhs_constant == BigRational(-1));
        CHECK(r.boundary == BigRational(factorial(n)));
    }
    auto m = finite_identity_check(tables(Sign::minus), 1, 1, 2);
    CHECK(m.value == BigRational(-1));
    CHECK(m.rhs_constant == BigRational(1));
    CHECK(m.boundary == BigRational(-2));
    CHECK(m.holds());

    auto k2 = finite_identity_check(tables(Sign::plus), 2, 1, 5);
    CHECK(k2.holds());
    CHECK(k2.rhs_constant == BigRational(1));
    CHECK(k2.boundary == BigRational(120 * 4));
}

TEST_CASE("finite identity holds on the full grid") {
    for (Sign s : {Sign::plus, Sign::minus}) {
        for (std::size_t k = 1; k <= 15; ++k) {
            for (const auto& x : x_grid()) {
                auto sweep = finite_identity_sweep(tables(s), k, x, 25);
                REQUIRE(sweep.size() == 25);
                for (const auto& r : sweep) {
                    REQUIRE(r.residual().is_zero());
                }
                // spot-check the running sum against a one-shot evaluation
                REQUIRE(sweep[6].value == finite_identity_check(tables(s), k, x, 7).value);
            }
        }
    }
}

TEST_CASE("a wrong U polynomial leaves a residual") {
    auto bad = tables(Sign::plus);
    bad.uv.U[2] = bad.uv.U[2] + RatPoly::constant(1);
    CHECK_FALSE(finite_identity_check(bad, 3, 2, 5).holds());
}

TEST_CASE("linear combinations of the identity") {
    SeriesSpec single(Sign::plus, {BigRational(1)}, BigRational(3));
    auto a = general_sum_check(tables(Sign::plus), single, 9);
    auto b = finite_identity_check(tables(Sign::plus), 1, 3, 9);
    CHECK(a.value == b.value);
    CHECK(a.boundary == b.boundary);

    SeriesSpec sq(Sign::plus, {BigRational(0), BigRational(1)}, BigRational(1));
    auto r = general_sum_check(tables(Sign::plus), sq, 4);
    CHECK(r.value == BigRational(73));
    CHECK(r.rhs_constant == BigRational(1));
    CHECK(r.holds());
    for (std::uint64_t n = 1; n <= 10; ++n) {
        CHECK(general_sum_check(tables(Sign::plus), sq, n).value ==
              BigRational(1) + BigRational(factorial(n)) * BigRational(static_cast<long>(n) - 1));
    }

    SeriesSpec half(Sign::minus, {BigRational(1, 2), BigRational(1, 2)}, BigRational(-2, 3));
    for (std::uint64_t n = 1; n <= 12; ++n) {
        auto h = general_sum_check(tables(Sign::minus), half, n);
        auto h1 = finite_identity_check(tables(Sign::minus), 1, BigRational(-2, 3), n);
        auto h2 = finite_identity_check(tables(Sign::minus), 2, BigRational(-2, 3), n);
        CHECK(h.holds());
        CHECK(h.value == (h1.value + h2.value) * BigRational(1, 2));
    }

    SeriesSpec mix(Sign::plus, {BigRational(3), BigRational(-1, 5), BigRational(0), BigRational(7)},
                   BigRational(2));
    for (std::uint64_t n = 1; n <= 15; ++n) {
        CHECK(general_sum_check(tables(Sign::plus), mix, n).holds());
    }
    CHECK_THROWS(SeriesSpec(Sign::plus, {BigRational(1), BigRational(0)}, BigRational(1)));
    CHECK_THROWS(general_sum_check(tables(Sign::minus), mix, 3));
}

TEST_CASE("telescoping examples") {
    auto s = factorial_times_n_spec();
    auto r = telescope_check(s, 5);
    CHECK(r.value == BigRational(119));
    CHECK(r.boundary == BigRational(120));
    CHECK(r.rhs_constant == BigRational(-1));
    CHECK(r.holds());

    auto fam = TelescopeSpec::factorial_power_family(1, 1, 0, 1, 1);
    auto f = telescope_check(fam, 4);
    CHECK(f.value == BigRational(95));
    CHECK(f.boundary == BigRational(96));
    CHECK(f.holds());

    auto empty = telescope_check(s, 1);
    CHECK(empty.value == BigRational(0));
    CHECK(empty.boundary == -empty.rhs_constant);
}

TEST_CASE("telescoping identity on random parameter sets") {
    auto specs = random_telescope_specs(2024, 20);
    REQUIRE(specs.size() == 20);
    for (const auto& s : specs) {
        CHECK(s.blocks().size() <= 2);
        CHECK(s.alpha() <= 2);
        CHECK(s.beta() <= 1);
        CHECK(s.aux().degree() <= 2);
        CHECK(s.x().abs() <= BigRational(2));
        for (std::uint64_t n = 1; n <= 15; ++n) {
            REQUIRE(telescope_check(s, n).holds());
        }
    }
    // same seed, same specs
    auto again = random_telescope_specs(2024, 20);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CHECK(again[i].term(3) == specs[i].term(3));
    }
}

TEST_CASE("power family for several parameters") {
    for (std::uint64_t k = 1; k <= 3; ++k) {
        for (std::uint64_t l = 1; l <= 2; ++l) {
            for (std::int64_t w = -1; w <= 2; ++w) {
                for (std::uint64_t m = 0; m <= 2; ++m) {
                    auto s = TelescopeSpec::factorial_power_family(k, l, w, m, BigRational(-3, 2));
                    for (std::uint64_t n = 1; n <= 8; ++n) {
                        REQUIRE(telescope_check(s, n).holds());
                    }
                    auto base = BigRational(1 + w);
                    CHECK(s.rhs_constant() == -pow(base, m) * BigRational(-3, 2));
                }
            }
        }
    }
}

TEST_CASE("telescope spec validation") {
    auto aux = RatPoly::constant(1);
    CHECK_THROWS_AS(TelescopeSpec({{0, 1, 1}}, 1, 0, Sign::plus, 1, aux), std::invalid_argument);
    CHECK_THROWS_AS(TelescopeSpec({{1, -1, 1}}, 1, 0, Sign::plus, 1, aux), std::invalid_argument);
    CHECK_THROWS_AS(TelescopeSpec({{1, 0, 0}}, 1, 0, Sign::plus, 1, aux), std::invalid_argument);
    CHECK_THROWS_AS(TelescopeSpec({{1, 0, 1}}, 0, 0, Sign::plus, 1, aux), std::invalid_argument);
    CHECK_THROWS_AS(TelescopeSpec({{1, 0, 1}}, 1, 0, Sign::plus, 1,
                                  RatPoly({BigRational(1, 2)})),
                    std::invalid_argument);
    // a lambda = 0 block next to a real one contributes nothing
    TelescopeSpec with_idle({{1, 0, 1}, {2, 1, 0}}, 1, 0, Sign::plus, 1, aux);
    TelescopeSpec without({{1, 0, 1}}, 1, 0, Sign::plus, 1, aux);
    for (std::uint64_t n = 1; n <= 6; ++n) {
        CHECK(with_idle.term(n) == without.term(n));
    }
}

TEST_CASE("constructing the polynomial P(n; t)") {
    std::vector<Prime> primes = {Prime(2), Prime(3), Prime(5)};
    auto s = factorial_times_n_spec();
    CHECK(construct_pk(s, 1, primes) == P({0, 1}));
    TelescopeSpec minus({{1, 0, 1}}, 1, 0, Sign::minus, 1, RatPoly::constant(1));
    CHECK(construct_pk(minus, 0, primes) == P({1}));
    CHECK(construct_pk(s, 0, primes) == P({-1}));

    TelescopeSpec deg({{1, 0, 1}, {2, 0, 1}}, 1, 0, Sign::plus, 1, P({1, 1}));
    CHECK(construct_pk(deg, 1, primes).degree() == 4);
    CHECK(rising_product_poly(deg).degree() == 3);

    try {
        construct_pk(s, BigRational(1, 2), primes);
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(e.prime() == Prime(2));
    }
    CHECK_NOTHROW(construct_pk(s, BigRational(1, 2), {Prime(3), Prime(5)}));
}

TEST_CASE("telescope term valuations grow") {
    auto prof = telescope_term_profile(factorial_times_n_spec(), Prime(2), 40);
    CHECK(prof.trend == TermTrend::tends_to_infinity);
    CHECK(prof.valuations.size() == 40);
    CHECK(prof.valuations[0] == Valuation::finite(0));
    CHECK(prof.valuations[1] == Valuation::finite(2));
}

TEST_CASE("p-adic verification of claimed sums") {
    const auto& t = tables(Sign::plus);
    auto lin = SeriesSpec::single(1, Sign::plus, 1);
    auto ok = padic_sum_verify(t, lin, -1, Prime(2), 60);
    CHECK(ok.pass);
    CHECK(ok.error_grows);
    for (const auto& s : ok.samples) {
        // error is N! exactly, so its valuation is v_2(N!)
        REQUIRE(s.error == val_factorial(s.n_terms, Prime(2)));
        REQUIRE(s.error == s.bound);
    }

    SeriesSpec sq(Sign::plus, {BigRational(0), BigRational(1)}, BigRational(1));
    for (std::uint64_t p : {3, 5}) {
        auto v = padic_sum_verify(t, sq, 1, Prime(p), 80);
        CHECK(v.pass);
    }

    auto wrong = padic_sum_verify(t, lin, 0, Prime(3), 60);
    CHECK_FALSE(wrong.pass);
    REQUIRE(wrong.first_violation.has_value());
    CHECK(*wrong.first_violation == 3);

    auto off = padic_sum_verify(t, lin, -2, Prime(2), 40);
    CHECK_FALSE(off.pass);
    CHECK(*off.first_violation == 2);

    CHECK_THROWS_AS(padic_sum_verify(t, SeriesSpec::single(1, Sign::plus, BigRational(1, 2)), -1,
                                     Prime(2), 10),
                    DomainError);
}

TEST_CASE("p-adic verdicts on the grid of claims") {
    for (Sign s : {Sign::plus, Sign::minus}) {
        const auto& t = tables(s);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (long xv : {1, -1, 2}) {
                auto spec = SeriesSpec::single(k, s, xv);
                auto claim = series_claim(t, spec);
                CHECK(claim == t.uv.v_poly(k)(BigRational(xv)));
                for (std::uint64_t p : {2, 3, 5}) {
                    REQUIRE(padic_sum_verify(t, spec, claim, Prime(p), 60).pass);
                    REQUIRE_FALSE(padic_sum_verify(t, spec, claim + 1, Prime(p), 60).pass);
                }
            }
        }
    }
}

TEST_CASE("report records") {
    PartialSumResult r{5, BigRational(119), BigRational(120), BigRational(-1)};
    auto rec = CheckRecord::from_partial_sum("telescope", {{"N", 5}}, r);
    auto j = rec.to_json();
    CHECK(j["check"] == "telescope");
    CHECK(j["residual"] == "0");
    CHECK(j["boundary"] == "120");
    CHECK(j["verdict"] == "PASS");
    CHECK_FALSE(j.contains("detail"));

    PartialSumResult bad{5, BigRational(118), BigRational(120), BigRational(-1)};
    auto rb = CheckRecord::from_partial_sum("telescope", {}, bad);
    CHECK(rb.to_json()["verdict"] == "FAIL");
    CHECK(rb.to_json()["residual"] == "-1");

    std::ostringstream os;
    write_table(os, {rec, rb});
    CHECK(os.str().find("PASS") != std::string::npos);
    CHECK(os.str().find("FAIL") != std::string::npos);
}

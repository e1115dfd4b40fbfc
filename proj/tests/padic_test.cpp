#include <doctest.h>

#include "oracles.hpp"
#include "padicsum/combinatorics.hpp"
#include "padicsum/convergence.hpp"
#include "padicsum/padic_approx.hpp"
#include "padicsum/valuation.hpp"
#include "random.hpp"

using namespace padicsum;

namespace {

const std::vector<std::uint64_t> kPrimes = {2, 3, 5, 7, 11, 13};

std::vector<std::int64_t> finite_values(const std::vector<Valuation>& vs) {
    std::vector<std::int64_t> out;
    for (const auto& v : vs) {
        out.push_back(v.value());
    }
    return out;
}

}  // namespace

TEST_CASE("val_int") {
    CHECK(val_int(BigInt(12), Prime(2)) == Valuation::finite(2));
    CHECK(val_int(BigInt(0), Prime(3)).is_infinite());
    CHECK(val_int(BigInt(7), Prime(5)) == Valuation::finite(0));
    CHECK(val_int(BigInt(-48), Prime(2)) == Valuation::finite(4));
}

TEST_CASE("val_factorial") {
    CHECK(val_factorial(10, Prime(2)) == Valuation::finite(8));
    CHECK(val_factorial(25, Prime(5)) == Valuation::finite(6));
    for (auto p : kPrimes) {
        CHECK(val_factorial(0, Prime(p)) == Valuation::finite(0));
    }
}

TEST_CASE("digit-sum valuation matches factoring n!") {
    for (auto p : kPrimes) {
        for (unsigned long n = 0; n <= 500; ++n) {
            auto v = val_factorial(n, Prime(p)).value();
            REQUIRE(v == oracle::factorial_valuation_counting(n, p));
            REQUIRE(v == val_int(factorial(n), Prime(p)).value());
        }
    }
    for (auto p : kPrimes) {
        for (unsigned long n : {0ul, 1ul, 17ul, 100ul, 257ul, 500ul}) {
            CHECK(val_factorial(n, Prime(p)).value() == oracle::factorial_valuation_direct(n, p));
        }
    }
}

TEST_CASE("val_rat") {
    CHECK(val_rat(BigRational(1, 4), Prime(2)) == Valuation::finite(-2));
    CHECK(val_rat(BigRational(9, 2), Prime(3)) == Valuation::finite(2));
    CHECK(val_rat(BigRational(0), Prime(7)).is_infinite());
}

TEST_CASE("valuation ordering and arithmetic") {
    CHECK(Valuation::infinity() > Valuation::finite(1000000));
    CHECK(Valuation::finite(-3) < Valuation::finite(2));
    CHECK((Valuation::finite(2) + Valuation::finite(3)) == Valuation::finite(5));
    CHECK((Valuation::finite(2) + Valuation::infinity()).is_infinite());
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
}

TEST_CASE("ultrametric inequality and multiplicativity") {
    testing_support::Draw draw;
    for (int trial = 0; trial < 500; ++trial) {
        auto a = draw.rational(200, 64);
        auto b = draw.rational(200, 64);
        for (auto pv : {2, 3, 5}) {
            Prime p(pv);
            auto va = val_rat(a, p);
            auto vb = val_rat(b, p);
            auto vs = val_rat(a + b, p);
            REQUIRE(vs >= std::min(va, vb));
            if (va != vb) {
                REQUIRE(vs == std::min(va, vb));
            }
            if (!a.is_zero() && !b.is_zero()) {
                REQUIRE(val_rat(a * b, p) == va + vb);
            }
        }
    }
}

TEST_CASE("expand") {
    auto m1 = expand(BigRational(-1), Prime(5), 3);
    CHECK(m1.offset() == 0);
    CHECK(m1.digits() == std::vector<std::uint64_t>{4, 4, 4});

    auto third = expand(BigRational(1, 3), Prime(5), 2);
    CHECK(third.offset() == 0);
    CHECK(third.digits() == std::vector<std::uint64_t>{2, 3});
    CHECK(third.to_string() == "p=5 val=0 digits=[2,3]");

    auto zero = expand(BigRational(0), Prime(3), 4);
    CHECK(zero.is_zero());
    CHECK(zero.valuation().is_infinite());

    auto j = third.to_json();
    CHECK(j["p"] == 5);
    CHECK(j["val"] == 0);
    CHECK(j["precision"] == 2);

    CHECK(expand(BigRational(50, 3), Prime(5), 2).offset() == 2);
    CHECK(expand(BigRational(1, 10), Prime(5), 2).offset() == -1);
    CHECK(expand(BigRational(7), Prime(5), kDefaultPadicPrecision).precision() == 64);
}

TEST_CASE("expand agrees with the modular-inverse digits") {
    testing_support::Draw draw;
    for (int trial = 0; trial < 200; ++trial) {
        auto q = draw.nonzero_rational(500, 500);
        for (unsigned long p : {2ul, 3ul, 7ul}) {
            auto v = val_rat(q, Prime(p)).value();
            // strip p from q, then compare digits of the unit part
            BigRational unit = q * pow_signed(BigRational(static_cast<long>(p)), -v);
            auto want = oracle::padic_digits(unit.numerator().mpz(), unit.denominator().mpz(), p, 12);
            auto got = expand(q, Prime(p), 12);
            REQUIRE(got.offset() == v);
            REQUIRE(std::vector<unsigned long>(got.digits().begin(), got.digits().end()) == want);
        }
    }
}

TEST_CASE("expand round-trips modulo p^(offset+m)") {
    testing_support::Draw draw;
    for (int trial = 0; trial < 300; ++trial) {
        auto q = draw.rational(10000, 300);
        for (std::uint64_t p : {2, 5, 11}) {
            auto a = expand(q, Prime(p), 10);
            BigRational diff = q - a.reconstruct();
            if (q.is_zero()) {
                REQUIRE(diff.is_zero());
                continue;
            }
            REQUIRE(val_rat(diff, Prime(p)) >= Valuation::finite(a.offset() + 10));
        }
    }
}

TEST_CASE("PadicApprox validates its fields") {
    CHECK_THROWS(PadicApprox(Prime(5), 0, {5}));
    CHECK_THROWS(PadicApprox(Prime(5), 0, {0, 1}));
    CHECK_NOTHROW(PadicApprox(Prime(5), 0, {0, 0}));
    CHECK_NOTHROW(PadicApprox(Prime(5), 2, {1, 0}));
}

TEST_CASE("convergence_bound") {
    CHECK(convergence_bound(ConvergenceParams(1, 1), Prime(2)) == Valuation::finite(-1));
    CHECK(convergence_bound(ConvergenceParams(1, 0), Prime(3)) == Valuation::finite(0));
    CHECK(in_convergence_domain(ConvergenceParams(1, 1), Prime(2), BigRational(3, 5)));
    CHECK_FALSE(in_convergence_domain(ConvergenceParams(1, 1), Prime(2), BigRational(1, 2)));
    CHECK_FALSE(in_convergence_domain(ConvergenceParams(1, 0), Prime(3), BigRational(2)));
    CHECK(in_convergence_domain(ConvergenceParams(1, 0), Prime(3), BigRational(3)));
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t s = 1; s <= 4; ++s) {
            CHECK(in_convergence_domain(ConvergenceParams(2, s), Prime(p), BigRational(7)));
        }
    }
    // sum mu lambda = 4, alpha = 1, p = 3: boundary -2, so v = -1 converges and -2 does not
    CHECK(in_convergence_domain(ConvergenceParams(1, 4), Prime(3), BigRational(1, 3)));
    CHECK_FALSE(in_convergence_domain(ConvergenceParams(1, 4), Prime(3), BigRational(1, 9)));
    CHECK_THROWS_AS(ConvergenceParams(0, 1), std::invalid_argument);
}

TEST_CASE("convergence_bound agrees with the real threshold") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (std::uint64_t alpha = 1; alpha <= 3; ++alpha) {
            for (std::uint64_t s = 0; s <= 7; ++s) {
                auto t = convergence_bound(ConvergenceParams(alpha, s), Prime(p)).value();
                for (std::int64_t v = -6; v <= 3; ++v) {
                    // v > -s/((p-1) alpha)  <=>  v (p-1) alpha + s > 0
                    bool real = v * static_cast<std::int64_t>((p - 1) * alpha) +
                                    static_cast<std::int64_t>(s) > 0;
                    REQUIRE((v > t) == real);
                }
            }
        }
    }
}

TEST_CASE("term valuation profiles") {
    auto fact = term_val_profile([](std::uint64_t n) { return BigRational(factorial(n)); }, Prime(2), 6);
    CHECK(finite_values(fact.valuations) == std::vector<std::int64_t>{0, 1, 1, 3, 3, 4});
    auto long_fact =
        term_val_profile([](std::uint64_t n) { return BigRational(factorial(n)); }, Prime(2), 64);
    CHECK(long_fact.trend == TermTrend::tends_to_infinity);

    auto geometric = term_val_profile(
        [](std::uint64_t n) { return pow(BigRational(1, 3), n); }, Prime(3), 20);
    CHECK(geometric.valuations[4] == Valuation::finite(-5));
    CHECK(geometric.trend == TermTrend::does_not_converge);

    auto zero = term_val_profile([](std::uint64_t) { return BigRational(0); }, Prime(5), 10);
    for (const auto& v : zero.valuations) {
        CHECK(v.is_infinite());
    }
    CHECK(zero.trend == TermTrend::tends_to_infinity);

    CHECK(classify_trend({}) == TermTrend::inconclusive);
    CHECK(std::string(to_string(TermTrend::does_not_converge)) == "does_not_converge");
}

#include <doctest.h>

#include "padicsum/a_table.hpp"
#include "padicsum/eps_split.hpp"
#include "padicsum/genpoly.hpp"
#include "padicsum/linear_solve.hpp"
#include "padicsum/ratpoly.hpp"
#include "random.hpp"

using namespace padicsum;

namespace {

RatPoly P(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return RatPoly(std::move(v));
}

bool canonical(const RatPoly& p) {
    return p.coefficients().empty() || !p.coefficients().back().is_zero();
}

}  // namespace

TEST_CASE("evaluation") {
    CHECK(P({-2, 1})(BigRational(0)) == BigRational(-2));
    CHECK(RatPoly()(BigRational(17, 3)) == BigRational(0));
    CHECK(P({3, -3, 1})(BigRational(2)) == BigRational(1));
    CHECK(P({1, 1, 1})(BigRational(1, 2)) == BigRational(7, 4));
}

TEST_CASE("shift n -> n+1") {
    CHECK(P({0, 1}).shifted() == P({1, 1}));
    CHECK(P({5}).shifted() == P({5}));
    CHECK(P({0, 0, 1}).shifted() - P({0, 0, 1}) == P({1, 2}));
    CHECK(RatPoly().shifted().is_zero());
}

TEST_CASE("canonical form and rendering") {
    CHECK(RatPoly({BigRational(1), BigRational(0), BigRational(0)}).degree() == 0);
    CHECK(RatPoly({BigRational(0)}).is_zero());
    CHECK(RatPoly().degree() == -1);
    CHECK(P({3, -3, 1}).to_string() == "n^2-3n+3");
    CHECK(P({1, 1}).to_string("x") == "x+1");
    CHECK(RatPoly().to_string() == "0");
    CHECK(RatPoly({BigRational(1, 2), BigRational(-1)}).to_string() == "-n+(1/2)");
}

TEST_CASE("ring arithmetic examples") {
    auto p = P({1, -2, 3});
    CHECK((p + (-p)).is_zero());
    CHECK(p * P({1}) == p);
    CHECK((p - p).coefficients().empty());
    CHECK(p * BigRational(0) == RatPoly());
    CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
    CHECK(pow(P({1, 1}), 0) == P({1}));
    CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
    CHECK(P({1, 2}).times_power(2) == P({0, 0, 1, 2}));
    CHECK(P({0, 0, 1}).compose(P({1, 1})) == P({1, 2, 1}));
    CHECK(RatPoly::linear(2, -1) == P({-1, 2}));
    CHECK(RatPoly::monomial(4, 3).leading() == BigRational(4));
}

TEST_CASE("(x - eps)(x + eps) = x^2 - 1 for both signs") {
    for (int e : {1, -1}) {
        auto a = P({-e, 1});
        auto b = P({e, 1});
        CHECK(a * b == P({-1, 0, 1}));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    testing_support::Draw draw;
    for (int trial = 0; trial < 300; ++trial) {
        auto a = draw.poly();
        auto b = draw.poly();
        auto c = draw.poly();
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        for (const auto& r : {a + b, a - b, a * b, a.shifted(), a.derivative()}) {
            REQUIRE(canonical(r));
        }
        if (!a.is_zero() && !b.is_zero()) {
            REQUIRE((a * b).degree() == a.degree() + b.degree());
        }
        auto t = draw.rational();
        REQUIRE((a * b)(t) == a(t) * b(t));
        REQUIRE(a.shifted()(t) == a(t + BigRational(1)));
    }
}

TEST_CASE("shift is a ring homomorphism") {
    testing_support::Draw draw(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = draw.poly(5);
        auto b = draw.poly(5);
        REQUIRE((a * b).shifted() == a.shifted() * b.shifted());
        REQUIRE((a + b).shifted() == a.shifted() + b.shifted());
    }
}

TEST_CASE("GenPoly evaluation") {
    auto plus = generate_a_table(5, Sign::plus);
    auto minus = generate_a_table(5, Sign::minus);
    // A_1 at (0, 1) is -2 + eps
    auto a1 = EpsValue::from_runs(plus[1].eval(0, 1), minus[1].eval(0, 1));
    CHECK(a1 == EpsValue{BigRational(-2), BigRational(1)});
    CHECK(a1.to_string() == "-2+e");
    for (auto t : {&plus, &minus}) {
        CHECK((*t)[0].eval(BigRational(9), BigRational(-4, 7)) == BigRational(1));
    }
    auto a5 = EpsValue::from_runs(plus[5].eval(0, 1), minus[5].eval(0, 1));
    CHECK(a5 == EpsValue{BigRational(-272), BigRational(251)});
    CHECK(a5.to_string() == "-272+251e");
}

TEST_CASE("GenPoly substitution and arithmetic") {
    GenPoly g(Sign::plus, {P({1}), P({-2, 1})});  // (n-2)x + 1
    CHECK(g.to_string() == "(n-2)x + 1");
    CHECK(g.at_n(BigRational(5)) == P({1, 3}));
    CHECK(g.at_x(BigRational(1)) == P({-1, 1}));
    CHECK(g.shifted_n() == GenPoly(Sign::plus, {P({1}), P({-1, 1})}));
    CHECK(g.times_x_power(1).coeff(2) == P({-2, 1}));
    CHECK(g.times_n_poly(P({0, 1})).coeff(0) == P({0, 1}));
    CHECK((g - g).is_zero());
    CHECK(g * GenPoly::one(Sign::plus) == g);
    CHECK_THROWS(g + GenPoly::one(Sign::minus));
    testing_support::Draw draw(11);
    for (int trial = 0; trial < 100; ++trial) {
        GenPoly a(Sign::minus, {draw.poly(2), draw.poly(2), draw.poly(2)});
        GenPoly b(Sign::minus, {draw.poly(2), draw.poly(2)});
        auto n = draw.rational();
        auto x = draw.rational();
        REQUIRE((a * b).eval(n, x) == a.eval(n, x) * b.eval(n, x));
        REQUIRE((a + b).eval(n, x) == a.eval(n, x) + b.eval(n, x));
        REQUIRE(a.shifted_n().eval(n, x) == a.eval(n + BigRational(1), x));
    }
}

TEST_CASE("symbolic rendering from the two sign runs") {
    auto plus = generate_a_table(2, Sign::plus);
    auto minus = generate_a_table(2, Sign::minus);
    CHECK(render_symbolic(plus[2], minus[2]) == "(n^2-3n+3)x^2 + (n-5)e x + 1");
    CHECK(render_symbolic(P({-1, 1}), P({1, 1})) == "x - e");
    CHECK(EpsValue{BigRational(4), BigRational(-5)}.to_string() == "4-5e");
    CHECK(EpsValue{BigRational(0), BigRational(1)}.to_string() == "e");
    CHECK(EpsValue{BigRational(1), BigRational(0)}.to_string() == "1");
    auto split = split_genpoly(plus[2], minus[2]);
    REQUIRE(split.size() == 3);
    CHECK(split[1].odd == P({-5, 1}));
    CHECK(split[1].even.is_zero());
}

TEST_CASE("exact linear solve") {
    RatMatrix a = {{BigRational(2), BigRational(1)}, {BigRational(1), BigRational(3)}};
    auto y = solve_linear(a, {BigRational(3), BigRational(5)});
    CHECK(y == std::vector<BigRational>{BigRational(4, 5), BigRational(7, 5)});
    RatMatrix singular = {{BigRational(1), BigRational(2)}, {BigRational(2), BigRational(4)}};
    CHECK_THROWS_AS(solve_linear(singular, {BigRational(1), BigRational(1)}), std::domain_error);
    RatMatrix swap = {{BigRational(0), BigRational(1)}, {BigRational(1), BigRational(0)}};
    CHECK(solve_linear(swap, {BigRational(2), BigRational(3)}) ==
          std::vector<BigRational>{BigRational(3), BigRational(2)});
}

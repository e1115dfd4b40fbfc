#include "padicsum/ode.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

LinearOde first_order_F0_ode() {
    return {{RatPoly::linear(1, -1), RatPoly::monomial(1, 2)}, RatPoly::constant(-1)};
}

LinearOde second_order_F0_ode() {
    return {{RatPoly::constant(1), RatPoly::linear(3, -1), RatPoly::monomial(1, 2)}, RatPoly()};
}

namespace {

std::size_t low_degree(const RatPoly& p) {
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            return i;
        }
    }
    return c.size();
}

TruncatedPS residual_series(const OdeResidual& r) {
    std::vector<BigRational> c = r.coeffs;
    if (c.empty()) {
        c.emplace_back(0);
    }
    return TruncatedPS(std::move(c));
}

}  // namespace

OdeResidual apply_operator(const LinearOde& ode, const TruncatedPS& f) {
    RatPoly fd = f.to_poly();
    RatPoly total = -ode.rhs;
    std::ptrdiff_t loss = 0;
    for (std::size_t d = 0; d < ode.coeffs.size(); ++d) {
        const RatPoly& a = ode.coeffs[d];
        if (!a.is_zero()) {
            total += a * fd;
            loss = std::max(loss, static_cast<std::ptrdiff_t>(d) -
                                      static_cast<std::ptrdiff_t>(low_degree(a)));
        }
        fd = fd.derivative();
    }
    // Report every degree the product can reach, zero or not.
    std::size_t width = f.order() + 1;
    for (const auto& a : ode.coeffs) {
        width = std::max(width, f.order() + 1 + static_cast<std::size_t>(std::max(a.degree(), 0)));
    }
    width = std::max(width, static_cast<std::size_t>(std::max(ode.rhs.degree(), 0) + 1));
    std::vector<BigRational> coeffs(width);
    for (std::size_t i = 0; i < width; ++i) {
        coeffs[i] = total.coeff(i);
    }
    return {std::move(coeffs), static_cast<std::ptrdiff_t>(f.order()) - loss};
}

OdeCheck check_residual(std::string name, const LinearOde& ode, const TruncatedPS& f,
                        ArtifactWhitelist artifacts) {
    OdeCheck check{std::move(name), f.order(), apply_operator(ode, f), std::move(artifacts), {}};
    const auto& c = check.residual.coeffs;
    for (std::size_t m = 0; m < c.size(); ++m) {
        auto it = check.artifacts.find(m);
        bool bad = it == check.artifacts.end() ? !c[m].is_zero()
                                               : it->second && *it->second != c[m];
        if (bad) {
            check.violations.push_back(m);
        }
    }
    // A required artifact beyond the reported width is a violation too.
    for (const auto& [m, want] : check.artifacts) {
        if (m >= c.size() && want && !want->is_zero()) {
            check.violations.push_back(m);
        }
    }
    return check;
}

CheckRecord OdeCheck::to_record() const {
    CheckRecord rec;
    rec.check = name;
    rec.params = {{"N", order}};
    rec.pass = pass();
    rec.residual = BigRational(0);
    if (!pass()) {
        std::size_t m = violations.front();
        rec.residual = m < residual.coeffs.size() ? residual.coeffs[m] : BigRational(0);
        rec.detail = "bad coefficient at degree " + std::to_string(m);
    }
    nlohmann::json found = nlohmann::json::object();
    for (const auto& [m, want] : artifacts) {
        if (m < residual.coeffs.size()) {
            found[std::to_string(m)] = residual.coeffs[m].to_string();
        }
    }
    rec.params["artifacts"] = std::move(found);
    return rec;
}

OdeCheck ode_check_first(const TruncatedPS& f) {
    return check_residual("ode-first", first_order_F0_ode(), f,
                          {{f.order() + 1, BigRational(factorial(f.order() + 1))}});
}

OdeCheck ode_check_first(std::size_t order) {
    if (order < 2) {
        throw std::invalid_argument("first-order residual check needs N >= 2");
    }
    return ode_check_first(build_F(RatPoly::constant(1), order));
}

TruncatedPS ode_residual_first(std::size_t order) {
    return residual_series(ode_check_first(order).residual);
}

OdeCheck ode_check_second(const TruncatedPS& f) {
    return check_residual("ode-second", second_order_F0_ode(), f,
                          {{f.order(), std::nullopt}, {f.order() + 1, std::nullopt}});
}

OdeCheck ode_check_second(std::size_t order) {
    if (order < 3) {
        throw std::invalid_argument("second-order residual check needs N >= 3");
    }
    return ode_check_second(build_F(RatPoly::constant(1), order));
}

TruncatedPS ode_residual_second(std::size_t order) {
    return residual_series(ode_check_second(order).residual);
}

}  // namespace padicsum

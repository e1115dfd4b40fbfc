#include "padicsum/eps_split.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicsum {

EpsValue EpsValue::from_runs(const BigRational& at_plus, const BigRational& at_minus) {
    BigRational half(BigInt(1), BigInt(2));
    return {(at_plus + at_minus) * half, (at_plus - at_minus) * half};
}

std::string EpsValue::to_string() const {
    if (odd.is_zero()) {
        return even.to_string();
    }
    std::string odd_text;
    if (odd == BigRational(1)) {
        odd_text = "e";
    } else if (odd == BigRational(-1)) {
        odd_text = "-e";
    } else {
        odd_text = odd.to_string() + "e";
    }
    if (even.is_zero()) {
        return odd_text;
    }
    return even.to_string() + (odd.sign() > 0 ? "+" : "") + odd_text;
}

EpsPoly EpsPoly::from_runs(const RatPoly& at_plus, const RatPoly& at_minus) {
    BigRational half(BigInt(1), BigInt(2));
    return {(at_plus + at_minus) * half, (at_plus - at_minus) * half};
}

std::vector<EpsPoly> split_genpoly(const GenPoly& plus, const GenPoly& minus) {
    if (plus.eps() != Sign::plus || minus.eps() != Sign::minus) {
        throw std::invalid_argument("split_genpoly expects the (+1, -1) runs in that order");
    }
    auto width = static_cast<std::size_t>(std::max(plus.degree_x(), minus.degree_x()) + 1);
    std::vector<EpsPoly> out;
    out.reserve(width);
    for (std::size_t j = 0; j < width; ++j) {
        out.push_back(EpsPoly::from_runs(plus.coeff(j), minus.coeff(j)));
    }
    return out;
}

std::string render_symbolic(const GenPoly& plus, const GenPoly& minus) {
    std::vector<std::pair<RatPoly, RatPoly>> terms;
    for (auto& part : split_genpoly(plus, minus)) {
        terms.emplace_back(std::move(part.even), std::move(part.odd));
    }
    return render_x_terms(terms);
}

std::string render_symbolic(const RatPoly& plus, const RatPoly& minus) {
    auto width = static_cast<std::size_t>(std::max(plus.degree(), minus.degree()) + 1);
    std::vector<std::pair<RatPoly, RatPoly>> terms;
    for (std::size_t j = 0; j < width; ++j) {
        auto split = EpsValue::from_runs(plus.coeff(j), minus.coeff(j));
        terms.emplace_back(RatPoly::constant(split.even), RatPoly::constant(split.odd));
    }
    return render_x_terms(terms);
}

}  // namespace padicsum

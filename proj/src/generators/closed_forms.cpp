#include "padicsum/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "padicsum/combinatorics.hpp"
#include "padicsum/errors.hpp"

namespace padicsum {

ClosedForms closed_forms(std::size_t k, Sign eps) {
    if (k == 0) {
        throw std::invalid_argument("closed forms are stated for k >= 1");
    }
    std::vector<BigRational> diag(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        BigRational c(binomial(k + 1, i + 1));
        diag[i] = ((k + i) % 2 == 0) ? c : -c;
    }
    BigRational shift(BigInt(k * (k + 3) / 2));
    BigRational sign(sign_pow(eps, k + 1));
    return {RatPoly(std::move(diag)), RatPoly::linear(sign, -shift * sign)};
}

void check_closed_forms(const ATable& table) {
    for (std::size_t k = 1; k <= table.kmax(); ++k) {
        ClosedForms cf = closed_forms(k, table.eps);
        if (table[k].coeff(k) != cf.diagonal) {
            throw CrossCheckError("A_" + std::to_string(k) + std::to_string(k) + " = " +
                                  table[k].coeff(k).to_string() + ", closed form gives " +
                                  cf.diagonal.to_string());
        }
        if (table[k].coeff(1) != cf.linear) {
            throw CrossCheckError("A_" + std::to_string(k) + "1 = " +
                                  table[k].coeff(1).to_string() + ", closed form gives " +
                                  cf.linear.to_string());
        }
    }
}

void check_structure(const ATable& table) {
    for (std::size_t k = 0; k <= table.kmax(); ++k) {
        if (table[k].degree_x() != static_cast<int>(k)) {
            throw CrossCheckError("A_" + std::to_string(k) + " has x-degree " +
                                  std::to_string(table[k].degree_x()));
        }
        for (std::size_t j = 0; j <= k; ++j) {
            const RatPoly c = table[k].coeff(j);
            if (c.degree() != static_cast<int>(j) ||
                c.leading() != BigRational(sign_pow(table.eps, k + j))) {
                throw CrossCheckError("A_{" + std::to_string(k) + "," + std::to_string(j) +
                                      "} = " + c.to_string() + " breaks the degree/leading rule");
            }
        }
    }
}

}  // namespace padicsum

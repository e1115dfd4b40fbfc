#include "padicsum/ratpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

RatPoly::RatPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RatPoly RatPoly::constant(const BigRational& c) {
    return RatPoly(std::vector<BigRational>{c});
}

RatPoly RatPoly::monomial(const BigRational& c, std::size_t degree) {
    std::vector<BigRational> coeffs(degree + 1);
    coeffs[degree] = c;
    return RatPoly(std::move(coeffs));
}

RatPoly RatPoly::variable() {
    return monomial(BigRational(1), 1);
}

RatPoly RatPoly::linear(const BigRational& a, const BigRational& b) {
    return RatPoly(std::vector<BigRational>{b, a});
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

BigRational RatPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational RatPoly::leading() const {
    return coeffs_.empty() ? BigRational(0) : coeffs_.back();
}

bool RatPoly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c.is_integer(); });
}

BigRational RatPoly::operator()(const BigRational& t) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

RatPoly RatPoly::shifted() const {
    // sum_i c_i (t+1)^i = sum_d t^d sum_{i>=d} C(i,d) c_i
    std::vector<BigRational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t d = 0; d <= i; ++d) {
            out[d] += coeffs_[i] * BigRational(binomial(i, d));
        }
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return RatPoly();
    }
    std::vector<BigRational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * BigRational(i);
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::times_power(std::size_t k) const {
    if (is_zero()) {
        return RatPoly();
    }
    std::vector<BigRational> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return RatPoly(std::move(out));
}

RatPoly RatPoly::compose(const RatPoly& q) const {
    RatPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + RatPoly::constant(*it);
    }
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const BigRational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& x : r.coeffs_) {
        x = -x;
    }
    return r;
}

std::string RatPoly::to_string(std::string_view var) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigRational& c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        bool negative = c.sign() < 0;
        BigRational mag = c.abs();
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? "-" : "+";
        }
        bool unit = mag == BigRational(1);
        if (k == 0 || !unit) {
            out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
        }
        if (k >= 1) {
            out += var;
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

RatPoly pow(const RatPoly& p, std::uint64_t exponent) {
    RatPoly result = RatPoly::constant(BigRational(1));
    for (std::uint64_t i = 0; i < exponent; ++i) {
        result *= p;
    }
    return result;
}

}  // namespace padicsum

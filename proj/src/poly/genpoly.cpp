#include "padicsum/genpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace padicsum {

GenPoly::GenPoly(Sign eps, std::vector<RatPoly> coeffs_in_x)
    : eps_(eps), coeffs_(std::move(coeffs_in_x)) {
    trim();
}

GenPoly GenPoly::one(Sign eps) {
    return GenPoly(eps, {RatPoly::constant(BigRational(1))});
}

void GenPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

void GenPoly::require_same_eps(const GenPoly& o) const {
    if (eps_ != o.eps_) {
        throw std::invalid_argument("GenPoly arithmetic across different epsilon");
    }
}

RatPoly GenPoly::coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : RatPoly();
}

BigRational GenPoly::eval(const BigRational& n, const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + (*it)(n);
    }
    return acc;
}

RatPoly GenPoly::at_n(const BigRational& n) const {
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c(n));
    }
    return RatPoly(std::move(out));
}

RatPoly GenPoly::at_x(const BigRational& x) const {
    RatPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

GenPoly GenPoly::shifted_n() const {
    std::vector<RatPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c.shifted());
    }
    return GenPoly(eps_, std::move(out));
}

GenPoly GenPoly::times_x_power(std::size_t k) const {
    if (is_zero()) {
        return *this;
    }
    std::vector<RatPoly> out(k);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return GenPoly(eps_, std::move(out));
}

GenPoly GenPoly::times_n_poly(const RatPoly& p) const {
    std::vector<RatPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c * p);
    }
    return GenPoly(eps_, std::move(out));
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
    require_same_eps(o);
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        coeffs_[j] += o.coeffs_[j];
    }
    trim();
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
    require_same_eps(o);
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        coeffs_[j] -= o.coeffs_[j];
    }
    trim();
    return *this;
}

GenPoly& GenPoly::operator*=(const GenPoly& o) {
    require_same_eps(o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<RatPoly> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

GenPoly& GenPoly::operator*=(const BigRational& c) {
    for (auto& p : coeffs_) {
        p *= c;
    }
    trim();
    return *this;
}

std::string GenPoly::to_string() const {
    std::vector<std::pair<RatPoly, RatPoly>> even_odd;
    even_odd.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        even_odd.emplace_back(c, RatPoly());
    }
    return render_x_terms(even_odd);
}

namespace {

bool single_term(const RatPoly& p) {
    int nonzero = 0;
    for (const auto& c : p.coefficients()) {
        nonzero += c.is_zero() ? 0 : 1;
    }
    return nonzero == 1;
}

// Coefficient text for a product c * rest; "" for 1, "-" for -1.
std::string factor_text(const RatPoly& c, bool has_rest) {
    if (has_rest && c.degree() == 0 && c.coeff(0).abs() == BigRational(1)) {
        return c.coeff(0).sign() < 0 ? "-" : "";
    }
    if (single_term(c)) {
        return c.to_string("n");
    }
    return "(" + c.to_string("n") + ")";
}

std::string join_factor(std::string head, const std::string& tail) {
    if (tail.empty()) {
        return head;
    }
    if (!head.empty() && head.back() != ')' && head.back() != '-' &&
        !std::isdigit(static_cast<unsigned char>(head.back()))) {
        head += ' ';
    }
    return head + tail;
}

std::string x_power(std::size_t j) {
    if (j == 0) return "";
    if (j == 1) return "x";
    return "x^" + std::to_string(j);
}

}  // namespace

std::string render_x_terms(const std::vector<std::pair<RatPoly, RatPoly>>& even_odd) {
    std::vector<std::string> terms;
    for (std::size_t j = even_odd.size(); j-- > 0;) {
        const auto& [even, odd] = even_odd[j];
        std::string xp = x_power(j);
        std::string term;
        if (even.is_zero() && odd.is_zero()) {
            continue;
        }
        if (odd.is_zero()) {
            term = join_factor(factor_text(even, !xp.empty()), xp);
        } else if (even.is_zero()) {
            term = join_factor(factor_text(odd, true), join_factor("e", xp));
        } else {
            std::string inner = even.to_string("n") + " + " +
                                join_factor(factor_text(odd, true), "e");
            term = join_factor("(" + inner + ")", xp);
        }
        terms.push_back(term);
    }
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].front() == '-') {
            out += " - " + terms[i].substr(1);
        } else {
            out += " + " + terms[i];
        }
    }
    return out;
}

}  // namespace padicsum

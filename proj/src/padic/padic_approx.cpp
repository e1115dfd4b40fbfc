#include "padicsum/padic_approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicsum {

PadicApprox::PadicApprox(Prime p, std::int64_t offset, std::vector<std::uint64_t> digits)
    : prime_(p), offset_(offset), digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw std::invalid_argument("p-adic expansion needs at least one digit");
    }
    for (auto d : digits_) {
        if (d >= prime_.value()) {
            throw std::invalid_argument("p-adic digit out of range");
        }
    }
    if (digits_.front() == 0 && !is_zero()) {
        throw std::invalid_argument("leading p-adic digit must be nonzero");
    }
}

bool PadicApprox::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

Valuation PadicApprox::valuation() const {
    return is_zero() ? Valuation::infinity() : Valuation::finite(offset_);
}

BigRational PadicApprox::reconstruct() const {
    BigInt acc(0);
    BigInt p(prime_.value());
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        acc = acc * p + BigInt(*it);
    }
    return BigRational(acc) * pow_signed(BigRational(p), offset_);
}

std::string PadicApprox::to_string() const {
    std::string out = "p=" + prime_.to_string() + " val=" + valuation().to_string() + " digits=[";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(digits_[i]);
    }
    return out + "]";
}

nlohmann::json PadicApprox::to_json() const {
    nlohmann::json j;
    j["p"] = prime_.value();
    if (is_zero()) {
        j["val"] = "inf";
    } else {
        j["val"] = offset_;
    }
    j["digits"] = digits_;
    j["precision"] = digits_.size();
    return j;
}

PadicApprox expand(const BigRational& q, const Prime& p, std::size_t digits) {
    if (digits == 0) {
        throw std::invalid_argument("expansion precision must be >= 1");
    }
    if (q.is_zero()) {
        return PadicApprox(p, 0, std::vector<std::uint64_t>(digits, 0));
    }
    BigInt prime(p.value());
    std::int64_t offset = val_rat(q, p).value();
    BigRational unit = q * pow_signed(BigRational(prime), -offset);

    BigInt modulus = pow(prime, digits);
    BigInt residue = mod_floor(unit.numerator() * mod_inverse(unit.denominator(), modulus), modulus);

    std::vector<std::uint64_t> out;
    out.reserve(digits);
    for (std::size_t i = 0; i < digits; ++i) {
        out.push_back(static_cast<std::uint64_t>(mod_floor(residue, prime).to_long()));
        residue /= prime;
    }
    return PadicApprox(p, offset, std::move(out));
}

}  // namespace padicsum

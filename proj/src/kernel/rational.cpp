#include "padicsum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace padicsum {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) {
        throw std::domain_error("rational with zero denominator");
    }
    v_ = mpq_class(num.mpz(), den.mpz());
    v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(BigInt::parse(text));
    }
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
    }
    return BigRational(BigInt::parse(text.substr(0, slash)), BigInt::parse(den_text));
}

std::string BigRational::to_string() const {
    if (is_integer()) {
        return v_.get_num().get_str(10);
    }
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

BigRational BigRational::abs() const {
    BigRational r;
    r.v_ = ::abs(v_);
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    BigRational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& v) {
    return os << v.to_string();
}

BigRational pow(const BigRational& base, std::uint64_t exponent) {
    BigInt num = pow(base.numerator(), exponent);
    BigInt den = pow(base.denominator(), exponent);
    return BigRational(num, den);
}

BigRational pow_signed(const BigRational& base, std::int64_t exponent) {
    if (exponent >= 0) {
        return pow(base, static_cast<std::uint64_t>(exponent));
    }
    return pow(base.reciprocal(), static_cast<std::uint64_t>(-exponent));
}

}  // namespace padicsum

#include "padicsum/bigint.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace padicsum {

BigInt BigInt::parse(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) {
        throw std::invalid_argument("empty integer literal");
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw std::invalid_argument("malformed integer literal '" + s + "'");
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return BigInt(mpz_class(s, 10));
}

long BigInt::to_long() const {
    if (!fits_long()) {
        throw std::overflow_error("integer " + to_string() + " does not fit in long");
    }
    return v_.get_si();
}

BigInt& BigInt::operator/=(const BigInt& o) {
    if (o.is_zero()) {
        throw std::domain_error("integer division by zero");
    }
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    if (o.is_zero()) {
        throw std::domain_error("integer division by zero");
    }
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
    return BigInt(std::move(g));
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    if (m.is_zero()) {
        throw std::domain_error("modulus is zero");
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t());
    return BigInt(std::move(r));
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    mpz_class r;
    if (m.is_zero() || mpz_invert(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t()) == 0) {
        throw std::domain_error(a.to_string() + " is not invertible modulo " + m.to_string());
    }
    return BigInt(std::move(r));
}

}  // namespace padicsum

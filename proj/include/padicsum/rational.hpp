#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "padicsum/bigint.hpp"

namespace padicsum {

/**
 * Exact rational number, always in lowest terms with a positive denominator.
 *
 * Every constructor and every arithmetic result is canonicalized, so two
 * equal values always have identical numerator/denominator pairs. A zero
 * denominator (construction or division) throws std::domain_error.
 */
class BigRational {
public:
    BigRational() = default;

    template <std::integral T>
    BigRational(T v) : v_(BigInt(v).mpz()) {}

    BigRational(const BigInt& v) : v_(v.mpz()) {}
    BigRational(const BigInt& num, const BigInt& den);

    /// Accepts "p" or "p/q" with optional sign; decimal points are rejected.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
    BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "p" when integral, otherwise "p/q".
    std::string to_string() const;

    BigRational abs() const;
    BigRational reciprocal() const;

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& v);

private:
    mpq_class v_;
};

/// base^exponent with 0^0 = 1.
BigRational pow(const BigRational& base, std::uint64_t exponent);

/// Signed exponent; negative powers of zero throw std::domain_error.
BigRational pow_signed(const BigRational& base, std::int64_t exponent);

}  // namespace padicsum

#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace padicsum {

/**
 * Arbitrary-precision signed integer.
 *
 * Thin value wrapper over GMP's mpz_class. Zero is canonical (GMP never
 * stores a negative zero) and the limb vector carries no leading zeros.
 * Division by zero throws std::domain_error instead of trapping.
 */
class BigInt {
public:
    BigInt() = default;

    template <std::signed_integral T>
    BigInt(T v) : v_(static_cast<long>(v)) {}

    template <std::unsigned_integral T>
    BigInt(T v) : v_(static_cast<unsigned long>(v)) {}

    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
    static BigInt parse(std::string_view text);

    std::string to_string() const { return v_.get_str(10); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const;

    BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }

    const mpz_class& mpz() const { return v_; }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
    /// Truncating division.
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    mpz_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Floor-mod: result in [0, |m|).
BigInt mod_floor(const BigInt& a, const BigInt& m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

}  // namespace padicsum

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "padicsum/bigint.hpp"
#include "padicsum/prime.hpp"
#include "padicsum/rational.hpp"

namespace padicsum {

/**
 * A p-adic valuation: a finite integer, or +infinity for the value zero.
 *
 * Infinity is a distinct state rather than a large sentinel, and it
 * compares greater than every finite valuation.
 */
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(std::int64_t v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Throws std::logic_error when infinite.
    std::int64_t value() const;

    /// "inf" or the decimal value.
    std::string to_string() const;

    /// inf + anything = inf.
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v);

private:
    Valuation(bool infinite, std::int64_t v) : infinite_(infinite), value_(v) {}

    bool infinite_;
    std::int64_t value_;
};

/// Largest e with p^e | n; infinity for n = 0.
Valuation val_int(const BigInt& n, const Prime& p);

/// v_p(n!) via (n - s_n) / (p - 1), s_n the base-p digit sum.
Valuation val_factorial(std::uint64_t n, const Prime& p);

/// v_p(num) - v_p(den); infinity for zero.
Valuation val_rat(const BigRational& q, const Prime& p);

}  // namespace padicsum

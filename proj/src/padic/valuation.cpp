#include "padicsum/valuation.hpp"

#include <ostream>
#include <stdexcept>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

std::int64_t Valuation::value() const {
    if (infinite_) {
        throw std::logic_error("infinite valuation has no finite value");
    }
    return value_;
}

std::string Valuation::to_string() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) {
        return Valuation::infinity();
    }
    return Valuation::finite(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) {
        return a.infinite_ <=> b.infinite_;
    }
    return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    return os << v.to_string();
}

Valuation val_int(const BigInt& n, const Prime& p) {
    if (n.is_zero()) {
        return Valuation::infinity();
    }
    mpz_class rest;
    mpz_class prime(static_cast<unsigned long>(p.value()));
    auto e = mpz_remove(rest.get_mpz_t(), n.mpz().get_mpz_t(), prime.get_mpz_t());
    return Valuation::finite(static_cast<std::int64_t>(e));
}

Valuation val_factorial(std::uint64_t n, const Prime& p) {
    auto e = (n - digit_sum(n, p)) / (p.value() - 1);
    return Valuation::finite(static_cast<std::int64_t>(e));
}

Valuation val_rat(const BigRational& q, const Prime& p) {
    if (q.is_zero()) {
        return Valuation::infinity();
    }
    return Valuation::finite(val_int(q.numerator(), p).value() -
                             val_int(q.denominator(), p).value());
}

}  // namespace padicsum

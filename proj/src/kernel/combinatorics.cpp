#include "padicsum/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace padicsum {

namespace {

class FactorialMemo {
public:
    BigInt get(std::uint64_t n) {
        std::lock_guard lock(mutex_);
        if (table_.empty()) {
            table_.emplace_back(1);
        }
        while (table_.size() <= n) {
            table_.push_back(table_.back() * BigInt(table_.size()));
        }
        return table_[n];
    }

private:
    std::mutex mutex_;
    std::vector<BigInt> table_;
};

FactorialMemo& memo() {
    static FactorialMemo instance;
    return instance;
}

}  // namespace

BigInt factorial(std::uint64_t n) {
    return memo().get(n);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return BigInt(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return BigInt(std::move(r));
}

BigInt rising_block(const BigInt& base, std::uint64_t width, std::uint64_t power) {
    if (width == 0) {
        throw std::invalid_argument("rising_block width must be >= 1");
    }
    BigInt block(1);
    for (std::uint64_t r = 1; r <= width; ++r) {
        block *= base + BigInt(r);
    }
    return pow(block, power);
}

std::uint64_t digit_sum(std::uint64_t n, const Prime& p) {
    std::uint64_t sum = 0;
    for (; n > 0; n /= p.value()) {
        sum += n % p.value();
    }
    return sum;
}

}  // namespace padicsum

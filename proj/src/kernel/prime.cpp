#include "padicsum/prime.hpp"

#include <stdexcept>

namespace padicsum {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) {
        throw std::invalid_argument(std::to_string(value) + " is not prime");
    }
}

}  // namespace padicsum

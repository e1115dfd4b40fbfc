#include "padicsum/bell.hpp"

#include "padicsum/combinatorics.hpp"

namespace padicsum {

std::vector<BigInt> bell_numbers(std::size_t kmax) {
    std::vector<BigInt> b{BigInt(1)};
    for (std::size_t k = 0; k < kmax; ++k) {
        BigInt next(0);
        for (std::size_t l = 0; l <= k; ++l) {
            next += binomial(k, l) * b[l];
        }
        b.push_back(std::move(next));
    }
    return b;
}

}  // namespace padicsum

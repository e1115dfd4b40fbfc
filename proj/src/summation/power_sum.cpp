#include "padicsum/power_sum.hpp"

#include <stdexcept>
#include <vector>

#include "padicsum/combinatorics.hpp"

namespace padicsum {

BigRational power_sum(std::uint64_t k, Sign eps, const BigRational& x, std::uint64_t n) {
    BigRational sum(0);
    BigRational running(1);  // eps^i i! x^i
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i > 0) {
            running *= BigRational(BigInt(to_int(eps)) * BigInt(i)) * x;
        }
        sum += running * BigRational(pow(BigInt(i), k));
    }
    return sum;
}

BigRational power_sum_via_recurrence(std::uint64_t k, Sign eps, const BigRational& x,
                                     std::uint64_t n) {
    if (x.is_zero()) {
        throw std::invalid_argument("power-sum recurrence divides by x; x must be nonzero");
    }
    std::vector<BigRational> s;
    s.reserve(k + 1);
    for (std::uint64_t l = 0; l <= k; ++l) {
        s.push_back(power_sum(l, eps, x, n));
    }
    BigRational boundary = BigRational(sign_pow(eps, n)) * BigRational(factorial(n)) *
                           BigRational(pow(BigInt(n), k)) * pow(x, n);
    BigRational delta = k == 0 ? BigRational(1) : BigRational(0);
    BigRational eps_x = BigRational(to_int(eps)) * x;

    BigRational next = (s[k] - delta + boundary) / eps_x - s[0];
    for (std::uint64_t l = 1; l <= k; ++l) {
        next -= BigRational(binomial(k + 1, l)) * s[l];
    }
    return next;
}

}  // namespace padicsum

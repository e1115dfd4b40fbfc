#pragma once

// Reference computations for tests. Each one takes a different route from
// the library code it is compared with: brute-force enumeration, raw GMP
// arithmetic, or a different recurrence.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// n! by a plain product.
inline mpz_class factorial(unsigned long n) {
    mpz_class f = 1;
    for (unsigned long i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

/// Exponent of p in |n| by repeated division; -1 stands for n == 0.
inline long divide_out(mpz_class n, unsigned long p) {
    if (n == 0) {
        return -1;
    }
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++e;
    }
    return e;
}

/// v_p(n!) by factoring n! itself.
inline long factorial_valuation_direct(unsigned long n, unsigned long p) {
    return divide_out(factorial(n), p);
}

/// v_p(n!) by counting multiples of p, p^2, ... in 1..n.
inline long factorial_valuation_counting(unsigned long n, unsigned long p) {
    long e = 0;
    for (unsigned long q = p; q <= n; q *= p) {
        e += static_cast<long>(n / q);
        if (q > n / p) {
            break;
        }
    }
    return e;
}

/// C(n, k) from Pascal's triangle.
inline std::vector<std::vector<mpz_class>> pascal(unsigned n) {
    std::vector<std::vector<mpz_class>> t(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) {
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
    }
    return t;
}

/// Number of set partitions of {1..n}, counted via restricted growth strings.
inline std::uint64_t bell_by_enumeration(unsigned n) {
    if (n == 0) {
        return 1;
    }
    std::uint64_t count = 0;
    std::vector<unsigned> a(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned max_used) {
        if (i == n) {
            ++count;
            return;
        }
        for (unsigned b = 0; b <= max_used + 1; ++b) {
            a[i] = b;
            rec(i + 1, std::max(max_used, b));
        }
    };
    rec(1, 0);
    return count;
}

/// B_0 .. B_n as row sums of Stirling numbers of the second kind.
inline std::vector<mpz_class> bell_by_stirling(unsigned n) {
    std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned k = 1; k <= i; ++k) {
            s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    std::vector<mpz_class> b(n + 1, 0);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned k = 0; k <= i; ++k) {
            b[i] += s[i][k];
        }
    }
    return b;
}

/// sum_{i<n} eps^i i! i^k x^i, term by term (0^0 = 1).
inline mpq_class power_sum(unsigned k, int eps, const mpq_class& x, unsigned n) {
    mpq_class total = 0;
    for (unsigned i = 0; i < n; ++i) {
        mpz_class ik;
        mpz_ui_pow_ui(ik.get_mpz_t(), i, k);
        mpq_class xi = 1;
        for (unsigned j = 0; j < i; ++j) {
            xi *= x;
        }
        mpq_class term = mpq_class(factorial(i) * ik) * xi;
        total += (eps < 0 && i % 2 == 1) ? mpq_class(-term) : term;
    }
    return total;
}

/// First m base-p digits of a/b (b coprime to p) from (a * b^-1) mod p^m.
inline std::vector<unsigned long> padic_digits(const mpz_class& a, const mpz_class& b, unsigned long p,
                                               unsigned m) {
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, m);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), mod.get_mpz_t());
    mpz_class r = (a * inv) % mod;
    if (r < 0) {
        r += mod;
    }
    std::vector<unsigned long> digits;
    for (unsigned i = 0; i < m; ++i) {
        mpz_class d = r % p;
        digits.push_back(d.get_ui());
        r /= p;
    }
    return digits;
}

/// True iff n is prime, by checking every candidate divisor.
inline bool is_prime_naive(unsigned long n) {
    if (n < 2) {
        return false;
    }
    for (unsigned long d = 2; d < n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace oracle

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padicsum/rational.hpp"
#include "padicsum/ratpoly.hpp"

namespace testing_support {

/// Fixed seed so every run draws the same cases.
inline constexpr std::uint64_t kSeed = 0x5eed2024;

class Draw {
public:
    explicit Draw(std::uint64_t seed = kSeed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    padicsum::BigRational rational(std::int64_t bound = 20, std::int64_t max_den = 9) {
        return padicsum::BigRational(padicsum::BigInt(integer(-bound, bound)),
                                     padicsum::BigInt(integer(1, max_den)));
    }

    padicsum::BigRational nonzero_rational(std::int64_t bound = 20, std::int64_t max_den = 9) {
        for (;;) {
            auto q = rational(bound, max_den);
            if (!q.is_zero()) {
                return q;
            }
        }
    }

    padicsum::RatPoly poly(int max_degree = 4) {
        std::vector<padicsum::BigRational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& x : c) {
            x = rational(6, 4);
        }
        return padicsum::RatPoly(std::move(c));
    }

    padicsum::RatPoly nonzero_poly(int max_degree = 4) {
        for (;;) {
            auto p = poly(max_degree);
            if (!p.is_zero()) {
                return p;
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support

#pragma once

#include <cstdint>
#include <string>

namespace padicsum {

/// A rational prime. Construction checks primality by trial division and
/// throws std::invalid_argument otherwise.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    std::string to_string() const { return std::to_string(value_); }

    friend bool operator==(const Prime&, const Prime&) = default;
    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

bool is_prime(std::uint64_t n);

}  // namespace padicsum

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicsum/prime.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/valuation.hpp"

namespace padicsum {

inline constexpr std::size_t kDefaultPadicPrecision = 64;

/**
 * Truncated p-adic expansion p^offset * sum(digits[i] * p^i).
 *
 * For a nonzero value digits[0] != 0 and offset is the valuation. The
 * zero value has offset 0 and all-zero digits; its valuation() is
 * infinite.
 */
class PadicApprox {
public:
    PadicApprox(Prime p, std::int64_t offset, std::vector<std::uint64_t> digits);

    const Prime& prime() const { return prime_; }
    std::int64_t offset() const { return offset_; }
    const std::vector<std::uint64_t>& digits() const { return digits_; }
    std::size_t precision() const { return digits_.size(); }

    bool is_zero() const;
    Valuation valuation() const;

    /// The exact rational p^offset * sum(digits[i] p^i).
    BigRational reconstruct() const;

    /// "p=5 val=0 digits=[2,3]"
    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    Prime prime_;
    std::int64_t offset_;
    std::vector<std::uint64_t> digits_;
};

/// Expansion of q to `digits` base-p digits starting at v_p(q).
/// Reconstruction agrees with q modulo p^(offset + digits).
PadicApprox expand(const BigRational& q, const Prime& p,
                   std::size_t digits = kDefaultPadicPrecision);

}  // namespace padicsum

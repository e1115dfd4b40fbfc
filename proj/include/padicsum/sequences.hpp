#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "padicsum/bigint.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

/// One of the named integer families A^eps(n; x) at n in {0,1}, x in {1,-1},
/// or U^eps(x) at x in {1,-1}.
struct SequenceId {
    enum class Family { A, U };

    Family family = Family::A;
    Sign eps = Sign::plus;
    int n = 0;  ///< A-family only
    int x = 1;

    /// "A+0,1", "A-1,-1", "U-1", "U+-1". Throws std::invalid_argument.
    static SequenceId parse(std::string_view text);
    std::string to_string() const;

    /// 0 for A-families (k = 0, 1, ...), 1 for U-families.
    std::int64_t first_index() const { return family == Family::A ? 0 : 1; }
};

struct IndexedSequence {
    std::int64_t first_index = 0;
    std::vector<BigInt> values;
};

/// Evaluates the family for k = first_index .. kmax.
IndexedSequence sequence_slice(const SequenceId& id, std::size_t kmax);

}  // namespace padicsum

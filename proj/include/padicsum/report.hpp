#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicsum/finite_identity.hpp"
#include "padicsum/rational.hpp"

namespace padicsum {

/**
 * One line of a verification report. JSON form:
 *   { "check": ..., "params": {...}, "residual": "0", "boundary": "...",
 *     "verdict": "PASS" }
 */
struct CheckRecord {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    std::optional<BigRational> residual;  ///< omitted when the check has no exact residual
    std::optional<BigRational> boundary;
    bool pass = false;
    std::string detail;  ///< free text, rendered only when non-empty

    static CheckRecord from_partial_sum(std::string check, nlohmann::json params,
                                        const PartialSumResult& r);

    nlohmann::json to_json() const;
};

const char* verdict_text(bool pass);

/// Fixed-width human-readable table, one row per record.
void write_table(std::ostream& os, const std::vector<CheckRecord>& records);

}  // namespace padicsum

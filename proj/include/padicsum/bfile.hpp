#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicsum/bigint.hpp"
#include "padicsum/sequences.hpp"

namespace padicsum {

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct BFileEntry {
    std::int64_t index;
    BigInt value;
    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// "index value" lines with strictly increasing indices.
class BFile {
public:
    BFile() = default;
    /// Throws std::invalid_argument unless indices strictly increase.
    explicit BFile(std::vector<BFileEntry> entries);

    static BFile from_sequence(const IndexedSequence& seq);

    /// Lines starting with '#' and blank lines are skipped. Throws BFileError.
    static BFile parse(std::istream& in);
    static BFile load(const std::string& path);

    void write(std::ostream& os) const;

    const std::vector<BFileEntry>& entries() const { return entries_; }
    std::optional<BigInt> at(std::int64_t index) const;

private:
    std::vector<BFileEntry> entries_;
};

struct CompareReport {
    std::size_t compared = 0;
    /// Local sequence index of the first |local| != |reference|.
    std::optional<std::int64_t> first_divergence;
    bool match() const { return compared > 0 && !first_divergence; }
};

/**
 * Compares |local[i]| with |reference[i + offset]| over the indices both
 * cover. No overlap counts as a mismatch.
 */
CompareReport compare_up_to_sign(const IndexedSequence& local, const BFile& reference,
                                 std::int64_t offset);

}  // namespace padicsum

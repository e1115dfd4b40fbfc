#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padicsum/prime.hpp"
#include "padicsum/rational.hpp"
#include "padicsum/sign.hpp"

namespace padicsum {

enum class OutputFormat { json, csv, text, bfile };

OutputFormat parse_format(std::string_view text);
const char* to_string(OutputFormat f);

/// Environment variable that overrides the default cache directory.
inline constexpr const char* kCacheDirEnv = "PADICSUM_CACHE_DIR";

struct RunConfig {
    std::string command;
    std::string subcommand;  ///< verify suite, cache action, sequence id
    std::vector<std::string> values;  ///< extra positionals (expand)

    std::optional<std::size_t> kmax;
    std::optional<Sign> eps;  ///< unset: both signs
    std::optional<BigRational> x;
    std::vector<Prime> primes;
    std::optional<std::uint64_t> n_max;
    std::size_t precision = 64;
    std::optional<OutputFormat> format;
    std::filesystem::path cache_dir;
    bool no_cache = false;
    std::uint64_t seed = 20240601;

    std::optional<BigRational> claim;
    std::optional<std::size_t> k;
    std::vector<BigRational> coeffs;
    std::filesystem::path bfile;
    std::int64_t offset = 0;
    std::filesystem::path out;

    std::vector<Sign> signs() const;
    OutputFormat format_or(OutputFormat fallback) const { return format.value_or(fallback); }
};

/// Exact rational literal "p" or "p/q"; decimals and exponents are rejected.
BigRational parse_rational_literal(std::string_view text);

/// Comma separated; each entry must be prime. Throws std::invalid_argument.
std::vector<Prime> parse_primes(std::string_view text);

std::vector<BigRational> parse_rational_list(std::string_view text);

Sign parse_sign(std::string_view text);

/// $PADICSUM_CACHE_DIR, else $XDG_CACHE_HOME/padicsum, else ~/.cache/padicsum,
/// else ./.padicsum-cache.
std::filesystem::path default_cache_dir();

}  // namespace padicsum

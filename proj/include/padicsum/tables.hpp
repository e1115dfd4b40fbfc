#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "padicsum/a_table.hpp"
#include "padicsum/sign.hpp"
#include "padicsum/uv.hpp"

namespace padicsum {

/// An A table together with the U/V polynomials derived from it.
struct GeneratedTables {
    ATable a;
    UVPolyTable uv;

    Sign eps() const { return a.eps; }
    std::size_t kmax() const { return a.kmax(); }
};

/// gen_A + derive_uv (with its recurrence cross-check).
GeneratedTables build_tables(std::size_t kmax, Sign eps);

/**
 * JSON table format:
 *   { "eps": 1, "kmax": K, "A": [[["a_kj,0", ...], ...], ...],
 *     "U": [["c0", ...], ...], "V": [...] }
 * All numbers are exact decimal strings ("p" or "p/q").
 */
nlohmann::json to_json(const GeneratedTables& tables);
GeneratedTables tables_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const RatPoly& p);
RatPoly poly_from_json(const nlohmann::json& j);

/// Bumped whenever the generation code changes; part of the cache key.
inline constexpr const char* kTableFormatVersion = "padicsum-tables-1";

/**
 * On-disk cache of generated tables, one JSON file per (kmax, eps). The
 * file name carries a 64-bit FNV-1a hash of "kmax|eps|version", so a
 * version bump invalidates old entries.
 */
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(std::size_t kmax, Sign eps) const;

    std::optional<GeneratedTables> load(std::size_t kmax, Sign eps) const;
    void store(const GeneratedTables& tables) const;

    /// Cached when possible, generated (and stored) otherwise.
    GeneratedTables get_or_build(std::size_t kmax, Sign eps) const;

    std::size_t clear() const;
    std::size_t entry_count() const;

private:
    std::filesystem::path dir_;
};

std::uint64_t fnv1a64(std::string_view data);

}  // namespace padicsum

#pragma once

#include <ostream>
#include <vector>

#include "padicsum/report.hpp"
#include "padicsum/run_config.hpp"
#include "padicsum/tables.hpp"

namespace padicsum {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   ///< a check failed or sequences differ
inline constexpr int kExitUsage = 2;  ///< bad input

/// Tables from the cache in cfg.cache_dir, or freshly built with cfg.no_cache.
GeneratedTables obtain_tables(const RunConfig& cfg, std::size_t kmax, Sign eps);

std::vector<CheckRecord> verify_finite(const RunConfig& cfg);
std::vector<CheckRecord> verify_telescope(const RunConfig& cfg);
std::vector<CheckRecord> verify_padic(const RunConfig& cfg);
std::vector<CheckRecord> verify_ode(const RunConfig& cfg);

int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_seq(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_seq_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_cache(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace padicsum

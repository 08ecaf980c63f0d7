#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "document.hpp"

namespace orbifold::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
    Format format = Format::kText;
    std::string out_path; // empty writes to stdout
};

int cmd_info(const std::vector<std::int64_t>& weights, const GlobalOptions& opts);
int cmd_table(const std::string& kind, const std::string& ring,
              const std::vector<std::int64_t>& weights, const GlobalOptions& opts);
int cmd_poincare(const std::vector<std::int64_t>& weights, const GlobalOptions& opts);
int cmd_verify(const std::vector<std::int64_t>& weights, std::int64_t max_total,
               const GlobalOptions& opts);
int cmd_verify_sweep(int max_n, std::int64_t max_weight, std::int64_t max_total,
                     const GlobalOptions& opts);

/// Verification cap: --max-total when given (> 0), else the
/// ORBIFOLD_RING_MAX_TOTAL environment variable, else 256. Returns a
/// negative value and prints a diagnostic when the environment variable is
/// unparseable.
std::int64_t resolve_max_total(std::int64_t cli_value);

} // namespace orbifold::cli

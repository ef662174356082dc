#pragma once

#include <cstdint>
#include <string>

namespace cis {

// Runtime knobs. Precedence: defaults < config file < CIS_* environment
// variables < command-line flags (flags are applied by the CLI layer).
struct Config {
    int enum_cap = 7;        // labeled enumeration order limit (1..8)
    int oracle_cap = 24;     // subset-oracle order limit (1..24)
    int workers = 0;         // 0 = one per hardware thread
    double audit_rate = 1e-4;  // fraction of counted masks re-checked in-scan
    std::string out_dir = ".";
};

// Load from `file_path` (flat key=value lines, '#' comments). An empty path
// falls back to $CIS_CONFIG when `use_env`. Then CIS_ENUM_CAP, CIS_ORACLE_CAP,
// CIS_WORKERS, CIS_AUDIT_RATE and CIS_OUT_DIR override; any other CIS_*
// variable is rejected. Unknown file keys and out-of-range values throw.
Config config_load(const std::string& file_path = "", bool use_env = true);

int effective_workers(const Config& cfg);

// Audit every k-th counted mask (by hash); 0 disables.
std::uint64_t audit_period_from_rate(double rate);

}  // namespace cis

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cis/certify.hpp"
#include "cis/graph.hpp"

namespace cis {

// One randomized check of the attachment inequality: gluing L and R to a
// middle part at two vertices never beats the better of the two single-point
// merges. holds == (n_merged_at_u > n_joined || n_merged_at_v > n_joined).
struct LemmaTrial {
    std::uint64_t seed = 0;  // per-trial sub-seed; replays the trial alone
    std::string left_g6;
    std::string middle_g6;
    std::string right_g6;
    int l = 0;
    int u = 0;
    int v = 0;
    int r = 0;
    std::uint64_t n_joined = 0;
    std::uint64_t n_merged_at_u = 0;
    std::uint64_t n_merged_at_v = 0;
    bool holds = false;
};

// `count` trials with connected parts of order 2..max_part_order and random
// anchors, all derived from `seed`. Replayable: same arguments, same trials.
std::vector<LemmaTrial> lemma_trials(int count, int max_part_order, std::uint64_t seed);

enum class MinConstraint { MinDeg, VertexConn };

const char* min_constraint_name(MinConstraint c);
std::optional<MinConstraint> parse_min_constraint(std::string_view name);

struct MinSearchResult {
    MinConstraint constraint = MinConstraint::MinDeg;
    int n = 0;
    int param = 0;
    std::uint64_t min_value = 0;          // 0 for an empty class
    std::vector<std::string> minimizers;  // graph6, one per iso class
    bool class_empty = true;
};

// Exhaustive minimum of the count over the CONNECTED graphs of order n with
// the given invariant value (min degree or vertex connectivity).
MinSearchResult search_min(MinConstraint c, int n, int param,
                           const ScanOptions& opts = {});

std::vector<MinSearchResult> search_min_grid(MinConstraint c, int n_lo, int n_hi,
                                             int param, const ScanOptions& opts = {});

}  // namespace cis

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cis/graph.hpp"

namespace cis {

enum class Theorem {
    MinDeg,
    Independence,
    VertexCover,
    VertexConn,
    EdgeConn,
    Chromatic,
    Bridges,
};

inline constexpr int kTheoremCount = 7;

const char* theorem_name(Theorem t);  // CLI spelling, e.g. "vertex-conn"
std::optional<Theorem> parse_theorem(std::string_view name);

// The invariant a theorem's class is defined by.
int class_parameter(Theorem t, const Graph& g);

// Type-valid parameter values (classes may be empty inside this range).
std::pair<int, int> valid_param_range(Theorem t, int n);
// Parameters the uniqueness claims cover; outside is an extension cell.
std::pair<int, int> paper_param_range(Theorem t, int n);

// The family member claimed extremal for a cell, when one is defined.
std::optional<Graph> construction_for(Theorem t, int n, int param);

struct ClassSpec {
    Theorem theorem;
    int n;
    int param;
};

struct TheoremReport {
    ClassSpec spec{Theorem::MinDeg, 0, 0};
    std::uint64_t class_size_labeled = 0;
    std::uint64_t max_value = 0;               // 0 for an empty class
    std::vector<std::string> maximizers;       // graph6, one per iso class
    bool unique_up_to_iso = false;
    bool has_construction = false;
    std::uint64_t construction_value = 0;      // meaningful iff has_construction
    bool matches_construction = false;
    bool class_empty = true;
    bool in_paper_range = false;
    std::vector<std::string> convention_notes;
};

struct ScanOptions {
    int workers = 1;                  // <= 1 runs inline
    std::uint64_t audit_period = 10000;  // 0 disables in-scan recount audits
    int enum_cap = 7;                 // labeled enumeration limit
    bool allow_n8 = false;            // opt-in for the 2^28-mask n = 8 scan
};

// One cell of a scan: a theorem and the parameter value members must have.
struct CellQuery {
    Theorem theorem;
    int param;
};

struct CellResult {
    std::uint64_t class_size = 0;
    std::uint64_t max_value = 0;
    std::vector<std::uint64_t> argmax_masks;  // ascending labeled edge masks
};

// Every labeled graph on n vertices, ascending edge mask order, through
// `filter` (pass nullptr for all) into `sink`.
void enumerate_labeled(int n,
                       const std::function<bool(const Graph&)>& filter,
                       const std::function<void(const Graph&)>& sink,
                       int enum_cap = 7, bool allow_n8 = false);

// One pass over all labeled graphs on n vertices serving many cells at once:
// each needed invariant is evaluated once per graph, the count once per
// member of any cell. Results are independent of the worker count.
std::vector<CellResult> scan_cells(int n, const std::vector<CellQuery>& queries,
                                   const ScanOptions& opts = {});

// Exhaustively certify one class: class size, maximum, maximizers up to
// isomorphism, and the comparison against the family construction.
TheoremReport certify(const ClassSpec& spec, const ScanOptions& opts = {});

// All cells of one theorem over the claimed parameter range, per order.
std::vector<TheoremReport> certify_grid(Theorem t, int n_lo, int n_hi,
                                        const ScanOptions& opts = {});

}  // namespace cis

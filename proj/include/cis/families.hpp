#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cis/graph.hpp"

namespace cis {

enum class Family {
    Complete,
    Path,
    Cycle,
    Star,
    MinDegG,   // K_{n-1} plus one vertex joined to `delta` of it
    SplitH,    // clique on n-alpha vertices fully joined to an independent set
    TuranT,    // complete multipartite, balanced parts
    BridgeJ,   // clique with pendant edges; subdivided star at b = n-2
};

inline constexpr int kFamilyCount = 8;

const char* family_name(Family f);           // CLI spelling, e.g. "mindeg-g"
std::optional<Family> parse_family(std::string_view name);
bool family_needs_param(Family f);

Graph build_complete(int n);                 // n >= 1
Graph build_path(int n);                     // n >= 1
Graph build_cycle(int n);                    // n >= 3
Graph build_star(int n);                     // n >= 1; center is vertex 0

// Clique on 0..n-2; vertex n-1 joined to 0..delta-1. 0 <= delta <= n-2.
// delta = 0 leaves vertex n-1 isolated (extension cell; disconnected).
Graph build_mindeg(int n, int delta);

// Clique on 0..n-alpha-1, independent set on the last alpha vertices, all
// cross edges present. 1 <= alpha <= n; alpha = n is the edgeless extension.
Graph build_split(int n, int alpha);

// Balanced complete multipartite with `parts` parts, sizes differing by at
// most one, consecutive blocks from vertex 0. 1 <= parts <= n.
Graph build_turan(int n, int parts);
std::vector<int> turan_part_sizes(int n, int parts);

// b < n-2: clique on 0..n-b-1 with b pendant edges at vertex 0.
// b = n-2: star subdivided once (center 0, pendant path n-2, n-1).
// b = 0 is the complete graph. 0 <= b <= n-2.
Graph build_bridge(int n, int bridges);

Graph build_family(Family f, int n, int param = 0);

// Three ways of attaching two rooted graphs to a connected middle part:
// either at the two distinct middle vertices u and v, or both at one of them.
struct GlueParts {
    Graph left;
    int l;  // root in left
    Graph middle;
    int u;
    int v;  // distinct middle vertices
    Graph right;
    int r;  // root in right
};

struct GlueTriple {
    Graph joined;       // left root identified with u, right root with v
    Graph merged_at_u;  // both roots identified with u
    Graph merged_at_v;  // both roots identified with v
    // Vertex of the output graphs hosting each original vertex. Middle keeps
    // labels 0..|M|-1; the roots map to -1 (they land on u/v per variant).
    std::vector<int> left_pos;
    std::vector<int> right_pos;
    int u;
    int v;
};

// Parts must be connected and of order >= 2; the combined order (which is
// |L| + |M| + |R| - 2) must stay within kMaxOrder.
GlueTriple glue_parts(const GlueParts& parts);

}  // namespace cis

#pragma once

#include "cis/graph.hpp"

namespace cis {

// Exact solvers. Conventions for disconnected input: vertex and edge
// connectivity are 0; bridge counts and the rest are computed per whole graph.

int min_degree(const Graph& g);

// Maximum independent set via branch and bound (max-degree pivot,
// remaining-vertices bound).
int independence_number(const Graph& g);

// n - independence_number (complement of a maximum independent set).
int vertex_cover_number(const Graph& g);

// Smallest vertex cut; n-1 for complete graphs, 0 for disconnected ones.
int vertex_connectivity(const Graph& g);

// Smallest edge cut via the 2^(n-1) vertex bipartition scan; 0 when
// disconnected or order 1.
int edge_connectivity(const Graph& g);

// Exact chromatic number: clique lower bound, greedy upper bound, then
// saturation-guided k-coloring search. order <= 20.
int chromatic_number(const Graph& g);

// Number of cut edges, by one lowpoint DFS over all components.
int bridge_count(const Graph& g);

struct InvariantProfile {
    int n = 0;
    int min_degree = 0;
    int independence = 0;
    int vertex_cover = 0;
    int vertex_connectivity = 0;
    int edge_connectivity = 0;
    int chromatic = 0;
    int bridges = 0;
    int components = 0;
};

// All invariants of one graph; order <= 10. Cross-identities (cover
// complement, connectivity chain c <= e <= min degree, range sanity) are
// asserted and violations throw logic_error.
InvariantProfile profile(const Graph& g);

}  // namespace cis

#pragma once

#include <cstdint>
#include <vector>

#include "cis/families.hpp"
#include "cis/graph.hpp"

namespace cis {

enum class CountAlgorithm { SubsetOracle, Expansion };

const char* count_algorithm_name(CountAlgorithm a);

struct CisCount {
    std::uint64_t total = 0;                  // nonempty connected vertex sets
    std::vector<std::uint64_t> per_vertex;    // sets containing each vertex
    CountAlgorithm algorithm = CountAlgorithm::SubsetOracle;
};

// Sweep of all 2^n - 1 nonempty subsets with a connectivity test each.
// Simple and independent of the expansion route. order <= 24.
CisCount count_subset_oracle(const Graph& g);

inline constexpr std::uint64_t kDefaultExpansionBudget = std::uint64_t{1} << 34;

// Expansion enumeration: every connected set is generated exactly once from
// its minimum vertex by extending with exclusive new neighbors. order <= 32;
// throws runtime_error once more than `max_sets` sets are generated.
CisCount count_expansion(const Graph& g, std::uint64_t max_sets = kDefaultExpansionBudget);

// Total-only expansion count (no per-vertex tallies); scan hot path.
std::uint64_t count_expansion_total(const Graph& g,
                                    std::uint64_t max_sets = kDefaultExpansionBudget);

// Connected sets containing vertex u, by a subset sweep anchored at u.
// order <= 24.
std::uint64_t count_rooted(const Graph& g, int u);

// Closed-form count for a family member; throws invalid_argument outside the
// parameter range where a closed form exists (notably BridgeJ needs
// param <= n-3: the subdivided star has no closed form).
std::uint64_t closed_form(Family f, int n, int param = 0);

}  // namespace cis

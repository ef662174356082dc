#include <doctest.h>

#include "cis/count.hpp"
#include "cis/families.hpp"
#include "cis/invariants.hpp"
#include "cis/rng.hpp"
#include "oracles.hpp"

using namespace cis;

namespace {

Graph random_graph(int n, Xorshift64Star& rng) {
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_bit()) {
                rows[static_cast<std::size_t>(i)] |= vertex_bit(j);
                rows[static_cast<std::size_t>(j)] |= vertex_bit(i);
            }
    return Graph::from_rows(n, rows.data());
}

}  // namespace

TEST_CASE("subset oracle on hand-checked graphs") {
    const CisCount p3 = count_subset_oracle(build_path(3));
    CHECK(p3.total == 6);
    CHECK(p3.per_vertex == std::vector<std::uint64_t>{3, 4, 3});
    CHECK(p3.algorithm == CountAlgorithm::SubsetOracle);

    CHECK(count_subset_oracle(build_path(4)).total == 10);
    CHECK(count_subset_oracle(build_cycle(4)).total == 13);
    CHECK(count_subset_oracle(build_cycle(5)).total == 21);
    CHECK(count_subset_oracle(build_star(4)).total == 11);
    CHECK(count_subset_oracle(build_complete(4)).total == 15);
    CHECK(count_subset_oracle(Graph(6)).total == 6);

    const CisCount k4 = count_subset_oracle(build_complete(4));
    CHECK(k4.per_vertex == std::vector<std::uint64_t>{8, 8, 8, 8});

    CHECK_THROWS_AS(count_subset_oracle(Graph(25)), std::invalid_argument);
}

TEST_CASE("expansion route agrees everywhere small") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            const Graph g = Graph::from_edge_mask(n, mask);
            const CisCount a = count_subset_oracle(g);
            const CisCount b = count_expansion(g);
            CHECK(a.total == b.total);
            CHECK(a.per_vertex == b.per_vertex);
            CHECK(b.algorithm == CountAlgorithm::Expansion);
            CHECK(count_expansion_total(g) == a.total);
        }
    Xorshift64Star rng(43);
    for (int n = 6; n <= 12; ++n)
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = random_graph(n, rng);
            const CisCount a = count_subset_oracle(g);
            const CisCount b = count_expansion(g);
            CHECK(a.total == b.total);
            CHECK(a.per_vertex == b.per_vertex);
        }
}

TEST_CASE("count matches the definition-level oracle") {
    Xorshift64Star rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(2 + static_cast<int>(rng.next_below(5)), rng);
        CHECK(count_subset_oracle(g).total == testor::naive_count(g));
    }
}

TEST_CASE("rooted counts") {
    const Graph g52 = build_mindeg(5, 2);
    CHECK(count_rooted(g52, 4) == 13);
    CHECK(count_rooted(build_path(3), 0) == 3);
    CHECK(count_rooted(build_path(3), 1) == 4);
    for (int n = 1; n <= 6; ++n)
        CHECK(count_rooted(build_complete(n), 0) == (std::uint64_t{1} << (n - 1)));

    Xorshift64Star rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(4));
        const Graph g = random_graph(n, rng);
        const int root = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        CHECK(count_rooted(g, root) == testor::naive_count_rooted(g, root));
        CHECK(count_rooted(g, root) == count_expansion(g).per_vertex[static_cast<unsigned>(root)]);
    }
    CHECK_THROWS_AS(count_rooted(build_path(3), 3), std::invalid_argument);
    CHECK_THROWS_AS(count_rooted(Graph(25), 0), std::invalid_argument);
}

TEST_CASE("closed forms match the published examples") {
    CHECK(closed_form(Family::MinDegG, 5, 2) == 28);
    CHECK(closed_form(Family::SplitH, 5, 2) == 30);
    CHECK(closed_form(Family::TuranT, 4, 2) == 13);
    CHECK(closed_form(Family::Complete, 6) == 63);
    CHECK(closed_form(Family::Path, 5) == 15);
    CHECK(closed_form(Family::Cycle, 6) == 31);
    CHECK(closed_form(Family::Star, 5) == 20);
    CHECK(closed_form(Family::BridgeJ, 6, 2) == 41);
    CHECK(closed_form(Family::BridgeJ, 5, 0) == 31);
    CHECK(closed_form(Family::SplitH, 4, 4) == 4);
    CHECK_THROWS_AS(closed_form(Family::BridgeJ, 6, 4), std::invalid_argument);
    CHECK_THROWS_AS(closed_form(Family::MinDegG, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(closed_form(Family::Cycle, 2), std::invalid_argument);
}

TEST_CASE("closed forms match live counts across the families") {
    for (int n = 1; n <= 9; ++n) {
        CHECK(closed_form(Family::Complete, n) == count_subset_oracle(build_complete(n)).total);
        CHECK(closed_form(Family::Path, n) == count_subset_oracle(build_path(n)).total);
        CHECK(closed_form(Family::Star, n) == count_subset_oracle(build_star(n)).total);
        if (n >= 3)
            CHECK(closed_form(Family::Cycle, n) == count_subset_oracle(build_cycle(n)).total);
        for (int a = 1; a <= n; ++a)
            CHECK(closed_form(Family::SplitH, n, a) ==
                  count_subset_oracle(build_split(n, a)).total);
        for (int l = 1; l <= n; ++l)
            CHECK(closed_form(Family::TuranT, n, l) ==
                  count_subset_oracle(build_turan(n, l)).total);
        for (int d = 0; n >= 2 && d <= n - 2; ++d)
            CHECK(closed_form(Family::MinDegG, n, d) ==
                  count_subset_oracle(build_mindeg(n, d)).total);
        for (int b = 0; b <= n - 3; ++b)
            CHECK(closed_form(Family::BridgeJ, n, b) ==
                  count_subset_oracle(build_bridge(n, b)).total);
    }
}

TEST_CASE("deletion decomposition") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            const Graph g = Graph::from_edge_mask(n, mask);
            const CisCount whole = count_subset_oracle(g);
            for (int v = 0; v < n; ++v)
                CHECK(whole.total ==
                      count_subset_oracle(delete_vertex(g, v)).total +
                          whole.per_vertex[static_cast<unsigned>(v)]);
        }
    Xorshift64Star rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng.next_below(3));
        const Graph g = random_graph(n, rng);
        const CisCount whole = count_subset_oracle(g);
        const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        CHECK(whole.total == count_subset_oracle(delete_vertex(g, v)).total +
                                 whole.per_vertex[static_cast<unsigned>(v)]);
    }
}

TEST_CASE("adding an edge strictly increases the count") {
    Xorshift64Star rng(61);
    int done = 0;
    while (done < 200) {
        const int n = 3 + static_cast<int>(rng.next_below(6));
        const Graph g = random_graph(n, rng);
        const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v || g.has_edge(u, v)) continue;
        CHECK(count_subset_oracle(testor::add_edge(g, u, v)).total >
              count_subset_oracle(g).total);
        ++done;
    }
}

TEST_CASE("only complete graphs reach the full count") {
    for (int n = 1; n <= 7; ++n)
        CHECK(count_subset_oracle(build_complete(n)).total == full_set(n));
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t complete_mask = (std::uint64_t{1} << pair_count(n)) - 1;
        for (std::uint64_t mask = 0; mask < complete_mask; ++mask)
            CHECK(count_subset_oracle(Graph::from_edge_mask(n, mask)).total < full_set(n));
    }
}

TEST_CASE("formula counts increase strictly with the degree parameter") {
    for (int n = 3; n <= 10; ++n)
        for (int d = 1; d <= n - 2; ++d)
            CHECK(closed_form(Family::MinDegG, n, d) > closed_form(Family::MinDegG, n, d - 1));
}

TEST_CASE("expansion budget aborts") {
    CHECK_THROWS_AS(count_expansion(build_complete(22), 100), std::runtime_error);
    CHECK_THROWS_AS(count_expansion_total(build_complete(22), 100), std::runtime_error);
    CHECK(count_expansion(build_complete(22), std::uint64_t{1} << 23).total ==
          (std::uint64_t{1} << 22) - 1);
}

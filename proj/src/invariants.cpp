#include "cis/invariants.hpp"

#include <algorithm>
#include <bit>

namespace cis {

int min_degree(const Graph& g) {
    int best = kMaxOrder;
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

namespace {

void mis_branch(const std::uint32_t* rows, VertexSet cand, int have, int& best) {
    if (have + std::popcount(cand) <= best) return;
    if (cand == 0) {
        best = have;
        return;
    }
    // Pivot on the densest candidate; isolated candidates all join at once.
    int pivot = -1;
    int pivot_deg = -1;
    VertexSet scan = cand;
    while (scan) {
        const int v = std::countr_zero(scan);
        scan &= scan - 1;
        const int d = std::popcount(rows[v] & cand);
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    }
    if (pivot_deg == 0) {
        best = std::max(best, have + std::popcount(cand));
        return;
    }
    const VertexSet pbit = vertex_bit(pivot);
    mis_branch(rows, cand & ~(rows[static_cast<unsigned>(pivot)] | pbit), have + 1, best);
    mis_branch(rows, cand & ~pbit, have, best);
}

}  // namespace

int independence_number(const Graph& g) {
    int best = 0;
    mis_branch(g.rows(), g.vertices(), 0, best);
    return best;
}

int vertex_cover_number(const Graph& g) { return g.order() - independence_number(g); }

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    const VertexSet full = g.vertices();
    if (!connected_within(g.rows(), full)) return 0;
    if (n == 1) return 0;
    for (int k = 1; k <= n - 2; ++k) {
        // All k-subsets of vertices, Gosper's hack.
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        while (s <= full) {
            const VertexSet rest = full & ~static_cast<VertexSet>(s);
            if (!connected_within(g.rows(), rest)) return k;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n - 1;
}

int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 1) return 0;
    if (!connected_within(g.rows(), g.vertices())) return 0;
    // lambda = min over bipartitions (S, V\S) with 0 in S of the boundary size
    int best = n * n;
    const std::uint32_t* rows = g.rows();
    const std::uint32_t half = std::uint32_t{1} << (n - 1);
    for (std::uint32_t rest = 0; rest + 1 < half; ++rest) {
        const VertexSet s = (rest << 1) | 1u;
        const VertexSet out = g.vertices() & ~s;
        int cut = 0;
        VertexSet scan = s;
        while (scan) {
            cut += std::popcount(rows[std::countr_zero(scan)] & out);
            scan &= scan - 1;
        }
        best = std::min(best, cut);
    }
    return best;
}

namespace {

int greedy_clique(const Graph& g, const int* order_by_degree) {
    VertexSet clique = 0;
    int size = 0;
    for (int idx = 0; idx < g.order(); ++idx) {
        const int v = order_by_degree[idx];
        if ((g.neighbors(v) & clique) == clique) {
            clique |= vertex_bit(v);
            ++size;
        }
    }
    return size;
}

int greedy_coloring(const Graph& g, const int* order_by_degree) {
    std::array<std::uint32_t, kMaxOrder> blocked{};  // colors used next door
    int colors = 0;
    for (int idx = 0; idx < g.order(); ++idx) {
        const int v = order_by_degree[idx];
        const int c = std::countr_zero(~blocked[static_cast<unsigned>(v)]);
        colors = std::max(colors, c + 1);
        VertexSet nbrs = g.neighbors(v);
        while (nbrs) {
            blocked[static_cast<unsigned>(std::countr_zero(nbrs))] |= std::uint32_t{1} << c;
            nbrs &= nbrs - 1;
        }
    }
    return colors;
}

struct ColorSearch {
    const std::uint32_t* rows;
    int n;
    int k;
    std::array<std::int8_t, 20> color;      // -1 = uncolored
    std::array<std::uint32_t, 20> blocked;  // colors on colored neighbors

    bool run(int colored, int max_used) {
        if (colored == n) return true;
        // Most saturated uncolored vertex, ties to the higher degree.
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<unsigned>(v)] >= 0) continue;
            const int sat = std::popcount(blocked[static_cast<unsigned>(v)]);
            const int deg = std::popcount(rows[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        if (pick_sat >= k) return false;
        const int limit = std::min(k - 1, max_used + 1);  // fresh colors interchangeable
        for (int c = 0; c <= limit; ++c) {
            if ((blocked[static_cast<unsigned>(pick)] >> c) & 1u) continue;
            color[static_cast<unsigned>(pick)] = static_cast<std::int8_t>(c);
            std::uint32_t touched = 0;
            VertexSet nbrs = rows[pick];
            while (nbrs) {
                const int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (color[static_cast<unsigned>(w)] < 0 &&
                    !((blocked[static_cast<unsigned>(w)] >> c) & 1u)) {
                    blocked[static_cast<unsigned>(w)] |= std::uint32_t{1} << c;
                    touched |= vertex_bit(w);
                }
            }
            if (run(colored + 1, std::max(max_used, c))) return true;
            while (touched) {
                const int w = std::countr_zero(touched);
                touched &= touched - 1;
                blocked[static_cast<unsigned>(w)] &= ~(std::uint32_t{1} << c);
            }
            color[static_cast<unsigned>(pick)] = -1;
        }
        return false;
    }
};

}  // namespace

int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("chromatic number limited to order <= 20");
    if (g.edge_count() == 0) return 1;

    std::array<int, 20> order{};
    for (int v = 0; v < n; ++v) order[static_cast<unsigned>(v)] = v;
    std::sort(order.begin(), order.begin() + n,
              [&g](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });

    const int ub = greedy_coloring(g, order.data());
    const int lb = std::max(greedy_clique(g, order.data()), 2);
    for (int k = lb; k < ub; ++k) {
        ColorSearch search{g.rows(), n, k, {}, {}};
        search.color.fill(-1);
        if (search.run(0, -1)) return k;
    }
    return ub;
}

namespace {

struct BridgeDfs {
    const std::uint32_t* rows;
    std::array<int, kMaxOrder> disc;
    std::array<int, kMaxOrder> low;
    int timer = 0;
    int bridges = 0;

    void run(int u, int parent) {
        disc[static_cast<unsigned>(u)] = low[static_cast<unsigned>(u)] = timer++;
        VertexSet nbrs = rows[u];
        bool skipped_parent = false;  // one parent edge only (simple graph)
        while (nbrs) {
            const int v = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (v == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[static_cast<unsigned>(v)] < 0) {
                run(v, u);
                low[static_cast<unsigned>(u)] =
                    std::min(low[static_cast<unsigned>(u)], low[static_cast<unsigned>(v)]);
                if (low[static_cast<unsigned>(v)] > disc[static_cast<unsigned>(u)]) ++bridges;
            } else {
                low[static_cast<unsigned>(u)] =
                    std::min(low[static_cast<unsigned>(u)], disc[static_cast<unsigned>(v)]);
            }
        }
    }
};

}  // namespace

int bridge_count(const Graph& g) {
    BridgeDfs dfs{g.rows(), {}, {}, 0, 0};
    dfs.disc.fill(-1);
    for (int v = 0; v < g.order(); ++v)
        if (dfs.disc[static_cast<unsigned>(v)] < 0) dfs.run(v, -1);
    return dfs.bridges;
}

InvariantProfile profile(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("profile limited to order <= 10");
    InvariantProfile p;
    p.n = n;
    p.min_degree = min_degree(g);
    p.independence = independence_number(g);
    p.vertex_cover = n - p.independence;
    p.vertex_connectivity = vertex_connectivity(g);
    p.edge_connectivity = edge_connectivity(g);
    p.chromatic = chromatic_number(g);
    p.bridges = bridge_count(g);
    p.components = static_cast<int>(components(g).size());

    const bool complete = g.edge_count() == n * (n - 1) / 2;
    if (p.independence + p.vertex_cover != n ||
        p.vertex_connectivity > p.edge_connectivity ||
        p.edge_connectivity > p.min_degree ||
        p.chromatic < 1 || p.chromatic > n || (p.chromatic == n) != complete ||
        p.bridges < 0 || p.bridges > n - 1)
        throw std::logic_error("invariant cross-identity violated");
    return p;
}

}  // namespace cis

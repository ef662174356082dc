#include "cis/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace cis {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("order must be in 1..32");
}

// Pair tables for edge-mask graphs, one per order that fits 64 mask bits.
const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pair_table(int n) {
    static const auto tables = [] {
        std::array<std::vector<std::pair<std::uint8_t, std::uint8_t>>, 12> t;
        for (int m = 1; m <= 11; ++m) {
            t[static_cast<unsigned>(m)].reserve(static_cast<unsigned>(m * (m - 1) / 2));
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    t[static_cast<unsigned>(m)].emplace_back(static_cast<std::uint8_t>(i),
                                                             static_cast<std::uint8_t>(j));
        }
        return t;
    }();
    return tables[static_cast<unsigned>(n)];
}

}  // namespace

Graph::Graph(int order) {
    check_order(order);
    n_ = order;
}

Graph Graph::from_edge_list(int order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (const Edge& e : edges) {
        if (e.v >= order) throw std::invalid_argument("edge endpoint out of range");
        if (g.has_edge(e.u, e.v)) throw std::invalid_argument("duplicate edge");
        g.link(e.u, e.v);
    }
    return g;
}

Graph Graph::from_edge_mask(int order, std::uint64_t mask) {
    check_order(order);
    if (order > 11) throw std::invalid_argument("edge masks limited to order <= 11");
    const int m = pair_count(order);
    if (m < 64 && (mask >> m) != 0) throw std::invalid_argument("edge mask has bits beyond C(n,2)");
    Graph g(order);
    const auto& table = pair_table(order);
    while (mask) {
        const int k = std::countr_zero(mask);
        mask &= mask - 1;
        const auto [i, j] = table[static_cast<unsigned>(k)];
        g.link(i, j);
    }
    return g;
}

Graph Graph::from_rows(int order, const std::uint32_t* rows) {
    Graph g(order);
    const VertexSet full = full_set(order);
    for (int i = 0; i < order; ++i) {
        const VertexSet row = rows[i];
        if (row & ~full) throw std::invalid_argument("adjacency row has bits beyond the order");
        if ((row >> i) & 1u) throw std::invalid_argument("self-loop in adjacency row");
        g.adj_[static_cast<unsigned>(i)] = row;
    }
    for (int i = 0; i < order; ++i) {
        VertexSet row = g.adj_[static_cast<unsigned>(i)];
        while (row) {
            const int j = std::countr_zero(row);
            row &= row - 1;
            if (!g.has_edge(j, i)) throw std::invalid_argument("asymmetric adjacency rows");
        }
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(static_cast<unsigned>(edge_count()));
    for (int i = 0; i < n_; ++i) {
        VertexSet above = neighbors(i) & ~full_set(i + 1);
        while (above) {
            const int j = std::countr_zero(above);
            above &= above - 1;
            out.emplace_back(i, j);
        }
    }
    return out;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11) throw std::invalid_argument("edge masks limited to order <= 11");
    std::uint64_t mask = 0;
    for (const Edge& e : edge_list()) mask |= std::uint64_t{1} << pair_index(n_, e.u, e.v);
    return mask;
}

int pair_count(int n) {
    check_order(n);
    return n * (n - 1) / 2;
}

std::pair<int, int> pair_at(int n, int k) {
    if (k < 0 || k >= pair_count(n)) throw std::invalid_argument("pair rank out of range");
    int i = 0;
    while (k >= n - 1 - i) {
        k -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + k};
}

int pair_index(int n, int i, int j) {
    if (i < 0 || j >= n || i >= j) throw std::invalid_argument("bad vertex pair");
    // pairs (0,*),(1,*),... before row i, then the offset within row i
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

bool induced_is_connected(const Graph& g, VertexSet s) {
    if (s == 0) throw std::invalid_argument("empty vertex set");
    if (s & ~g.vertices()) throw std::invalid_argument("vertex set has bits beyond the order");
    return connected_within(g.rows(), s);
}

bool is_connected(const Graph& g) { return connected_within(g.rows(), g.vertices()); }

Graph delete_vertex(const Graph& g, int v) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("cannot delete the last vertex");
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    const VertexSet below = full_set(v);
    std::array<std::uint32_t, kMaxOrder> rows{};
    for (int i = 0; i < n; ++i) {
        if (i == v) continue;
        const VertexSet row = g.neighbors(i);
        rows[static_cast<unsigned>(i < v ? i : i - 1)] = (row & below) | ((row >> 1) & ~below);
    }
    return Graph::from_rows(n - 1, rows.data());
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (unseen) {
        VertexSet comp = unseen & (~unseen + 1u);
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            do {
                next |= g.neighbors(std::countr_zero(frontier));
                frontier &= frontier - 1;
            } while (frontier);
            frontier = next & unseen & ~comp;
            comp |= frontier;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

std::string canonical_form(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw std::invalid_argument("canonical form limited to order <= 10");
    const int m = pair_count(n);
    std::array<int, 10> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        int k = 0;
        for (int i = 0; i < n; ++i) {
            const int pi = perm[static_cast<unsigned>(i)];
            for (int j = i + 1; j < n; ++j, ++k)
                if (g.has_edge(pi, perm[static_cast<unsigned>(j)]))
                    bits |= std::uint64_t{1} << (m - 1 - k);
        }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    std::string out;
    out.push_back(static_cast<char>(n));
    unsigned acc = 0;
    int nb = 0;
    for (int k = 0; k < m; ++k) {
        acc = (acc << 1) | static_cast<unsigned>((best >> (m - 1 - k)) & 1u);
        if (++nb == 8) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            nb = 0;
        }
    }
    if (nb) out.push_back(static_cast<char>(acc << (8 - nb)));
    return out;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();  // <= 32, so the single-byte header suffices
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned acc = 0;
    int nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);
    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head < 63 || head > 126) throw Graph6Error("order byte out of graph6 range", 0);
    if (head == 63) throw Graph6Error("order-0 graph unsupported", 0);
    if (head == 126) throw Graph6Error("multi-byte order form encodes n > 62", 0);
    const int n = head - 63;
    if (n > kMaxOrder) throw Graph6Error("order byte encodes n > 32", 0);

    const int m = n * (n - 1) / 2;
    const std::size_t want = 1 + static_cast<std::size_t>((m + 5) / 6);
    if (text.size() < want) throw Graph6Error("graph6 string truncated", text.size());
    if (text.size() > want) throw Graph6Error("trailing bytes after graph6 data", want);

    std::array<std::uint32_t, kMaxOrder> rows{};
    int k = 0;  // rank in the (i<j) column-major bit stream
    unsigned acc = 0;
    int nb = 0;
    std::size_t pos = 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            if (nb == 0) {
                const unsigned char c = static_cast<unsigned char>(text[pos]);
                if (c < 63 || c > 126)
                    throw Graph6Error("data byte out of graph6 range", pos);
                acc = c - 63u;
                nb = 6;
                ++pos;
            }
            if ((acc >> (nb - 1)) & 1u) {
                rows[static_cast<unsigned>(i)] |= vertex_bit(j);
                rows[static_cast<unsigned>(j)] |= vertex_bit(i);
            }
            --nb;
        }
    if (nb > 0 && (acc & ((1u << nb) - 1)) != 0)
        throw Graph6Error("nonzero padding bits", pos - 1);
    // Validate any fully-padding final byte too (m % 6 == 0 never leaves one
    // because `want` counts only data bytes).
    return Graph::from_rows(n, rows.data());
}

}  // namespace cis

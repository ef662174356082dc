#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cis {

// Vertices are 0..order-1; a VertexSet is the bitmask over them.
using VertexSet = std::uint32_t;

inline constexpr int kMaxOrder = 32;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

// Mask of the n lowest bits.
constexpr VertexSet full_set(int n) {
    return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Undirected edge, normalized to u < v.
struct Edge {
    int u;
    int v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
        if (u < 0 || v >= kMaxOrder) throw std::invalid_argument("edge endpoint out of range");
    }
    bool operator==(const Edge&) const = default;
};

// Simple undirected graph on 1..32 vertices; adjacency is one bitmask row
// per vertex. Immutable after construction; rows are symmetric, irreflexive,
// and confined to the low `order` bits.
class Graph {
public:
    explicit Graph(int order);  // edgeless

    static Graph from_edge_list(int order, const std::vector<Edge>& edges);
    // Bit k of `mask` is the pair pair_at(order, k); requires order <= 11
    // so that all C(order,2) pair bits fit in 64.
    static Graph from_edge_mask(int order, std::uint64_t mask);
    static Graph from_rows(int order, const std::uint32_t* rows);

    int order() const { return n_; }
    VertexSet vertices() const { return full_set(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<unsigned>(v)]; }
    int degree(int v) const { return std::popcount(neighbors(v)); }
    bool has_edge(int u, int v) const { return (neighbors(u) >> v) & 1u; }
    int edge_count() const;
    std::vector<Edge> edge_list() const;
    std::uint64_t edge_mask() const;  // inverse of from_edge_mask; order <= 11
    const std::uint32_t* rows() const { return adj_.data(); }

    bool operator==(const Graph&) const = default;

private:
    Graph() = default;
    void link(int u, int v) {
        adj_[static_cast<unsigned>(u)] |= vertex_bit(v);
        adj_[static_cast<unsigned>(v)] |= vertex_bit(u);
    }

    int n_ = 0;
    std::array<std::uint32_t, kMaxOrder> adj_{};
};

// Lexicographic rank of vertex pairs (i,j), i < j: (0,1),(0,2),...,(1,2),...
int pair_count(int n);  // C(n,2)
std::pair<int, int> pair_at(int n, int k);
int pair_index(int n, int i, int j);

// True iff the nonempty set s induces a connected subgraph. Unchecked hot
// path: frontier expansion over adjacency rows restricted to s.
inline bool connected_within(const std::uint32_t* rows, VertexSet s) {
    VertexSet reached = s & (~s + 1u);  // lowest bit of s
    VertexSet frontier = reached;
    while (frontier) {
        VertexSet next = 0;
        do {
            next |= rows[std::countr_zero(frontier)];
            frontier &= frontier - 1;
        } while (frontier);
        frontier = next & s & ~reached;
        reached |= frontier;
    }
    return reached == s;
}

// Checked wrapper; throws on an empty set or bits outside the graph.
bool induced_is_connected(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);

// Remove v and relabel the higher vertices down by one. order must be >= 2.
Graph delete_vertex(const Graph& g, int v);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Permutation-minimal packed adjacency bits, prefixed with the order byte.
// Equal strings certify isomorphism. order <= 10.
std::string canonical_form(const Graph& g);

struct Graph6Error : std::runtime_error {
    std::size_t position;  // byte offset of the first offending/missing byte
    Graph6Error(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

}  // namespace cis

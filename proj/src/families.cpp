#include "cis/families.hpp"

#include <array>
#include <stdexcept>

namespace cis {

const char* family_name(Family f) {
    switch (f) {
        case Family::Complete: return "complete";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Star: return "star";
        case Family::MinDegG: return "mindeg-g";
        case Family::SplitH: return "split-h";
        case Family::TuranT: return "turan-t";
        case Family::BridgeJ: return "bridge-j";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (int i = 0; i < kFamilyCount; ++i) {
        const Family f = static_cast<Family>(i);
        if (name == family_name(f)) return f;
    }
    return std::nullopt;
}

bool family_needs_param(Family f) {
    switch (f) {
        case Family::MinDegG:
        case Family::SplitH:
        case Family::TuranT:
        case Family::BridgeJ:
            return true;
        default:
            return false;
    }
}

namespace {

void check_order_at_least(int n, int least) {
    if (n < least || n > kMaxOrder) throw std::invalid_argument("order out of range");
}

}  // namespace

Graph build_complete(int n) {
    check_order_at_least(n, 1);
    std::array<std::uint32_t, kMaxOrder> rows{};
    const VertexSet full = full_set(n);
    for (int v = 0; v < n; ++v) rows[static_cast<unsigned>(v)] = full & ~vertex_bit(v);
    return Graph::from_rows(n, rows.data());
}

Graph build_path(int n) {
    check_order_at_least(n, 1);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph build_cycle(int n) {
    check_order_at_least(n, 3);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edge_list(n, edges);
}

Graph build_star(int n) {
    check_order_at_least(n, 1);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

Graph build_mindeg(int n, int delta) {
    check_order_at_least(n, 2);
    if (delta < 0 || delta > n - 2) throw std::invalid_argument("degree parameter out of range");
    std::vector<Edge> edges;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < delta; ++i) edges.emplace_back(i, n - 1);
    return Graph::from_edge_list(n, edges);
}

Graph build_split(int n, int alpha) {
    check_order_at_least(n, 1);
    if (alpha < 1 || alpha > n) throw std::invalid_argument("independence parameter out of range");
    const int clique = n - alpha;
    std::vector<Edge> edges;
    for (int i = 0; i < clique; ++i) {
        for (int j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
        for (int j = clique; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<int> turan_part_sizes(int n, int parts) {
    check_order_at_least(n, 1);
    if (parts < 1 || parts > n) throw std::invalid_argument("part count out of range");
    std::vector<int> sizes;
    const int base = n / parts;
    const int bigger = n % parts;
    for (int p = 0; p < parts; ++p) sizes.push_back(base + (p < bigger ? 1 : 0));
    return sizes;
}

Graph build_turan(int n, int parts) {
    const std::vector<int> sizes = turan_part_sizes(n, parts);
    std::vector<int> part_of(static_cast<unsigned>(n));
    int v = 0;
    for (int p = 0; p < parts; ++p)
        for (int k = 0; k < sizes[static_cast<unsigned>(p)]; ++k) part_of[static_cast<unsigned>(v++)] = p;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<unsigned>(i)] != part_of[static_cast<unsigned>(j)])
                edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph build_bridge(int n, int bridges) {
    check_order_at_least(n, 2);
    if (bridges < 0 || bridges > n - 2)
        throw std::invalid_argument("bridge parameter out of range");
    if (bridges == 0) return build_complete(n);
    if (bridges == n - 2) {
        // Star with one subdivided edge: center 0, its leaves, then the
        // subdivision path 0 - (n-2) - (n-1).
        std::vector<Edge> edges;
        for (int v = 1; v <= n - 2; ++v) edges.emplace_back(0, v);
        edges.emplace_back(n - 2, n - 1);
        return Graph::from_edge_list(n, edges);
    }
    std::vector<Edge> edges;
    const int clique = n - bridges;
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j) edges.emplace_back(i, j);
    for (int v = clique; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

Graph build_family(Family f, int n, int param) {
    switch (f) {
        case Family::Complete: return build_complete(n);
        case Family::Path: return build_path(n);
        case Family::Cycle: return build_cycle(n);
        case Family::Star: return build_star(n);
        case Family::MinDegG: return build_mindeg(n, param);
        case Family::SplitH: return build_split(n, param);
        case Family::TuranT: return build_turan(n, param);
        case Family::BridgeJ: return build_bridge(n, param);
    }
    throw std::invalid_argument("unknown family");
}

GlueTriple glue_parts(const GlueParts& parts) {
    const Graph& left = parts.left;
    const Graph& middle = parts.middle;
    const Graph& right = parts.right;
    if (left.order() < 2 || middle.order() < 2 || right.order() < 2)
        throw std::invalid_argument("glue parts must have order >= 2");
    if (!is_connected(left) || !is_connected(middle) || !is_connected(right))
        throw std::invalid_argument("glue parts must be connected");
    if (parts.l < 0 || parts.l >= left.order() || parts.r < 0 || parts.r >= right.order())
        throw std::invalid_argument("anchor vertex out of range");
    if (parts.u < 0 || parts.u >= middle.order() || parts.v < 0 || parts.v >= middle.order())
        throw std::invalid_argument("attachment vertex out of range");
    if (parts.u == parts.v) throw std::invalid_argument("attachment vertices must differ");
    const int total = left.order() + middle.order() + right.order() - 2;
    if (total > kMaxOrder) throw std::invalid_argument("glued graph would exceed order 32");

    // Middle keeps its labels; left's non-anchor vertices follow, then
    // right's. The anchors map to -1 and land on u or v per variant.
    std::vector<int> left_pos(static_cast<unsigned>(left.order()), -1);
    for (int x = 0; x < left.order(); ++x)
        if (x != parts.l)
            left_pos[static_cast<unsigned>(x)] = middle.order() + (x < parts.l ? x : x - 1);
    std::vector<int> right_pos(static_cast<unsigned>(right.order()), -1);
    const int right_base = middle.order() + left.order() - 1;
    for (int x = 0; x < right.order(); ++x)
        if (x != parts.r)
            right_pos[static_cast<unsigned>(x)] = right_base + (x < parts.r ? x : x - 1);

    const auto assemble = [&](int left_anchor, int right_anchor) {
        std::array<std::uint32_t, kMaxOrder> rows{};
        const auto link = [&rows](int a, int b) {
            rows[static_cast<unsigned>(a)] |= vertex_bit(b);
            rows[static_cast<unsigned>(b)] |= vertex_bit(a);
        };
        for (const Edge& e : middle.edge_list()) link(e.u, e.v);
        const auto lpos = [&](int x) {
            return x == parts.l ? left_anchor : left_pos[static_cast<unsigned>(x)];
        };
        const auto rpos = [&](int x) {
            return x == parts.r ? right_anchor : right_pos[static_cast<unsigned>(x)];
        };
        for (const Edge& e : left.edge_list()) link(lpos(e.u), lpos(e.v));
        for (const Edge& e : right.edge_list()) link(rpos(e.u), rpos(e.v));
        return Graph::from_rows(total, rows.data());
    };

    return GlueTriple{assemble(parts.u, parts.v),
                      assemble(parts.u, parts.u),
                      assemble(parts.v, parts.v),
                      std::move(left_pos),
                      std::move(right_pos),
                      parts.u,
                      parts.v};
}

}  // namespace cis

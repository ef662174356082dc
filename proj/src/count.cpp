#include "cis/count.hpp"

#include <bit>
#include <stdexcept>

namespace cis {

const char* count_algorithm_name(CountAlgorithm a) {
    return a == CountAlgorithm::SubsetOracle ? "subset-oracle" : "expansion";
}

CisCount count_subset_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("subset oracle limited to order <= 24");
    CisCount out;
    out.algorithm = CountAlgorithm::SubsetOracle;
    out.per_vertex.assign(static_cast<unsigned>(n), 0);
    const std::uint32_t* rows = g.rows();
    const VertexSet full = g.vertices();
    for (VertexSet s = 1;; ++s) {
        if (connected_within(rows, s)) {
            ++out.total;
            VertexSet scan = s;
            while (scan) {
                ++out.per_vertex[static_cast<unsigned>(std::countr_zero(scan))];
                scan &= scan - 1;
            }
        }
        if (s == full) break;
    }
    return out;
}

namespace {

struct ExpansionState {
    const std::uint32_t* rows;
    std::uint64_t* per_vertex;  // may be null
    std::uint64_t remaining;
    std::uint64_t total = 0;

    void tally(VertexSet sub) {
        if (remaining == 0) throw std::runtime_error("connected-set enumeration budget exceeded");
        --remaining;
        ++total;
        if (per_vertex) {
            while (sub) {
                ++per_vertex[std::countr_zero(sub)];
                sub &= sub - 1;
            }
        }
    }

    // Each connected set is reached exactly once: from its minimum vertex,
    // extending only by neighbors not previously visible (`seen`).
    void grow(VertexSet allowed, VertexSet sub, VertexSet ext, VertexSet seen) {
        tally(sub);
        while (ext) {
            const VertexSet wbit = ext & (~ext + 1u);
            ext ^= wbit;
            const VertexSet reach = rows[std::countr_zero(wbit)] & allowed & ~seen;
            grow(allowed, sub | wbit, ext | reach, seen | wbit | reach);
        }
    }
};

std::uint64_t expansion_run(const Graph& g, std::uint64_t* per_vertex, std::uint64_t max_sets) {
    const int n = g.order();
    ExpansionState state{g.rows(), per_vertex, max_sets, 0};
    for (int root = 0; root < n; ++root) {
        const VertexSet allowed = g.vertices() & ~full_set(root + 1);  // vertices > root
        const VertexSet rbit = vertex_bit(root);
        const VertexSet ext = g.neighbors(root) & allowed;
        state.grow(allowed, rbit, ext, rbit | ext);
    }
    return state.total;
}

}  // namespace

CisCount count_expansion(const Graph& g, std::uint64_t max_sets) {
    CisCount out;
    out.algorithm = CountAlgorithm::Expansion;
    out.per_vertex.assign(static_cast<unsigned>(g.order()), 0);
    out.total = expansion_run(g, out.per_vertex.data(), max_sets);
    return out;
}

std::uint64_t count_expansion_total(const Graph& g, std::uint64_t max_sets) {
    return expansion_run(g, nullptr, max_sets);
}

std::uint64_t count_rooted(const Graph& g, int u) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("rooted count limited to order <= 24");
    if (u < 0 || u >= n) throw std::invalid_argument("root vertex out of range");
    const std::uint32_t* rows = g.rows();
    const VertexSet ubit = vertex_bit(u);
    const VertexSet others = g.vertices() & ~ubit;
    std::uint64_t total = 0;
    VertexSet s = 0;
    while (true) {
        if (connected_within(rows, s | ubit)) ++total;
        if (s == others) break;
        s = (s - others) & others;  // next subset of `others`
    }
    return total;
}

std::uint64_t closed_form(Family f, int n, int param) {
    if (n < 1 || n > 63) throw std::invalid_argument("order out of closed-form range");
    const auto pow2 = [](int e) { return std::uint64_t{1} << e; };
    switch (f) {
        case Family::Complete:
            return pow2(n) - 1;
        case Family::Path:
            return static_cast<std::uint64_t>(n) * (n + 1) / 2;
        case Family::Cycle:
            if (n < 3) throw std::invalid_argument("cycles need order >= 3");
            return static_cast<std::uint64_t>(n) * (n - 1) + 1;
        case Family::Star:
            return pow2(n - 1) + static_cast<std::uint64_t>(n) - 1;
        case Family::MinDegG:
            if (n < 2 || param < 0 || param > n - 2)
                throw std::invalid_argument("degree parameter out of range");
            return pow2(n) - pow2(n - 1 - param);
        case Family::SplitH:
            if (param < 1 || param > n)
                throw std::invalid_argument("independence parameter out of range");
            return (pow2(n - param) - 1) * pow2(param) + static_cast<std::uint64_t>(param);
        case Family::TuranT: {
            if (param < 1 || param > n)
                throw std::invalid_argument("part count out of range");
            std::uint64_t missing = 0;  // sets stuck inside one part
            for (int size : turan_part_sizes(n, param))
                missing += pow2(size) - static_cast<std::uint64_t>(size) - 1;
            return pow2(n) - 1 - missing;
        }
        case Family::BridgeJ:
            if (param < 0 || param > n - 3)
                throw std::invalid_argument(
                    "no closed form at or beyond bridge parameter n-2");
            return (pow2(n - param) - 1) + static_cast<std::uint64_t>(param) +
                   (pow2(param) - 1) * pow2(n - param - 1);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace cis

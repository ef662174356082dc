#include "cis/certify.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "cis/count.hpp"
#include "cis/families.hpp"
#include "cis/invariants.hpp"
#include "cis/rng.hpp"

namespace cis {

const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::MinDeg: return "mindeg";
        case Theorem::Independence: return "independence";
        case Theorem::VertexCover: return "vertex-cover";
        case Theorem::VertexConn: return "vertex-conn";
        case Theorem::EdgeConn: return "edge-conn";
        case Theorem::Chromatic: return "chromatic";
        case Theorem::Bridges: return "bridges";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
    for (int i = 0; i < kTheoremCount; ++i) {
        const Theorem t = static_cast<Theorem>(i);
        if (name == theorem_name(t)) return t;
    }
    return std::nullopt;
}

int class_parameter(Theorem t, const Graph& g) {
    switch (t) {
        case Theorem::MinDeg: return min_degree(g);
        case Theorem::Independence: return independence_number(g);
        case Theorem::VertexCover: return vertex_cover_number(g);
        case Theorem::VertexConn: return vertex_connectivity(g);
        case Theorem::EdgeConn: return edge_connectivity(g);
        case Theorem::Chromatic: return chromatic_number(g);
        case Theorem::Bridges: return bridge_count(g);
    }
    throw std::invalid_argument("unknown theorem");
}

std::pair<int, int> valid_param_range(Theorem t, int n) {
    switch (t) {
        case Theorem::MinDeg: return {0, n - 1};
        case Theorem::Independence: return {1, n};
        case Theorem::VertexCover: return {0, n - 1};
        case Theorem::VertexConn: return {0, n - 1};
        case Theorem::EdgeConn: return {0, n - 1};
        case Theorem::Chromatic: return {1, n};
        case Theorem::Bridges: return {0, n - 1};
    }
    throw std::invalid_argument("unknown theorem");
}

std::pair<int, int> paper_param_range(Theorem t, int n) {
    switch (t) {
        case Theorem::MinDeg: return {1, n - 2};
        case Theorem::Independence: return {1, n - 1};
        case Theorem::VertexCover: return {1, n - 1};
        case Theorem::VertexConn: return {1, n - 2};
        case Theorem::EdgeConn: return {1, n - 2};
        case Theorem::Chromatic: return {2, n};
        case Theorem::Bridges: return {0, n - 3};
    }
    throw std::invalid_argument("unknown theorem");
}

std::optional<Graph> construction_for(Theorem t, int n, int param) {
    switch (t) {
        case Theorem::MinDeg:
        case Theorem::VertexConn:
        case Theorem::EdgeConn:
            if (param > n - 2) return std::nullopt;  // only K_n fits; no family member
            return build_mindeg(n, param);
        case Theorem::Independence:
            return build_split(n, param);
        case Theorem::VertexCover:
            return build_split(n, n - param);
        case Theorem::Chromatic:
            return build_turan(n, param);
        case Theorem::Bridges:
            if (param > n - 2) return std::nullopt;
            return build_bridge(n, param);
    }
    return std::nullopt;
}

void enumerate_labeled(int n, const std::function<bool(const Graph&)>& filter,
                       const std::function<void(const Graph&)>& sink,
                       int enum_cap, bool allow_n8) {
    if (n < 1) throw std::invalid_argument("order out of range");
    const int cap = allow_n8 ? std::max(enum_cap, 8) : enum_cap;
    if (n > cap || n > 8)
        throw std::invalid_argument("labeled enumeration capped at order 7 (8 by opt-in)");
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph g = Graph::from_edge_mask(n, mask);
        if (!filter || filter(g)) sink(g);
    }
}

namespace {

// Lazy per-graph invariant cache; VertexCover rides on Independence.
struct ClassifyCache {
    std::array<int, kTheoremCount> value{};
    std::array<bool, kTheoremCount> have{};

    int get(Theorem t, const Graph& g) {
        if (t == Theorem::VertexCover) return g.order() - get(Theorem::Independence, g);
        const auto i = static_cast<unsigned>(t);
        if (!have[i]) {
            value[i] = class_parameter(t, g);
            have[i] = true;
        }
        return value[i];
    }
};

void scan_range(int n, const std::vector<CellQuery>& queries, std::uint64_t lo,
                std::uint64_t hi, std::uint64_t audit_period,
                std::vector<CellResult>& results) {
    results.assign(queries.size(), CellResult{});
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const Graph g = Graph::from_edge_mask(n, mask);
        ClassifyCache cache;
        std::uint64_t count = 0;
        bool counted = false;
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
            if (cache.get(queries[qi].theorem, g) != queries[qi].param) continue;
            CellResult& cell = results[qi];
            ++cell.class_size;
            if (!counted) {
                count = count_expansion_total(g);
                counted = true;
                if (audit_period != 0 && splitmix64(mask) % audit_period == 0 &&
                    count_subset_oracle(g).total != count)
                    throw std::logic_error("count audit mismatch between algorithms");
            }
            if (count > cell.max_value) {
                cell.max_value = count;
                cell.argmax_masks.assign(1, mask);
            } else if (count == cell.max_value) {
                cell.argmax_masks.push_back(mask);
            }
        }
    }
}

}  // namespace

std::vector<CellResult> scan_cells(int n, const std::vector<CellQuery>& queries,
                                   const ScanOptions& opts) {
    if (n < 1) throw std::invalid_argument("order out of range");
    const int cap = opts.allow_n8 ? std::max(opts.enum_cap, 8) : opts.enum_cap;
    if (n > cap || n > 8)
        throw std::invalid_argument("labeled enumeration capped at order 7 (8 by opt-in)");
    for (const CellQuery& q : queries) {
        const auto [lo, hi] = valid_param_range(q.theorem, n);
        if (q.param < lo || q.param > hi)
            throw std::invalid_argument("class parameter out of range");
    }

    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const int workers = std::max(1, opts.workers);
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                                static_cast<std::uint64_t>(workers);

    // Contiguous chunks, merged in worker order: results and maximizer order
    // cannot depend on the worker count.
    std::vector<std::vector<CellResult>> partial(static_cast<unsigned>(workers));
    if (workers == 1) {
        scan_range(n, queries, 0, total, opts.audit_period, partial[0]);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<unsigned>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min(total, chunk * static_cast<std::uint64_t>(w));
            const std::uint64_t hi = std::min(total, lo + chunk);
            threads.emplace_back([&, w, lo, hi] {
                try {
                    scan_range(n, queries, lo, hi, opts.audit_period,
                               partial[static_cast<unsigned>(w)]);
                } catch (...) {
                    errors[static_cast<unsigned>(w)] = std::current_exception();
                }
            });
        }
        for (std::thread& t : threads) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<CellResult> merged(queries.size());
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        CellResult& out = merged[qi];
        for (int w = 0; w < workers; ++w) {
            const CellResult& part = partial[static_cast<unsigned>(w)][qi];
            out.class_size += part.class_size;
            out.max_value = std::max(out.max_value, part.max_value);
        }
        for (int w = 0; w < workers; ++w) {
            const CellResult& part = partial[static_cast<unsigned>(w)][qi];
            if (part.class_size && part.max_value == out.max_value)
                out.argmax_masks.insert(out.argmax_masks.end(), part.argmax_masks.begin(),
                                        part.argmax_masks.end());
        }
    }
    return merged;
}

namespace {

TheoremReport assemble_report(const ClassSpec& spec, const CellResult& cell) {
    TheoremReport r;
    r.spec = spec;
    r.class_size_labeled = cell.class_size;
    r.max_value = cell.max_value;
    r.class_empty = cell.class_size == 0;

    // One representative per isomorphism class, in first-seen mask order.
    std::vector<std::string> canon_seen;
    for (const std::uint64_t mask : cell.argmax_masks) {
        const Graph g = Graph::from_edge_mask(spec.n, mask);
        std::string canon = canonical_form(g);
        if (std::find(canon_seen.begin(), canon_seen.end(), canon) == canon_seen.end()) {
            canon_seen.push_back(std::move(canon));
            r.maximizers.push_back(encode_graph6(g));
        }
    }
    r.unique_up_to_iso = !r.class_empty && canon_seen.size() == 1;

    const std::optional<Graph> built = construction_for(spec.theorem, spec.n, spec.param);
    r.has_construction = built.has_value();
    if (built) r.construction_value = count_expansion_total(*built);
    r.matches_construction = r.has_construction && r.unique_up_to_iso &&
                             r.construction_value == r.max_value &&
                             canonical_form(*built) == canon_seen.front();

    const auto [plo, phi] = paper_param_range(spec.theorem, spec.n);
    r.in_paper_range = spec.param >= plo && spec.param <= phi;

    if (r.class_empty) r.convention_notes.push_back("class is empty");
    if (!r.in_paper_range)
        r.convention_notes.push_back("extension cell: outside the claimed parameter range");
    if ((spec.theorem == Theorem::VertexConn || spec.theorem == Theorem::EdgeConn)) {
        if (spec.param == 0)
            r.convention_notes.push_back("connectivity 0 selects the disconnected graphs");
        if (spec.param == spec.n - 1)
            r.convention_notes.push_back("connectivity n-1 is the complete-graph convention");
    }
    if (spec.theorem == Theorem::Bridges && spec.param == spec.n - 2 && r.has_construction)
        r.convention_notes.push_back(
            "construction anomaly: the subdivided star built for bridge parameter n-2 "
            "has n-1 bridges and is not a member of this class");
    if (!r.has_construction)
        r.convention_notes.push_back("no construction is defined for this parameter");
    return r;
}

}  // namespace

TheoremReport certify(const ClassSpec& spec, const ScanOptions& opts) {
    const std::vector<CellResult> cells =
        scan_cells(spec.n, {{spec.theorem, spec.param}}, opts);
    return assemble_report(spec, cells.front());
}

std::vector<TheoremReport> certify_grid(Theorem t, int n_lo, int n_hi,
                                        const ScanOptions& opts) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad order range");
    std::vector<TheoremReport> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto [plo, phi] = paper_param_range(t, n);
        std::vector<CellQuery> queries;
        for (int param = plo; param <= phi; ++param) queries.push_back({t, param});
        if (queries.empty()) continue;
        const std::vector<CellResult> cells = scan_cells(n, queries, opts);
        for (std::size_t qi = 0; qi < queries.size(); ++qi)
            out.push_back(assemble_report({t, n, queries[qi].param}, cells[qi]));
    }
    return out;
}

}  // namespace cis

#include "cis/explore.hpp"

#include <algorithm>

#include "cis/count.hpp"
#include "cis/families.hpp"
#include "cis/invariants.hpp"
#include "cis/rng.hpp"

namespace cis {

namespace {

Graph random_graph(int n, Xorshift64Star& rng) {
    std::array<std::uint32_t, kMaxOrder> rows{};
    std::uint64_t word = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (bits == 0) {
                word = rng.next();
                bits = 64;
            }
            if (word & 1u) {
                rows[static_cast<unsigned>(i)] |= vertex_bit(j);
                rows[static_cast<unsigned>(j)] |= vertex_bit(i);
            }
            word >>= 1;
            --bits;
        }
    return Graph::from_rows(n, rows.data());
}

Graph random_connected_graph(int n, Xorshift64Star& rng) {
    while (true) {
        Graph g = random_graph(n, rng);
        if (is_connected(g)) return g;
    }
}

}  // namespace

std::vector<LemmaTrial> lemma_trials(int count, int max_part_order, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("trial count must be positive");
    if (max_part_order < 2 || 3 * max_part_order - 2 > 24)
        throw std::invalid_argument("part order must be in 2..8 to stay within the oracle cap");
    std::vector<LemmaTrial> out;
    out.reserve(static_cast<unsigned>(count));
    Xorshift64Star master(seed);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t trial_seed = master.next();
        Xorshift64Star rng(splitmix64(trial_seed));

        const auto part_order = [&] {
            return 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_part_order - 1)));
        };
        const Graph left = random_connected_graph(part_order(), rng);
        const Graph middle = random_connected_graph(part_order(), rng);
        const Graph right = random_connected_graph(part_order(), rng);
        const int l = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(left.order())));
        const int r = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(right.order())));
        const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(middle.order())));
        const int v = static_cast<int>(
            (u + 1 + rng.next_below(static_cast<std::uint64_t>(middle.order() - 1))) %
            middle.order());

        const GlueTriple glued = glue_parts({left, l, middle, u, v, right, r});
        LemmaTrial trial;
        trial.seed = trial_seed;
        trial.left_g6 = encode_graph6(left);
        trial.middle_g6 = encode_graph6(middle);
        trial.right_g6 = encode_graph6(right);
        trial.l = l;
        trial.u = u;
        trial.v = v;
        trial.r = r;
        trial.n_joined = count_subset_oracle(glued.joined).total;
        trial.n_merged_at_u = count_subset_oracle(glued.merged_at_u).total;
        trial.n_merged_at_v = count_subset_oracle(glued.merged_at_v).total;
        trial.holds = trial.n_merged_at_u > trial.n_joined ||
                      trial.n_merged_at_v > trial.n_joined;
        out.push_back(std::move(trial));
    }
    return out;
}

const char* min_constraint_name(MinConstraint c) {
    return c == MinConstraint::MinDeg ? "mindeg" : "vertex-conn";
}

std::optional<MinConstraint> parse_min_constraint(std::string_view name) {
    if (name == "mindeg") return MinConstraint::MinDeg;
    if (name == "vertex-conn") return MinConstraint::VertexConn;
    return std::nullopt;
}

MinSearchResult search_min(MinConstraint c, int n, int param, const ScanOptions& opts) {
    if (n < 1) throw std::invalid_argument("order out of range");
    if (param < 0 || param > n - 1) throw std::invalid_argument("class parameter out of range");
    const int cap = opts.allow_n8 ? std::max(opts.enum_cap, 8) : opts.enum_cap;
    if (n > cap || n > 8)
        throw std::invalid_argument("labeled enumeration capped at order 7 (8 by opt-in)");

    MinSearchResult res;
    res.constraint = c;
    res.n = n;
    res.param = param;

    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint64_t> argmin;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const Graph g = Graph::from_edge_mask(n, mask);
        if (!is_connected(g)) continue;
        const int value = c == MinConstraint::MinDeg ? min_degree(g) : vertex_connectivity(g);
        if (value != param) continue;
        const std::uint64_t count = count_expansion_total(g);
        if (count < best) {
            best = count;
            argmin.assign(1, mask);
        } else if (count == best) {
            argmin.push_back(mask);
        }
    }

    res.class_empty = argmin.empty();
    res.min_value = res.class_empty ? 0 : best;
    std::vector<std::string> canon_seen;
    for (const std::uint64_t mask : argmin) {
        const Graph g = Graph::from_edge_mask(n, mask);
        std::string canon = canonical_form(g);
        if (std::find(canon_seen.begin(), canon_seen.end(), canon) == canon_seen.end()) {
            canon_seen.push_back(std::move(canon));
            res.minimizers.push_back(encode_graph6(g));
        }
    }
    return res;
}

std::vector<MinSearchResult> search_min_grid(MinConstraint c, int n_lo, int n_hi, int param,
                                             const ScanOptions& opts) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad order range");
    std::vector<MinSearchResult> out;
    for (int n = n_lo; n <= n_hi; ++n) out.push_back(search_min(c, n, param, opts));
    return out;
}

}  // namespace cis

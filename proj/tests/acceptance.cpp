// Acceptance driver: each criterion prints exactly one PASS/FAIL line.
// With arguments it runs the named criteria (1..9); without arguments it runs
// all of them. The exit status is the number of failed criteria.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cis/certify.hpp"
#include "cis/count.hpp"
#include "cis/explore.hpp"
#include "cis/families.hpp"
#include "cis/graph.hpp"
#include "cis/invariants.hpp"
#include "cis/rng.hpp"
#include "cis/serialize.hpp"
#include "oracles.hpp"

namespace {

using namespace cis;

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

std::string fmt_cell(const char* label, int n, int param) {
    std::ostringstream out;
    out << label << "(n=" << n << ",param=" << param << ")";
    return out.str();
}

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

// --- criterion 1: closed-form counts equal the subset oracle ----------------

std::string criterion_closed_forms() {
    int members = 0;
    const auto check = [&members](Family f, int n, int param) {
        const Graph g = build_family(f, n, param);
        const std::uint64_t live = count_subset_oracle(g).total;
        const std::uint64_t formula = closed_form(f, n, param);
        if (live != formula) {
            std::ostringstream out;
            out << family_name(f) << "(n=" << n << ",param=" << param << ") formula "
                << formula << " != live count " << live;
            throw Failure{out.str()};
        }
        ++members;
    };
    for (int n = 1; n <= 12; ++n) check(Family::Complete, n, 0);
    for (int n = 1; n <= 12; ++n) check(Family::Path, n, 0);
    for (int n = 3; n <= 12; ++n) check(Family::Cycle, n, 0);
    for (int n = 1; n <= 12; ++n) check(Family::Star, n, 0);
    for (int n = 2; n <= 12; ++n)
        for (int x = 0; x <= n - 2; ++x) check(Family::MinDegG, n, x);
    for (int n = 1; n <= 12; ++n)
        for (int a = 1; a <= n; ++a) check(Family::SplitH, n, a);
    for (int n = 1; n <= 12; ++n)
        for (int l = 1; l <= n; ++l) check(Family::TuranT, n, l);
    for (int n = 3; n <= 12; ++n)
        for (int b = 0; b <= n - 3; ++b) check(Family::BridgeJ, n, b);
    std::ostringstream out;
    out << "closed forms equal the subset oracle on " << members << " family members";
    return out.str();
}

// --- criterion 2: both counting routes agree on random graphs ---------------

std::string criterion_dual_routes() {
    int graphs = 0;
    for (int n = 4; n <= 14; ++n) {
        Xorshift64Star rng(1000 + static_cast<std::uint64_t>(n));
        for (int trial = 0; trial < 1000; ++trial) {
            const Graph g = random_graph(n, rng);
            const CisCount a = count_subset_oracle(g);
            const CisCount b = count_expansion(g);
            if (a.total != b.total || a.per_vertex != b.per_vertex) {
                std::ostringstream out;
                out << "counting routes disagree on " << encode_graph6(g) << " (n=" << n
                    << ", trial " << trial << "): subset oracle " << a.total
                    << ", expansion " << b.total;
                throw Failure{out.str()};
            }
            ++graphs;
        }
    }
    std::ostringstream out;
    out << "subset-oracle and expansion totals and per-vertex counts agree on " << graphs
        << " random graphs (orders 4..14)";
    return out.str();
}

// --- criterion 3: every claimed class has the claimed unique maximizer ------

std::vector<TheoremReport> full_grid(int workers) {
    ScanOptions opts;
    opts.workers = workers;
    std::vector<TheoremReport> all;
    for (int t = 0; t < kTheoremCount; ++t) {
        const std::vector<TheoremReport> reports =
            certify_grid(static_cast<Theorem>(t), 4, 7, opts);
        all.insert(all.end(), reports.begin(), reports.end());
    }
    return all;
}

std::string criterion_grid() {
    const std::vector<TheoremReport> reports = full_grid(1);
    require(static_cast<int>(reports.size()) == 110,
            "expected 110 claimed cells over orders 4..7, got " +
                std::to_string(reports.size()));
    for (const TheoremReport& r : reports) {
        const std::string cell =
            fmt_cell(theorem_name(r.spec.theorem), r.spec.n, r.spec.param);
        require(r.in_paper_range, cell + " fell outside the claimed range");
        require(!r.class_empty, cell + " is empty");
        require(r.unique_up_to_iso,
                cell + " has " + std::to_string(r.maximizers.size()) + " maximizers");
        require(r.matches_construction, cell + " maximizer differs from the construction");
    }
    return "all 110 claimed cells (7 invariants, orders 4..7) have the constructed "
           "graph as unique maximizer";
}

// --- criterion 4: the bridge-parameter boundary is handled and documented ---

std::string criterion_bridge_boundary() {
    std::ostringstream recorded;
    for (int n = 5; n <= 7; ++n) {
        const Graph j = build_bridge(n, n - 2);
        require(bridge_count(j) == n - 1,
                "expected the boundary construction at n=" + std::to_string(n) +
                    " to carry n-1 bridges");
        const TheoremReport r = certify({Theorem::Bridges, n, n - 2});
        const std::string cell = fmt_cell("bridges", n, n - 2);
        require(!r.class_empty, cell + " is empty");
        bool documented = false;
        for (const std::string& note : r.convention_notes)
            documented = documented || note.find("n-1 bridges") != std::string::npos;
        require(documented, cell + " lacks the boundary convention note");
        require(!r.matches_construction,
                cell + " unexpectedly matches a construction that is not in the class");
        recorded << (n > 5 ? ", " : "") << "n=" << n << " max " << r.max_value << " ("
                 << (r.unique_up_to_iso ? "unique" : "tied") << ")";
    }
    return "bridge boundary cells complete with documented out-of-class construction; "
           "recorded maxima: " +
           recorded.str();
}

// --- criterion 5: rooted counts at the attached vertex ----------------------

std::string criterion_rooted_anchor() {
    int cells = 0;
    for (int n = 3; n <= 10; ++n)
        for (int x = 1; x <= n - 2; ++x) {
            const Graph g = build_mindeg(n, x);
            const std::uint64_t expected =
                1 + (std::uint64_t{1} << (n - 1)) - (std::uint64_t{1} << (n - 1 - x));
            const std::uint64_t live = count_rooted(g, n - 1);
            if (live != expected) {
                std::ostringstream out;
                out << "rooted count at the attached vertex of " << fmt_cell("mindeg-g", n, x)
                    << " is " << live << ", formula says " << expected;
                throw Failure{out.str()};
            }
            ++cells;
        }
    std::ostringstream out;
    out << "rooted counts at the attached vertex match the formula on " << cells
        << " degree-family members";
    return out.str();
}

// --- criterion 6: attachment inequality holds on seeded random trials -------

std::string criterion_attachment_inequality() {
    constexpr std::uint64_t kSeed = 2026;
    const std::vector<LemmaTrial> trials = lemma_trials(500, 4, kSeed);
    int violations = 0;
    for (const LemmaTrial& t : trials)
        if (!t.holds) ++violations;
    if (violations > 0) {
        const std::string path = "acceptance_attachment_counterexamples.jsonl";
        std::ofstream out(path);
        for (const LemmaTrial& t : trials)
            if (!t.holds) out << trial_json(t).dump() << '\n';
        std::ostringstream msg;
        msg << violations << " of 500 trials violate the attachment inequality "
            << "(seed " << kSeed << ", reproducers in " << path << ")";
        throw Failure{msg.str()};
    }
    return "attachment inequality holds on all 500 seeded trials (seed 2026, parts up "
           "to order 4)";
}

// --- criterion 7: identity cross-checks on every graph of order <= 6 --------

std::string criterion_identities() {
    long long graphs = 0;
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const Graph g = Graph::from_edge_mask(n, mask);
            const std::string id = "order-" + std::to_string(n) + " mask " +
                                   std::to_string(mask);

            require(independence_number(g) + testor::brute_vertex_cover(g) == n,
                    "independence + cover != order on " + id);

            const int vc = vertex_connectivity(g);
            const int ec = edge_connectivity(g);
            require(vc <= ec && ec <= min_degree(g),
                    "connectivity chain broken on " + id);

            require(bridge_count(g) == testor::brute_bridge_count(g),
                    "bridge count disagrees with the deletion oracle on " + id);

            const std::uint64_t total = count_subset_oracle(g).total;
            if (n >= 2)
                for (int v = 0; v < n; ++v) {
                    const std::uint64_t without =
                        count_subset_oracle(delete_vertex(g, v)).total;
                    const std::uint64_t rooted = count_rooted(g, v);
                    require(total == without + rooted,
                            "deletion decomposition fails at vertex " +
                                std::to_string(v) + " on " + id);
                }
            ++graphs;
        }
    }
    std::ostringstream out;
    out << "independence/cover, connectivity-chain, bridge, and vertex-deletion "
           "identities hold on all "
        << graphs << " labeled graphs of order <= 6";
    return out.str();
}

// --- criterion 8: sparse minima are paths and cycles -------------------------
//
// Checked exactly as claimed: over connected graphs of order 4..7, the minimum
// count with min degree 1 must be attained uniquely by the path (n(n+1)/2) and
// with min degree 2 uniquely by the cycle (n(n-1)+1). The degree-2 half of the
// claim is false from order 6 on; when the exhaustive scan refutes it, the
// failure line reports independently re-verified counterexamples plus the
// status of the parallel vertex-connectivity-2 statement, which does hold.

bool cell_is(const MinSearchResult& r, std::uint64_t value, const Graph& expected) {
    return !r.class_empty && r.min_value == value && r.minimizers.size() == 1 &&
           canonical_form(decode_graph6(r.minimizers[0])) == canonical_form(expected);
}

std::string criterion_sparse_minima() {
    std::vector<std::string> refutations;
    for (int n = 4; n <= 7; ++n) {
        const std::uint64_t path_value = static_cast<std::uint64_t>(n) * (n + 1) / 2;
        require(cell_is(search_min(MinConstraint::MinDeg, n, 1), path_value, build_path(n)),
                fmt_cell("min-degree-1 minimum", n, 1) + " is not uniquely the path");

        const std::uint64_t cycle_value = static_cast<std::uint64_t>(n) * (n - 1) + 1;
        const MinSearchResult twos = search_min(MinConstraint::MinDeg, n, 2);
        if (cell_is(twos, cycle_value, build_cycle(n))) continue;

        // Re-verify the refutation from first principles before reporting it.
        require(!twos.class_empty && !twos.minimizers.empty() &&
                    twos.min_value < cycle_value,
                fmt_cell("min-degree-2 minimum", n, 2) + " failed in an unexpected way");
        const Graph witness = decode_graph6(twos.minimizers[0]);
        require(witness.order() == n && min_degree(witness) == 2 && is_connected(witness),
                "reported minimizer is outside its class at order " + std::to_string(n));
        require(count_subset_oracle(witness).total == twos.min_value &&
                    count_expansion(witness).total == twos.min_value,
                "reported minimum failed the independent recount at order " +
                    std::to_string(n));

        std::ostringstream detail;
        detail << "order " << n << " has min " << twos.min_value << " < cycle value "
               << cycle_value << ", attained "
               << (twos.minimizers.size() == 1 ? "uniquely" : "non-uniquely") << " by "
               << twos.minimizers[0];
        if (n == 6 &&
            canonical_form(witness) ==
                canonical_form(Graph::from_edge_list(
                    6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}})))
            detail << " (two triangles joined by a bridge)";
        if (n == 7 &&
            canonical_form(witness) ==
                canonical_form(Graph::from_edge_list(7, {{0, 1},
                                                         {0, 2},
                                                         {1, 2},
                                                         {4, 5},
                                                         {4, 6},
                                                         {5, 6},
                                                         {2, 3},
                                                         {3, 4}})))
            detail << " (two triangles joined by a two-edge path)";
        refutations.push_back(detail.str());
    }

    if (!refutations.empty()) {
        bool connectivity_form_holds = true;
        for (int n = 4; n <= 7; ++n)
            connectivity_form_holds =
                connectivity_form_holds &&
                cell_is(search_min(MinConstraint::VertexConn, n, 2),
                        static_cast<std::uint64_t>(n) * (n - 1) + 1, build_cycle(n));
        std::ostringstream msg;
        msg << "the path half holds (min degree 1, unique, orders 4..7) but the "
               "min-degree-2 cycle claim is refuted by exhaustive search: ";
        for (std::size_t i = 0; i < refutations.size(); ++i)
            msg << (i ? "; " : "") << refutations[i];
        msg << "; the vertex-connectivity-2 form of the statement "
            << (connectivity_form_holds
                    ? "does hold, with the cycle as unique minimizer on orders 4..7"
                    : "fails as well");
        throw Failure{msg.str()};
    }
    return "connected minima for orders 4..7: min degree 1 is uniquely the path, "
           "min degree 2 is uniquely the cycle";
}

// --- criterion 9: reports are byte-identical across worker counts -----------

std::string serialize_grid(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    for (const TheoremReport& r : reports) out << report_json(r).dump() << '\n';
    return out.str();
}

std::string criterion_worker_determinism() {
    const std::string serial = serialize_grid(full_grid(1));
    const std::string parallel = serialize_grid(full_grid(4));
    require(serial == parallel,
            "serialized grid reports differ between 1 and 4 workers");
    std::ostringstream out;
    out << "serialized grid reports are byte-identical with 1 and 4 workers ("
        << serial.size() << " bytes)";
    return out.str();
}

// --- driver ------------------------------------------------------------------

struct Criterion {
    int number;
    std::function<std::string()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, criterion_closed_forms},       {2, criterion_dual_routes},
        {3, criterion_grid},               {4, criterion_bridge_boundary},
        {5, criterion_rooted_anchor},      {6, criterion_attachment_inequality},
        {7, criterion_identities},         {8, criterion_sparse_minima},
        {9, criterion_worker_determinism},
    };
    return all;
}

bool run_one(const Criterion& c) {
    try {
        const std::string summary = c.run();
        std::cout << "PASS criterion-" << c.number << ": " << summary << '\n';
        return true;
    } catch (const Failure& f) {
        std::cout << "FAIL criterion-" << c.number << ": " << f.message << '\n';
    } catch (const std::exception& e) {
        std::cout << "FAIL criterion-" << c.number << ": unexpected error: " << e.what()
                  << '\n';
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria().size())) {
            std::cerr << "unknown criterion: " << argv[i] << '\n';
            return 64;
        }
        wanted.push_back(k);
    }

    int failures = 0;
    for (const Criterion& c : criteria()) {
        const bool selected =
            wanted.empty() ||
            std::find(wanted.begin(), wanted.end(), c.number) != wanted.end();
        if (selected && !run_one(c)) ++failures;
    }
    return failures;
}

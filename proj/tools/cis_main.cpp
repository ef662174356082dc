// cis: connected induced subgraph counts, extremal family constructions, and
// exhaustive per-class certification. Machine-readable output on stdout,
// progress on stderr. Exit codes: 0 ok, 2 usage, 3 empty class, 4 violated
// property.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cis/certify.hpp"
#include "cis/config.hpp"
#include "cis/count.hpp"
#include "cis/explore.hpp"
#include "cis/families.hpp"
#include "cis/invariants.hpp"
#include "cis/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEmptyClass = 3;
constexpr int kExitViolation = 4;

struct CliOptions {
    std::string config_path;
    int workers = -1;          // -1: not set on the command line
    int enum_cap = -1;
    int oracle_cap = -1;
    double audit_rate = -1.0;
    std::string out_dir;

    std::string family;
    std::string theorem;
    std::string constraint;
    std::string g6;
    std::string algorithm = "expansion";
    int n = -1;
    int param = -1;
    bool param_set = false;
    int n_min = 4;
    int n_max = -1;
    bool allow_n8 = false;
    int trials = 500;
    int max_part = 4;
    std::uint64_t seed = 1;
};

cis::Config resolve_config(const CliOptions& cli) {
    cis::Config cfg = cis::config_load(cli.config_path);
    if (cli.workers >= 0) cfg.workers = cli.workers;
    if (cli.enum_cap >= 0) cfg.enum_cap = cli.enum_cap;
    if (cli.oracle_cap >= 0) cfg.oracle_cap = cli.oracle_cap;
    if (cli.audit_rate >= 0.0) cfg.audit_rate = cli.audit_rate;
    if (!cli.out_dir.empty()) cfg.out_dir = cli.out_dir;
    return cfg;
}

cis::ScanOptions scan_options(const cis::Config& cfg, bool allow_n8) {
    cis::ScanOptions opts;
    opts.workers = cis::effective_workers(cfg);
    opts.audit_period = cis::audit_period_from_rate(cfg.audit_rate);
    opts.enum_cap = cfg.enum_cap;
    opts.allow_n8 = allow_n8;
    return opts;
}

// Graphs from --g6 or, failing that, one per nonblank stdin line.
std::vector<cis::Graph> input_graphs(const CliOptions& cli) {
    std::vector<cis::Graph> graphs;
    if (!cli.g6.empty()) {
        graphs.push_back(cis::decode_graph6(cli.g6));
        return graphs;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(cis::decode_graph6(line));
    }
    if (graphs.empty()) throw std::invalid_argument("no graphs given (use --g6 or stdin)");
    return graphs;
}

int run_construct(const CliOptions& cli) {
    const std::optional<cis::Family> family = cis::parse_family(cli.family);
    if (!family) throw std::invalid_argument("unknown family: " + cli.family);
    if (cis::family_needs_param(*family) != cli.param_set)
        throw std::invalid_argument(cli.param_set ? "this family takes no --param"
                                                  : "this family requires --param");
    const cis::Graph g = cis::build_family(*family, cli.n, cli.param_set ? cli.param : 0);
    std::cout << cis::encode_graph6(g) << '\n';
    return kExitOk;
}

int run_count(const CliOptions& cli, const cis::Config& cfg) {
    cis::CountAlgorithm algorithm;
    if (cli.algorithm == "oracle")
        algorithm = cis::CountAlgorithm::SubsetOracle;
    else if (cli.algorithm == "expansion")
        algorithm = cis::CountAlgorithm::Expansion;
    else
        throw std::invalid_argument("unknown algorithm: " + cli.algorithm);
    for (const cis::Graph& g : input_graphs(cli)) {
        if (algorithm == cis::CountAlgorithm::SubsetOracle && g.order() > cfg.oracle_cap)
            throw std::invalid_argument("graph exceeds the subset-oracle order cap");
        const cis::CisCount result = algorithm == cis::CountAlgorithm::SubsetOracle
                                         ? cis::count_subset_oracle(g)
                                         : cis::count_expansion(g);
        std::cout << cis::count_json(result).dump() << '\n';
    }
    return kExitOk;
}

int run_invariants(const CliOptions& cli) {
    for (const cis::Graph& g : input_graphs(cli))
        std::cout << cis::profile_json(cis::profile(g)).dump() << '\n';
    return kExitOk;
}

std::optional<cis::Theorem> required_theorem(const std::string& name) {
    const std::optional<cis::Theorem> t = cis::parse_theorem(name);
    if (!t) throw std::invalid_argument("unknown theorem: " + name);
    return t;
}

int certify_exit(const cis::TheoremReport& r) {
    if (r.class_empty) return kExitEmptyClass;
    if (r.in_paper_range && !(r.unique_up_to_iso && r.matches_construction))
        return kExitViolation;
    return kExitOk;
}

int run_certify(const CliOptions& cli, const cis::Config& cfg) {
    const auto theorem = required_theorem(cli.theorem);
    const cis::TheoremReport report =
        cis::certify({*theorem, cli.n, cli.param}, scan_options(cfg, cli.allow_n8));
    std::cout << cis::report_json(report).dump() << '\n';
    return certify_exit(report);
}

int run_certify_grid(const CliOptions& cli, const cis::Config& cfg) {
    const auto theorem = required_theorem(cli.theorem);
    if (cli.n_max < cli.n_min) throw std::invalid_argument("--n-max must be >= --n-min");
    const cis::ScanOptions opts = scan_options(cfg, cli.allow_n8);

    std::filesystem::create_directories(cfg.out_dir);
    const std::string base = cfg.out_dir + "/certify_" + cis::theorem_name(*theorem);
    std::ofstream jsonl(base + ".jsonl");
    std::ofstream csv(base + ".csv");
    if (!jsonl || !csv) throw std::invalid_argument("cannot write under " + cfg.out_dir);
    csv << cis::report_csv_header() << '\n';

    int exit_code = kExitOk;
    bool any_empty = false;
    for (int n = cli.n_min; n <= cli.n_max; ++n) {
        const std::vector<cis::TheoremReport> reports =
            cis::certify_grid(*theorem, n, n, opts);
        for (const cis::TheoremReport& r : reports) {
            const std::string payload = cis::report_json(r).dump();
            std::cout << payload << '\n';
            jsonl << payload << '\n';
            csv << cis::report_csv_row(r) << '\n';
            if (certify_exit(r) == kExitViolation) exit_code = kExitViolation;
            any_empty = any_empty || r.class_empty;
            std::cerr << "certify " << cis::theorem_name(*theorem) << " n=" << r.spec.n
                      << " param=" << r.spec.param << " done\n";
        }
    }
    if (exit_code == kExitOk && any_empty) exit_code = kExitEmptyClass;
    return exit_code;
}

int run_lemma_check(const CliOptions& cli, const cis::Config& cfg) {
    const std::vector<cis::LemmaTrial> trials =
        cis::lemma_trials(cli.trials, cli.max_part, cli.seed);
    std::vector<const cis::LemmaTrial*> failing;
    for (const cis::LemmaTrial& t : trials)
        if (!t.holds) failing.push_back(&t);

    std::string reproducer;
    if (!failing.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        reproducer = cfg.out_dir + "/lemma_counterexamples.jsonl";
        std::ofstream out(reproducer);
        if (!out) throw std::invalid_argument("cannot write under " + cfg.out_dir);
        for (const cis::LemmaTrial* t : failing) out << cis::trial_json(*t).dump() << '\n';
    }
    std::cout << cis::lemma_summary_json(cli.trials, cli.max_part, cli.seed,
                                         static_cast<int>(failing.size()), reproducer)
                     .dump()
              << '\n';
    return failing.empty() ? kExitOk : kExitViolation;
}

int run_search_min(const CliOptions& cli, const cis::Config& cfg) {
    const std::optional<cis::MinConstraint> constraint =
        cis::parse_min_constraint(cli.constraint);
    if (!constraint) throw std::invalid_argument("unknown constraint: " + cli.constraint);
    const cis::MinSearchResult result =
        cis::search_min(*constraint, cli.n, cli.param, scan_options(cfg, cli.allow_n8));
    std::cout << cis::min_search_json(result).dump() << '\n';
    return result.class_empty ? kExitEmptyClass : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions cli;
    CLI::App app{"connected induced subgraph counting and certification"};
    app.require_subcommand(1);
    app.add_option("--config", cli.config_path, "config file (key=value lines)");
    app.add_option("--workers", cli.workers, "worker threads (0 = hardware)");
    app.add_option("--enum-cap", cli.enum_cap, "labeled enumeration order cap");
    app.add_option("--oracle-cap", cli.oracle_cap, "subset-oracle order cap");
    app.add_option("--audit-rate", cli.audit_rate, "fraction of counts re-audited");
    app.add_option("--out-dir", cli.out_dir, "output directory for files");

    CLI::App* construct = app.add_subcommand("construct", "emit a family member as graph6");
    construct->add_option("--family", cli.family, "family name")->required();
    construct->add_option("--n", cli.n, "order")->required();
    construct->add_option("--param", cli.param, "family parameter")
        ->each([&cli](const std::string&) { cli.param_set = true; });

    CLI::App* count = app.add_subcommand("count", "count connected induced subgraphs");
    count->add_option("--g6", cli.g6, "graph6 input (default: stdin lines)");
    count->add_option("--algorithm", cli.algorithm, "oracle|expansion");

    CLI::App* invariants = app.add_subcommand("invariants", "exact invariant profile");
    invariants->add_option("--g6", cli.g6, "graph6 input (default: stdin lines)");

    CLI::App* certify = app.add_subcommand("certify", "exhaustively certify one class");
    certify->add_option("--theorem", cli.theorem, "class invariant")->required();
    certify->add_option("--n", cli.n, "order")->required();
    certify->add_option("--param", cli.param, "class parameter value")->required();
    certify->add_flag("--allow-n8", cli.allow_n8, "permit the order-8 scan");

    CLI::App* grid = app.add_subcommand("certify-grid", "certify a claimed parameter grid");
    grid->add_option("--theorem", cli.theorem, "class invariant")->required();
    grid->add_option("--n-min", cli.n_min, "first order (default 4)");
    grid->add_option("--n-max", cli.n_max, "last order")->required();
    grid->add_flag("--allow-n8", cli.allow_n8, "permit the order-8 scan");

    CLI::App* lemma = app.add_subcommand("lemma-check", "randomized attachment-inequality trials");
    lemma->add_option("--trials", cli.trials, "number of trials (default 500)");
    lemma->add_option("--max-part", cli.max_part, "largest part order (default 4)");
    lemma->add_option("--seed", cli.seed, "master seed (default 1)");

    CLI::App* search = app.add_subcommand("search-min", "minimum count over a connected class");
    search->add_option("--constraint", cli.constraint, "mindeg|vertex-conn")->required();
    search->add_option("--n", cli.n, "order")->required();
    search->add_option("--param", cli.param, "class parameter value")->required();
    search->add_flag("--allow-n8", cli.allow_n8, "permit the order-8 scan");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();  // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const cis::Config cfg = resolve_config(cli);
        if (construct->parsed()) return run_construct(cli);
        if (count->parsed()) return run_count(cli, cfg);
        if (invariants->parsed()) return run_invariants(cli);
        if (certify->parsed()) return run_certify(cli, cfg);
        if (grid->parsed()) return run_certify_grid(cli, cfg);
        if (lemma->parsed()) return run_lemma_check(cli, cfg);
        if (search->parsed()) return run_search_min(cli, cfg);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const cis::Graph6Error& e) {
        std::cerr << "error: " << e.what() << " at byte " << e.position << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

#include "cis/serialize.hpp"

#include <sstream>

namespace cis {

ojson count_json(const CisCount& c) {
    ojson j;
    j["total"] = c.total;
    j["per_vertex"] = c.per_vertex;
    j["algorithm"] = count_algorithm_name(c.algorithm);
    return j;
}

ojson profile_json(const InvariantProfile& p) {
    ojson j;
    j["n"] = p.n;
    j["min_degree"] = p.min_degree;
    j["independence"] = p.independence;
    j["vertex_cover"] = p.vertex_cover;
    j["vertex_connectivity"] = p.vertex_connectivity;
    j["edge_connectivity"] = p.edge_connectivity;
    j["chromatic"] = p.chromatic;
    j["bridges"] = p.bridges;
    j["components"] = p.components;
    return j;
}

ojson report_json(const TheoremReport& r) {
    ojson j;
    j["theorem"] = theorem_name(r.spec.theorem);
    j["n"] = r.spec.n;
    j["param"] = r.spec.param;
    j["class_size_labeled"] = r.class_size_labeled;
    j["max_value"] = r.max_value;
    j["maximizers"] = r.maximizers;
    j["unique_up_to_iso"] = r.unique_up_to_iso;
    if (r.has_construction)
        j["construction_value"] = r.construction_value;
    else
        j["construction_value"] = nullptr;
    j["matches_construction"] = r.matches_construction;
    j["convention_notes"] = r.convention_notes;
    return j;
}

ojson min_search_json(const MinSearchResult& r) {
    ojson j;
    j["constraint"] = min_constraint_name(r.constraint);
    j["n"] = r.n;
    j["param"] = r.param;
    if (r.class_empty)
        j["min_value"] = nullptr;
    else
        j["min_value"] = r.min_value;
    j["minimizers"] = r.minimizers;
    j["class_empty"] = r.class_empty;
    return j;
}

ojson trial_json(const LemmaTrial& t) {
    ojson j;
    j["seed"] = t.seed;
    j["left"] = t.left_g6;
    j["middle"] = t.middle_g6;
    j["right"] = t.right_g6;
    j["l"] = t.l;
    j["u"] = t.u;
    j["v"] = t.v;
    j["r"] = t.r;
    j["n_joined"] = t.n_joined;
    j["n_merged_at_u"] = t.n_merged_at_u;
    j["n_merged_at_v"] = t.n_merged_at_v;
    j["holds"] = t.holds;
    return j;
}

ojson lemma_summary_json(int trials, int max_part_order, std::uint64_t seed,
                         int violations, const std::string& reproducer_path) {
    ojson j;
    j["trials"] = trials;
    j["max_part_order"] = max_part_order;
    j["seed"] = seed;
    j["violations"] = violations;
    j["all_hold"] = violations == 0;
    if (reproducer_path.empty())
        j["reproducer"] = nullptr;
    else
        j["reproducer"] = reproducer_path;
    return j;
}

std::string report_csv_header() { return "theorem,n,param,max,unique,matches"; }

std::string report_csv_row(const TheoremReport& r) {
    std::ostringstream out;
    out << theorem_name(r.spec.theorem) << ',' << r.spec.n << ',' << r.spec.param << ','
        << r.max_value << ',' << (r.unique_up_to_iso ? "true" : "false") << ','
        << (r.matches_construction ? "true" : "false");
    return out.str();
}

}  // namespace cis

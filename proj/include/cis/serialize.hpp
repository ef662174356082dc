#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cis/certify.hpp"
#include "cis/count.hpp"
#include "cis/explore.hpp"
#include "cis/invariants.hpp"

namespace cis {

using ojson = nlohmann::ordered_json;

// All payloads use ordered keys so serialized output is byte-stable.

ojson count_json(const CisCount& c);
ojson profile_json(const InvariantProfile& p);
ojson report_json(const TheoremReport& r);
ojson min_search_json(const MinSearchResult& r);
ojson trial_json(const LemmaTrial& t);
ojson lemma_summary_json(int trials, int max_part_order, std::uint64_t seed,
                         int violations, const std::string& reproducer_path);

std::string report_csv_header();
std::string report_csv_row(const TheoremReport& r);

}  // namespace cis

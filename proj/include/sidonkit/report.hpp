#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sidonkit/bounds.hpp"
#include "sidonkit/construct.hpp"
#include "sidonkit/digraph.hpp"
#include "sidonkit/sidon.hpp"

namespace sidonkit {

using Json = nlohmann::json;

std::string version();

// {"command", "inputs", "seed", "version", "result"}; seed is null when unused.
Json envelope(const std::string& command, Json inputs, const std::optional<std::uint64_t>& seed, Json result);

Json element_list(const FiniteGroup& g, const std::vector<Element>& members);
Json to_json(const FiniteGroup& g, const VerifyReport& r);
Json to_json(const SearchResult& r);
Json to_json(const BoundReport& r);
Json to_json(const PairSet& p);
Json to_json(const HypergraphProfile& p);
Json to_json(const DegreeProfile& p);
Json path_json(const Path& p);  // 1-indexed

VerifyReport verify_report_from_json(const Json& j);

// Rebuild the group and set recorded in a verify/search report, re-run the
// check, and confirm outcome and witness match. Returns an empty string on
// success, otherwise a description of the mismatch.
std::string recheck_report(const Json& report);

std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

} // namespace sidonkit

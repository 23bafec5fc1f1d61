#pragma once

#include <string>

#include <json.hpp>

#include "cayley/constructions.hpp"
#include "cayley/group_ring.hpp"
#include "cayley/search.hpp"
#include "cayley/spectrum.hpp"

namespace cayley::io {

using nlohmann::json;

/// Two-space indented, keys sorted, trailing newline. Equal documents give
/// identical bytes.
std::string canonical_dump(const json& doc);

/// {"factors": [...], "connection_set": [[...], ...]}; coordinates are
/// always arrays, even in rank 1.
json graph_to_json(const CayleyGraph& graph);
/// Throws InvalidArgument on malformed documents and InvariantViolation when
/// the connection set is not symmetric or contains the identity.
CayleyGraph graph_from_json(const json& doc);

json element_to_json(const GroupElement& g);
GroupElement element_from_json(const json& doc);

json certificate_to_json(const GdsCertificate& cert);
json stats_to_json(const GraphStats& stats);
json verdict_to_json(const RamanujanVerdict& verdict);
json srg_to_json(const SrgResult& srg);
json gds_filters_to_json(const GdsFilterReport& report);
json report_to_json(const ConstructionReport& report);

/// "value,multiplicity,exact" header then one row per distinct eigenvalue.
std::string spectrum_to_csv(const Spectrum& spectrum);
Spectrum spectrum_from_csv(const std::string& text);
json spectrum_to_json(const Spectrum& spectrum);

json search_hit_to_json(const SearchHit& hit);
json gds_hit_to_json(const GdsSearchHit& hit);
/// "n,s,k,lambda2,ramanujan", lambda2 being the largest |eigenvalue| below k.
std::string search_summary_header();
std::string search_summary_row(const SearchHit& hit);

/// Undirected DOT, one edge per unordered pair, vertices named by index.
std::string to_dot(const CayleyGraph& graph);

}  // namespace cayley::io

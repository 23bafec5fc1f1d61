#include "cayley/io.hpp"

#include <cstdio>
#include <sstream>

namespace cayley::io {

namespace {

std::string format_value(double v, bool exact) {
  if (exact) return std::to_string(static_cast<int64_t>(v));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json elements_to_json(std::span<const GroupElement> elems) {
  json arr = json::array();
  for (const auto& g : elems) arr.push_back(element_to_json(g));
  return arr;
}

}  // namespace

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

json element_to_json(const GroupElement& g) { return json(g.coords); }

GroupElement element_from_json(const json& doc) {
  if (!doc.is_array()) throw InvalidArgument("group element must be an array");
  std::vector<int64_t> coords;
  for (const auto& x : doc) {
    if (!x.is_number_integer())
      throw InvalidArgument("group element coordinates must be integers");
    coords.push_back(x.get<int64_t>());
  }
  return GroupElement(std::move(coords));
}

json graph_to_json(const CayleyGraph& graph) {
  json doc;
  doc["factors"] = std::vector<int64_t>(graph.group().factors().begin(),
                                        graph.group().factors().end());
  doc["connection_set"] = elements_to_json(graph.connection().elements());
  return doc;
}

CayleyGraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("graph document must be an object");
  if (!doc.contains("factors") || !doc["factors"].is_array())
    throw InvalidArgument("graph document needs a \"factors\" array");
  if (!doc.contains("connection_set") || !doc["connection_set"].is_array())
    throw InvalidArgument("graph document needs a \"connection_set\" array");
  std::vector<int64_t> factors;
  for (const auto& f : doc["factors"]) {
    if (!f.is_number_integer()) throw InvalidArgument("factors must be integers");
    factors.push_back(f.get<int64_t>());
  }
  AbelianGroup group(std::move(factors));
  std::vector<GroupElement> elems;
  for (const auto& e : doc["connection_set"]) elems.push_back(element_from_json(e));
  return CayleyGraph::build(std::move(group), std::move(elems));
}

json certificate_to_json(const GdsCertificate& cert) {
  json doc;
  doc["n"] = cert.n;
  doc["k"] = cert.k;
  doc["mu1"] = cert.mu1;
  doc["mu2"] = cert.mu2;
  doc["S"] = elements_to_json(cert.s);
  doc["identity_in_S"] = cert.identity_in_s;
  doc["C"] = elements_to_json(cert.c);
  return doc;
}

json stats_to_json(const GraphStats& stats) {
  json doc;
  doc["components"] = stats.component_count;
  doc["connected"] = stats.connected();
  doc["bipartite"] = stats.bipartite;
  doc["diameter"] = stats.diameter ? json(*stats.diameter) : json(nullptr);
  return doc;
}

json verdict_to_json(const RamanujanVerdict& v) {
  json doc;
  doc["isRamanujan"] = v.is_ramanujan;
  doc["degree"] = v.degree;
  doc["secondLargestAbs"] = v.second_largest_abs;
  doc["bound"] = v.bound;
  doc["connected"] = v.connected;
  doc["boundaryFlag"] = v.boundary_flag;
  doc["reason"] = v.reason;
  return doc;
}

json srg_to_json(const SrgResult& srg) {
  json doc;
  switch (srg.status) {
    case SrgStatus::kStronglyRegular: doc["status"] = "strongly_regular"; break;
    case SrgStatus::kNotStronglyRegular: doc["status"] = "not_strongly_regular"; break;
    case SrgStatus::kDisconnected: doc["status"] = "disconnected"; break;
  }
  if (srg.params) {
    doc["v"] = srg.params->v;
    doc["k"] = srg.params->k;
    doc["lambda"] = srg.params->lambda;
    doc["mu"] = srg.params->mu;
  }
  return doc;
}

json gds_filters_to_json(const GdsFilterReport& r) {
  json doc;
  doc["connected_filter"] = r.connected_filter;
  doc["ramanujan_filter"] = r.ramanujan_filter;
  doc["S_is_subgroup"] = r.s_is_subgroup;
  doc["subgroup_connected"] =
      r.subgroup_connected ? json(*r.subgroup_connected) : json(nullptr);
  doc["subgroup_ramanujan"] =
      r.subgroup_ramanujan ? json(*r.subgroup_ramanujan) : json(nullptr);
  return doc;
}

json report_to_json(const ConstructionReport& report) {
  json doc;
  doc["name"] = report.name;
  json params = json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  doc["parameters"] = params;
  doc["predicted_degree"] = report.predicted_degree;
  doc["predicted_eigenvalues"] = report.predicted_eigenvalues;
  doc["predicted_ramanujan"] =
      report.predicted_ramanujan ? json(*report.predicted_ramanujan) : json(nullptr);
  doc["notes"] = report.notes;
  json disc = json::array();
  for (const auto& d : report.discrepancies)
    disc.push_back({{"kind", to_string(d.kind)}, {"detail", d.detail}});
  doc["discrepancies"] = disc;
  return doc;
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
  std::string out = "value,multiplicity,exact\n";
  for (const auto& e : spectrum.entries())
    out += format_value(e.value, e.exact) + "," + std::to_string(e.multiplicity) +
           "," + (e.exact ? "true" : "false") + "\n";
  return out;
}

Spectrum spectrum_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "value,multiplicity,exact")
    throw InvalidArgument("spectrum CSV needs the value,multiplicity,exact header");
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw InvalidArgument("malformed spectrum row: " + line);
    try {
      const double v = std::stod(line.substr(0, c1));
      const int64_t mult = std::stoll(line.substr(c1 + 1, c2 - c1 - 1));
      if (mult <= 0) throw InvalidArgument("multiplicity must be positive");
      values.insert(values.end(), static_cast<size_t>(mult), v);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InvalidArgument*>(&e)) throw;
      throw InvalidArgument("malformed spectrum row: " + line);
    }
  }
  return Spectrum::from_values(values);
}

json spectrum_to_json(const Spectrum& spectrum) {
  json arr = json::array();
  for (const auto& e : spectrum.entries()) {
    json entry;
    entry["value"] = e.exact ? json(e.exact_value()) : json(e.value);
    entry["multiplicity"] = e.multiplicity;
    entry["exact"] = e.exact;
    arr.push_back(entry);
  }
  return arr;
}

json search_hit_to_json(const SearchHit& hit) {
  json doc;
  doc["n"] = hit.n;
  doc["s"] = hit.encoding;
  doc["C"] = hit.c;
  doc["k"] = hit.degree;
  doc["secondLargestAbs"] = hit.second_largest_abs;
  doc["verdict"] = verdict_to_json(hit.verdict);
  return doc;
}

json gds_hit_to_json(const GdsSearchHit& hit) {
  json doc = certificate_to_json(hit.certificate);
  doc["encoding"] = hit.encoding;
  return doc;
}

std::string search_summary_header() { return "n,s,k,lambda2,ramanujan\n"; }

std::string search_summary_row(const SearchHit& hit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", hit.second_largest_abs);
  return std::to_string(hit.n) + "," + std::to_string(hit.encoding) + "," +
         std::to_string(hit.degree) + "," + buf + "," +
         (hit.verdict.is_ramanujan ? "true" : "false") + "\n";
}

std::string to_dot(const CayleyGraph& graph) {
  std::string out = "graph cayley {\n";
  for (int64_t u = 0; u < graph.vertex_count(); ++u) {
    out += "  " + std::to_string(u) + ";\n";
    for (int64_t v : graph.neighbors(u))
      if (u < v) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace cayley::io

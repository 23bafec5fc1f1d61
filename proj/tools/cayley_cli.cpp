#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "cayley/constructions.hpp"
#include "cayley/group_ring.hpp"
#include "cayley/io.hpp"
#include "cayley/search.hpp"

namespace fs = std::filesystem;
using cayley::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

constexpr int64_t kOracleLimit = 4096;
constexpr int64_t kSrgLimit = 4096;
constexpr int64_t kExpansionLimit = 20;

struct Options {
  std::string construction;
  std::string mode;
  std::string input;
  std::string out;
  std::string format = "json";
  int64_t s = 4, r = 4, n = 0, min_degree = 2;
  int m = 1, u = 1, i = 1, j = 1;
  unsigned jobs = 1;
  uint64_t seed = 1;
  int partitions = 0;
  bool canonical = false;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw cayley::InvalidArgument("cannot write " + path.string());
  f << text;
}

void prepare_out(const Options& opt) {
  if (!opt.out.empty()) fs::create_directories(opt.out);
}

json analysis_json(const cayley::CayleyGraph& graph, const Options& opt) {
  using namespace cayley;
  json doc;
  doc["graph"] = io::graph_to_json(graph);
  const auto stats = graph_stats(graph);
  doc["stats"] = io::stats_to_json(stats);
  const auto spectrum = spectrum_by_characters(graph, opt.jobs);
  doc["spectrum"] = io::spectrum_to_json(spectrum);
  if (graph.vertex_count() <= kOracleLimit)
    doc["oracle_agrees"] = spectra_agree(spectrum, spectrum_oracle(graph));
  else
    doc["oracle_agrees"] = nullptr;
  doc["trace_identities"] =
      spectrum.trace_identities_hold(graph.vertex_count(), graph.degree());
  doc["verdict"] = io::verdict_to_json(ramanujan_check(spectrum, graph.degree(), stats));
  doc["spectral_gap"] = spectral_gap(spectrum, graph.degree());

  const auto elems = graph.connection().elements();
  if (graph.degree() < graph.vertex_count()) {
    if (const auto cert = verify_gds(graph.group(), elems)) {
      doc["gds"] = io::certificate_to_json(*cert);
      doc["gds_filters"] = io::gds_filters_to_json(gds_filters(graph.group(), *cert));
    } else {
      doc["gds"] = nullptr;
    }
  }
  doc["multiplier_minus_one"] = has_multiplier_minus_one(graph.group(), elems);
  if (graph.vertex_count() <= kSrgLimit) doc["srg"] = io::srg_to_json(srg_check(graph));
  if (graph.vertex_count() <= kExpansionLimit)
    doc["vertex_expansion"] = vertex_expansion(graph);

  if (opt.partitions > 0) {
    const CrossingLemma lemma(graph, spectrum);
    std::mt19937_64 rng(opt.seed);
    std::vector<int64_t> perm(static_cast<size_t>(graph.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    int violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int t = 0; t < opt.partitions; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto cut = static_cast<size_t>(rng() % (perm.size() + 1));
      const std::vector<int64_t> a(perm.begin(), perm.begin() + static_cast<long>(cut));
      const std::vector<int64_t> b(perm.begin() + static_cast<long>(cut), perm.end());
      const auto res = lemma.evaluate(a, b);
      if (!res.holds()) ++violations;
      min_slack = std::min(min_slack, static_cast<double>(res.actual) - res.bound);
    }
    doc["crossing_lemma"] = {{"partitions", opt.partitions},
                             {"seed", opt.seed},
                             {"violations", violations},
                             {"min_slack", min_slack}};
  }
  return doc;
}

std::string human_summary(const json& doc) {
  std::ostringstream s;
  const auto& st = doc["stats"];
  const auto& v = doc["verdict"];
  s << "vertices " << std::accumulate(doc["graph"]["factors"].begin(),
                                      doc["graph"]["factors"].end(), int64_t{1},
                                      [](int64_t a, const json& f) {
                                        return a * f.get<int64_t>();
                                      })
    << ", degree " << v["degree"] << ", components " << st["components"]
    << ", bipartite " << st["bipartite"] << ", diameter " << st["diameter"] << "\n";
  s << "spectrum";
  for (const auto& e : doc["spectrum"]) s << " " << e["value"] << "^" << e["multiplicity"];
  s << "\nramanujan " << v["isRamanujan"] << " (" << v["reason"].get<std::string>() << ")\n";
  return s.str();
}

int run_construct(const Options& opt) {
  using namespace cayley;
  if (opt.construction == "dij") {
    const auto set = dij_set(opt.m, opt.i, opt.j);
    json doc;
    doc["m"] = opt.m;
    doc["i"] = opt.i;
    doc["j"] = opt.j;
    doc["size"] = set.size();
    doc["closed_form_size"] = opt.m >= 2 ? json(dij_cardinality(opt.m, opt.i, opt.j))
                                         : json(nullptr);
    json elems = json::array();
    for (const auto& g : set) elems.push_back(io::element_to_json(g));
    doc["elements"] = elems;
    if (opt.out.empty()) {
      std::cout << io::canonical_dump(doc);
    } else {
      prepare_out(opt);
      write_file(fs::path(opt.out) / "dij.json", io::canonical_dump(doc));
      std::cout << "D_{" << opt.i << "," << opt.j << "} size " << set.size() << "\n";
    }
    return kExitOk;
  }

  ConstructionReport report = [&] {
    if (opt.construction == "theorem33") return theorem33_set(opt.s, opt.r);
    if (opt.construction == "kloosterman-trace") return kloosterman_trace_set(opt.m);
    if (opt.construction == "polar-trace") return polar_trace_set(opt.m);
    if (opt.construction == "bent-hadamard") return bent_hadamard_set(opt.u);
    throw InvalidArgument("unknown construction " + opt.construction);
  }();
  const Certification cert = certify(report, opt.jobs);
  const CayleyGraph graph(report.connection);

  json doc;
  doc["graph"] = io::graph_to_json(graph);
  doc["report"] = io::report_to_json(report);
  doc["stats"] = io::stats_to_json(cert.stats);
  doc["spectrum"] = io::spectrum_to_json(cert.spectrum);
  doc["verdict"] = io::verdict_to_json(cert.verdict);

  if (opt.out.empty()) {
    if (opt.format == "dot") std::cout << io::to_dot(graph);
    else if (opt.format == "csv") std::cout << io::spectrum_to_csv(cert.spectrum);
    else std::cout << io::canonical_dump(doc);
    return kExitOk;
  }
  prepare_out(opt);
  const fs::path dir(opt.out);
  write_file(dir / "graph.json", io::canonical_dump(doc["graph"]));
  write_file(dir / "spectrum.csv", io::spectrum_to_csv(cert.spectrum));
  write_file(dir / "verdict.json", io::canonical_dump(doc["verdict"]));
  write_file(dir / "report.json", io::canonical_dump(doc["report"]));
  if (opt.format == "dot") write_file(dir / "graph.dot", io::to_dot(graph));
  std::cout << report.name << "\n" << human_summary(doc);
  for (const auto& d : report.discrepancies)
    std::cout << "discrepancy " << to_string(d.kind) << ": " << d.detail << "\n";
  return kExitOk;
}

int run_analyze(const Options& opt) {
  std::ifstream f(opt.input);
  if (!f) throw cayley::InvalidArgument("cannot read " + opt.input);
  json input;
  try {
    input = json::parse(f);
  } catch (const json::parse_error& e) {
    throw cayley::InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  const auto graph = cayley::io::graph_from_json(input);
  const json doc = analysis_json(graph, opt);

  if (opt.out.empty()) {
    if (opt.format == "dot") std::cout << cayley::io::to_dot(graph);
    else if (opt.format == "csv")
      std::cout << cayley::io::spectrum_to_csv(cayley::spectrum_by_characters(graph, opt.jobs));
    else std::cout << cayley::io::canonical_dump(doc);
    return kExitOk;
  }
  prepare_out(opt);
  const fs::path dir(opt.out);
  write_file(dir / "analysis.json", cayley::io::canonical_dump(doc));
  write_file(dir / "graph.json", cayley::io::canonical_dump(doc["graph"]));
  write_file(dir / "verdict.json", cayley::io::canonical_dump(doc["verdict"]));
  write_file(dir / "spectrum.csv",
             cayley::io::spectrum_to_csv(cayley::spectrum_by_characters(graph, opt.jobs)));
  if (opt.format == "dot") write_file(dir / "graph.dot", cayley::io::to_dot(graph));
  std::cout << human_summary(doc);
  return kExitOk;
}

int run_search(const Options& opt) {
  using namespace cayley;
  const auto start = std::chrono::steady_clock::now();
  std::ofstream hits_file, summary_file;
  if (!opt.out.empty()) {
    prepare_out(opt);
    hits_file.open(fs::path(opt.out) / "hits.jsonl");
    if (opt.mode == "ramanujan") {
      summary_file.open(fs::path(opt.out) / "summary.csv");
      summary_file << io::search_summary_header();
    }
  }
  std::ostream& hits_out = opt.out.empty() ? std::cout : hits_file;
  const bool csv_stdout = opt.out.empty() && opt.format == "csv";
  if (csv_stdout && opt.mode == "ramanujan") std::cout << io::search_summary_header();

  uint64_t count = 0;
  if (opt.mode == "gds") {
    count = search_gds(static_cast<int>(opt.n), [&](const GdsSearchHit& hit) {
      hits_out << io::gds_hit_to_json(hit).dump() << "\n";
    }, {.canonical_only = opt.canonical});
  } else if (opt.mode == "ramanujan") {
    count = search_ramanujan_circulant(opt.n, [&](const SearchHit& hit) {
      if (csv_stdout) {
        std::cout << io::search_summary_row(hit);
      } else {
        hits_out << io::search_hit_to_json(hit).dump() << "\n";
        if (summary_file.is_open()) summary_file << io::search_summary_row(hit);
      }
    }, {.min_degree = opt.min_degree, .jobs = opt.jobs});
  } else {
    throw InvalidArgument("unknown search mode " + opt.mode);
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!csv_stdout) {
    json summary = {{"summary", {{"mode", opt.mode}, {"n", opt.n}, {"hits", count},
                                 {"wall_seconds", wall}}}};
    std::cout << summary.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graph constructions, spectra and Ramanujan certification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "Directory for machine-readable artifacts");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    cmd->add_option("--jobs", opt.jobs, "Worker thread cap")->check(CLI::Range(1u, 256u));
    cmd->add_option("--seed", opt.seed, "Seed for randomized checks");
  };

  auto* construct = app.add_subcommand("construct", "Build a named construction");
  construct->add_option("name", opt.construction, "Construction name")
      ->required()
      ->check(CLI::IsMember(
          {"theorem33", "kloosterman-trace", "polar-trace", "bent-hadamard", "dij"}));
  construct->add_option("--s", opt.s, "Order of the first cyclic factor");
  construct->add_option("--r", opt.r, "Order of the second cyclic factor");
  construct->add_option("--m", opt.m, "Field degree");
  construct->add_option("--u", opt.u, "Half rank of the bent-function group");
  construct->add_option("--i", opt.i, "Required trace of z")->check(CLI::Range(0, 1));
  construct->add_option("--j", opt.j, "Required trace of 1/z")->check(CLI::Range(0, 1));
  add_common(construct);

  auto* analyze = app.add_subcommand("analyze", "Analyze a graph JSON file");
  analyze->add_option("input", opt.input, "Graph JSON")->required();
  analyze->add_option("--partitions", opt.partitions,
                      "Random partitions for the crossing-lemma check")
      ->check(CLI::NonNegativeNumber);
  add_common(analyze);

  auto* search = app.add_subcommand("search", "Exhaustive searches over Z_n");
  search->add_option("mode", opt.mode, "gds or ramanujan")
      ->required()
      ->check(CLI::IsMember({"gds", "ramanujan"}));
  search->add_option("--n", opt.n, "Group order")->required();
  search->add_option("--minDegree", opt.min_degree, "Smallest degree to report");
  search->add_flag("--canonical", opt.canonical, "One GDS per translate/negation orbit");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(opt);
    if (analyze->parsed()) return run_analyze(opt);
    return run_search(opt);
  } catch (const cayley::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

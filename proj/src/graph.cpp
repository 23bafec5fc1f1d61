#include "cayley/graph.hpp"

#include <bit>
#include <deque>
#include <string>

namespace cayley {

namespace {

std::string describe(const GroupElement& g) {
  std::string s = "(";
  for (size_t i = 0; i < g.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

}  // namespace

ConnectionSet::ConnectionSet(AbelianGroup group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(normalize_set(std::move(elements))) {
  if (elements_.empty()) throw InvalidArgument("connection set is empty");
  member_.assign(static_cast<size_t>(group_.order()), 0);
  for (const auto& c : elements_) {
    if (!group_.contains(c))
      throw InvalidArgument("connection element " + describe(c) +
                            " is not in the group");
    if (group_.is_zero(c))
      throw InvariantViolation("connection set contains the identity");
    member_[static_cast<size_t>(group_.index(c))] = 1;
  }
  for (const auto& c : elements_)
    if (!member_[static_cast<size_t>(group_.index(group_.neg(c)))])
      throw InvariantViolation("connection set is not symmetric: " +
                               describe(c) + " present, its negative missing");
}

CayleyGraph::CayleyGraph(ConnectionSet connection)
    : connection_(std::move(connection)) {}

CayleyGraph CayleyGraph::build(AbelianGroup group,
                               std::vector<GroupElement> elements) {
  return CayleyGraph(ConnectionSet(std::move(group), std::move(elements)));
}

std::vector<int64_t> CayleyGraph::neighbors(int64_t u) const {
  const GroupElement x = group().element(u);
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(degree()));
  for (const auto& c : connection_.elements())
    out.push_back(group().index(group().add(x, c)));
  return out;
}

bool CayleyGraph::adjacent(int64_t u, int64_t v) const {
  return connection_.contains_index(
      group().index(group().sub(group().element(u), group().element(v))));
}

int64_t CayleyGraph::common_neighbors(int64_t u, int64_t v) const {
  int64_t count = 0;
  for (int64_t w : neighbors(u))
    if (adjacent(w, v)) ++count;
  return count;
}

std::vector<int64_t> CayleyGraph::neighbor_table() const {
  std::vector<int64_t> table;
  table.reserve(static_cast<size_t>(vertex_count() * degree()));
  for (int64_t u = 0; u < vertex_count(); ++u) {
    auto row = neighbors(u);
    table.insert(table.end(), row.begin(), row.end());
  }
  return table;
}

namespace {

struct BfsResult {
  int64_t components = 0;
  bool bipartite = true;
  int64_t eccentricity_of_zero = 0;
};

BfsResult run_bfs(const CayleyGraph& graph) {
  const int64_t n = graph.vertex_count();
  const int64_t k = graph.degree();
  const auto table = graph.neighbor_table();
  std::vector<int64_t> dist(static_cast<size_t>(n), -1);
  BfsResult result;
  std::deque<int64_t> queue;
  for (int64_t start = 0; start < n; ++start) {
    if (dist[static_cast<size_t>(start)] >= 0) continue;
    ++result.components;
    dist[static_cast<size_t>(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      const int64_t u = queue.front();
      queue.pop_front();
      const int64_t du = dist[static_cast<size_t>(u)];
      if (start == 0) result.eccentricity_of_zero = du;
      for (int64_t j = 0; j < k; ++j) {
        const int64_t v = table[static_cast<size_t>(u * k + j)];
        int64_t& dv = dist[static_cast<size_t>(v)];
        if (dv < 0) {
          dv = du + 1;
          queue.push_back(v);
        } else if ((dv & 1) == (du & 1)) {
          result.bipartite = false;
        }
      }
    }
  }
  return result;
}

}  // namespace

int64_t components(const CayleyGraph& graph) { return run_bfs(graph).components; }

bool is_bipartite(const CayleyGraph& graph) { return run_bfs(graph).bipartite; }

std::optional<int64_t> diameter(const CayleyGraph& graph) {
  const auto r = run_bfs(graph);
  if (r.components != 1) return std::nullopt;
  return r.eccentricity_of_zero;
}

GraphStats graph_stats(const CayleyGraph& graph) {
  const auto r = run_bfs(graph);
  GraphStats stats;
  stats.component_count = r.components;
  stats.bipartite = r.bipartite;
  if (r.components == 1) stats.diameter = r.eccentricity_of_zero;
  return stats;
}

SrgResult srg_check(const CayleyGraph& graph) {
  SrgResult result;
  if (components(graph) != 1) {
    result.status = SrgStatus::kDisconnected;
    return result;
  }
  const int64_t n = graph.vertex_count();
  const int64_t k = graph.degree();
  const size_t words = static_cast<size_t>((n + 63) / 64);
  const auto table = graph.neighbor_table();
  std::vector<uint64_t> rows(static_cast<size_t>(n) * words, 0);
  for (int64_t u = 0; u < n; ++u)
    for (int64_t j = 0; j < k; ++j) {
      const auto v = static_cast<size_t>(table[static_cast<size_t>(u * k + j)]);
      rows[static_cast<size_t>(u) * words + v / 64] |= uint64_t{1} << (v % 64);
    }

  std::optional<int64_t> lambda, mu;
  for (int64_t u = 0; u < n; ++u) {
    const uint64_t* ru = &rows[static_cast<size_t>(u) * words];
    for (int64_t v = u + 1; v < n; ++v) {
      const uint64_t* rv = &rows[static_cast<size_t>(v) * words];
      int64_t common = 0;
      for (size_t w = 0; w < words; ++w) common += std::popcount(ru[w] & rv[w]);
      const bool adj = (ru[static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
      auto& slot = adj ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        result.status = SrgStatus::kNotStronglyRegular;
        return result;
      }
    }
  }
  result.status = SrgStatus::kStronglyRegular;
  result.params = SrgParameters{n, k, lambda.value_or(0), mu.value_or(0)};
  return result;
}

}  // namespace cayley

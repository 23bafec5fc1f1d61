#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayley/abelian_group.hpp"

namespace cayley {

/// Symmetric, identity-free, nonempty subset of a group.
class ConnectionSet {
 public:
  /// Throws InvariantViolation when the identity is present or the set is
  /// not closed under negation; InvalidArgument on empty or foreign elements.
  ConnectionSet(AbelianGroup group, std::vector<GroupElement> elements);

  const AbelianGroup& group() const { return group_; }
  std::span<const GroupElement> elements() const { return elements_; }
  int64_t size() const { return static_cast<int64_t>(elements_.size()); }
  bool contains_index(int64_t index) const {
    return member_[static_cast<size_t>(index)] != 0;
  }

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  AbelianGroup group_;
  std::vector<GroupElement> elements_;  // sorted
  std::vector<char> member_;            // by element index
};

/// Cay(G, C): u ~ v iff u - v in C. Vertices are element indices.
/// Neighbor lists are regenerated from the connection set on request.
class CayleyGraph {
 public:
  explicit CayleyGraph(ConnectionSet connection);
  static CayleyGraph build(AbelianGroup group, std::vector<GroupElement> elements);

  const ConnectionSet& connection() const { return connection_; }
  const AbelianGroup& group() const { return connection_.group(); }
  int64_t vertex_count() const { return group().order(); }
  int64_t degree() const { return connection_.size(); }

  /// u + c for each c in the connection set, in connection-set order.
  std::vector<int64_t> neighbors(int64_t u) const;
  bool adjacent(int64_t u, int64_t v) const;
  int64_t common_neighbors(int64_t u, int64_t v) const;

  /// neighbors(u) for every u, laid out row-major (n x degree).
  std::vector<int64_t> neighbor_table() const;

 private:
  ConnectionSet connection_;
};

struct GraphStats {
  int64_t component_count = 0;
  bool bipartite = false;
  /// Absent when the graph is disconnected (infinite diameter).
  std::optional<int64_t> diameter;

  bool connected() const { return component_count == 1; }
};

int64_t components(const CayleyGraph& graph);
bool is_bipartite(const CayleyGraph& graph);
/// BFS eccentricity of vertex 0; Cayley graphs are vertex-transitive so this
/// is the diameter.
std::optional<int64_t> diameter(const CayleyGraph& graph);
GraphStats graph_stats(const CayleyGraph& graph);

struct SrgParameters {
  int64_t v = 0;
  int64_t k = 0;
  int64_t lambda = 0;
  int64_t mu = 0;

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

enum class SrgStatus { kStronglyRegular, kNotStronglyRegular, kDisconnected };

struct SrgResult {
  SrgStatus status = SrgStatus::kNotStronglyRegular;
  std::optional<SrgParameters> params;
};

/// Common-neighbor counts over all vertex pairs. Complete graphs have no
/// nonadjacent pairs and report mu = 0.
SrgResult srg_check(const CayleyGraph& graph);

}  // namespace cayley

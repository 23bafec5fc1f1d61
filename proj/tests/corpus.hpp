#pragma once

#include <string>
#include <vector>

#include "cayley/graph.hpp"

namespace cayley::testing {

struct CorpusGraph {
  std::string name;
  CayleyGraph graph;
};

/// Every graph the suites construct: the worked examples, each explicit
/// family within its desk-scale budget, cycles, complete graphs and seeded
/// random circulants. All have at most 1024 vertices.
std::vector<CorpusGraph> corpus();

CayleyGraph cyclic_graph(int64_t n, std::vector<int64_t> residues);

}  // namespace cayley::testing

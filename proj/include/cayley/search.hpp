#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cayley/spectrum.hpp"

namespace cayley {

struct SearchHit {
  int64_t n = 0;
  /// Bit i - 1 selects the pair {i, n - i}, i = 1..floor(n/2).
  uint64_t encoding = 0;
  std::vector<int64_t> c;  // sorted residues
  int64_t degree = 0;
  double second_largest_abs = 0.0;
  RamanujanVerdict verdict;
};

struct RamanujanSearchOptions {
  int64_t min_degree = 2;
  /// Worker threads over encoding shards (0 = hardware concurrency).
  unsigned jobs = 1;
};

/// Residues selected by an encoding, sorted.
std::vector<int64_t> residues_of_encoding(int64_t n, uint64_t s);
/// Inverse of residues_of_encoding; throws unless the set is symmetric and
/// identity-free.
uint64_t encoding_of_residues(int64_t n, const std::vector<int64_t>& c);
/// |C| for an encoding without building C.
int64_t degree_of_encoding(int64_t n, uint64_t s);

/// Every encoding s in [1, 2^{floor(n/2)}) whose circulant graph is connected
/// and certifies as Ramanujan, emitted in increasing s. 3 <= n <= 32.
/// Returns the number of hits.
uint64_t search_ramanujan_circulant(int64_t n,
                                    const std::function<void(const SearchHit&)>& emit,
                                    const RamanujanSearchOptions& options = {});

std::vector<SearchHit> search_ramanujan_circulant(
    int64_t n, const RamanujanSearchOptions& options = {});

}  // namespace cayley

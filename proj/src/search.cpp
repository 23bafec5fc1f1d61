#include "cayley/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace cayley {

namespace {

constexpr int64_t kMinOrder = 3;
constexpr int64_t kMaxOrder = 32;

void check_order(int64_t n) {
  if (n < kMinOrder || n > kMaxOrder)
    throw BudgetExceeded("circulant search needs 3 <= n <= 32, got " +
                         std::to_string(n));
}

uint64_t encoding_limit(int64_t n) { return uint64_t{1} << (n / 2); }

// Certifies one encoding through the standard spectrum path. The float
// screen on cosines only rejects; acceptance always goes through
// ramanujan_check.
std::optional<SearchHit> examine(int64_t n, uint64_t s, int64_t min_degree,
                                 const std::vector<double>& cosines) {
  const int64_t k = degree_of_encoding(n, s);
  if (k < min_degree) return std::nullopt;
  auto c = residues_of_encoding(n, s);

  int64_t g = n;
  for (int64_t x : c) g = std::gcd(g, x);
  if (g != 1) return std::nullopt;

  const double bound = 2.0 * std::sqrt(static_cast<double>(k - 1));
  for (int64_t a = 1; a < n; ++a) {
    double sum = 0.0;
    for (int64_t x : c) sum += cosines[static_cast<size_t>((a * x) % n)];
    if (std::abs(std::abs(sum) - static_cast<double>(k)) > kSnapTolerance &&
        std::abs(sum) > bound + 1e-3)
      return std::nullopt;
  }

  std::vector<GroupElement> elems;
  for (int64_t x : c) elems.push_back(GroupElement{x});
  const CayleyGraph graph = CayleyGraph::build(AbelianGroup::cyclic(n), elems);
  const Spectrum spectrum = spectrum_by_characters(graph);
  GraphStats stats;
  stats.component_count = 1;  // gcd(n, C) == 1
  const auto verdict = ramanujan_check(spectrum, k, stats);
  if (!verdict.is_ramanujan) return std::nullopt;

  SearchHit hit;
  hit.n = n;
  hit.encoding = s;
  hit.c = std::move(c);
  hit.degree = k;
  hit.second_largest_abs = verdict.second_largest_abs;
  hit.verdict = verdict;
  return hit;
}

}  // namespace

std::vector<int64_t> residues_of_encoding(int64_t n, uint64_t s) {
  check_order(n);
  if (s >= encoding_limit(n)) throw InvalidArgument("encoding out of range");
  std::vector<int64_t> c;
  for (int64_t i = 1; i <= n / 2; ++i) {
    if (!((s >> (i - 1)) & 1)) continue;
    c.push_back(i);
    if (n - i != i) c.push_back(n - i);
  }
  std::sort(c.begin(), c.end());
  return c;
}

uint64_t encoding_of_residues(int64_t n, const std::vector<int64_t>& c) {
  check_order(n);
  std::vector<char> member(static_cast<size_t>(n), 0);
  for (int64_t x : c) {
    if (x <= 0 || x >= n) throw InvariantViolation("residue " + std::to_string(x) +
                                                   " is 0 or outside Z_n");
    member[static_cast<size_t>(x)] = 1;
  }
  uint64_t s = 0;
  for (int64_t i = 1; i <= n / 2; ++i) {
    if (member[static_cast<size_t>(i)] != member[static_cast<size_t>(n - i)])
      throw InvariantViolation("residue set is not symmetric");
    if (member[static_cast<size_t>(i)]) s |= uint64_t{1} << (i - 1);
  }
  return s;
}

int64_t degree_of_encoding(int64_t n, uint64_t s) {
  check_order(n);
  if (s >= encoding_limit(n)) throw InvalidArgument("encoding out of range");
  int64_t k = 2 * std::popcount(s);
  if (n % 2 == 0 && ((s >> (n / 2 - 1)) & 1)) --k;
  return k;
}

uint64_t search_ramanujan_circulant(int64_t n,
                                    const std::function<void(const SearchHit&)>& emit,
                                    const RamanujanSearchOptions& options) {
  check_order(n);
  const uint64_t limit = encoding_limit(n);
  std::vector<double> cosines(static_cast<size_t>(n));
  for (int64_t p = 0; p < n; ++p)
    cosines[static_cast<size_t>(p)] = root_of_unity(p, n).real();

  unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::clamp<unsigned>(jobs, 1, 64);

  uint64_t emitted = 0;
  if (jobs == 1) {
    for (uint64_t s = 1; s < limit; ++s)
      if (auto hit = examine(n, s, options.min_degree, cosines)) {
        emit(*hit);
        ++emitted;
      }
    return emitted;
  }

  // Contiguous shards so each worker's hits are already in order; emitted
  // shard by shard afterwards.
  std::vector<std::vector<SearchHit>> shards(jobs);
  std::vector<std::thread> threads;
  const uint64_t span = (limit + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      const uint64_t begin = std::max<uint64_t>(1, w * span);
      const uint64_t end = std::min(limit, (w + 1) * span);
      for (uint64_t s = begin; s < end; ++s)
        if (auto hit = examine(n, s, options.min_degree, cosines))
          shards[w].push_back(std::move(*hit));
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& shard : shards)
    for (const auto& hit : shard) {
      emit(hit);
      ++emitted;
    }
  return emitted;
}

std::vector<SearchHit> search_ramanujan_circulant(int64_t n,
                                                  const RamanujanSearchOptions& options) {
  std::vector<SearchHit> hits;
  search_ramanujan_circulant(
      n, [&](const SearchHit& h) { hits.push_back(h); }, options);
  return hits;
}

}  // namespace cayley

#include "cayley/kloosterman.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace cayley {

int64_t kloosterman(const Gf2Field& field, Gf2Element a, Gf2Element b) {
  int64_t sum = 0;
  for (uint32_t bits = 1; bits < field.size(); ++bits) {
    const Gf2Element x{bits};
    const Gf2Element arg =
        field.add(field.mul(a, x), field.mul(b, field.inv(x)));
    sum += field.abs_trace(arg) ? -1 : 1;
  }
  return sum;
}

int64_t kloosterman(const Gf2Field& field, Gf2Element a) {
  return kloosterman(field, a, field.one());
}

int64_t kloosterman_one_recursive(int m) {
  if (m < 1 || m > 120) throw InvalidArgument("m must be in [1, 120]");
  int64_t prev = 1, cur = 3;  // k_1(1), k_2(1)
  if (m == 1) return prev;
  for (int i = 3; i <= m; ++i) {
    const int64_t next = -cur - 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

int64_t kloosterman_one_carlitz(int m) {
  if (m < 1 || m > 60) throw InvalidArgument("m must be in [1, 60]");
  __int128 sum = 0;
  for (int j = 0; j <= m / 2; ++j) {
    // C(m-j, j) built incrementally; exact in 128 bits for m <= 60.
    __int128 binom = 1;
    for (int i = 0; i < j; ++i) binom = binom * (m - j - i) / (i + 1);
    const __int128 term = binom * m / (m - j) * (__int128{1} << j);
    sum += ((m - j) % 2 == 0) ? term : -term;
  }
  return static_cast<int64_t>(-sum);
}

int64_t kloosterman_lifted(const Gf2Field& field, int s, Gf2Element a) {
  if (s < 0) throw InvalidArgument("lift degree must be >= 0");
  const int64_t q = field.size();
  const int64_t k1 = kloosterman(field, a);
  int64_t prev = -2, cur = k1;
  if (s == 0) return prev;
  for (int i = 2; i <= s; ++i) {
    const int64_t next = -cur * k1 - q * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

int64_t kloosterman_lifted_direct(const Gf2Field& field, int s, Gf2Element a) {
  if (s < 1) throw InvalidArgument("direct lift needs s >= 1");
  const int big_degree = field.degree() * s;
  if (big_degree > Gf2Field::kMaxDegree)
    throw BudgetExceeded("m * s exceeds the field degree budget");
  const Gf2Field big(big_degree);
  const Gf2Embedding embed(field, big);
  return kloosterman(big, embed(a));
}

bool within_weil_bound(int64_t k, int m) {
  // |k| <= 2 * 2^{m/2}  <=>  k^2 <= 4 * 2^m
  return static_cast<__int128>(k) * k <= (__int128{4} << m);
}

KloostermanTable KloostermanTable::compute(const Gf2Field& field,
                                           unsigned jobs) {
  if (field.degree() > kMaxTableDegree)
    throw BudgetExceeded("Kloosterman tables are limited to m <= 12");
  KloostermanTable table;
  table.m_ = field.degree();
  table.modulus_ = field.modulus();
  table.values_.assign(field.size(), 0);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, field.size());
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (uint32_t a = w; a < field.size(); a += jobs)
        table.values_[a] = kloosterman(field, Gf2Element{a});
    });
  }
  for (auto& t : workers) t.join();
  return table;
}

std::string KloostermanTable::file_name(const Gf2Field& field) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "kloosterman_m%d_%x.csv", field.degree(),
                field.modulus());
  return buf;
}

std::filesystem::path KloostermanTable::save(
    const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  const auto path = dir / file_name(Gf2Field(m_, modulus_));
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    char header[64];
    std::snprintf(header, sizeof header, "# m=%d modulus=%x\n", m_, modulus_);
    out << header << "a_bits,value\n";
    for (size_t a = 0; a < values_.size(); ++a)
      out << a << ',' << values_[a] << '\n';
    if (!out) throw std::runtime_error("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
  return path;
}

std::optional<KloostermanTable> KloostermanTable::load(
    const std::filesystem::path& path, const Gf2Field& field) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  int m = 0;
  unsigned modulus = 0;
  if (std::sscanf(line.c_str(), "# m=%d modulus=%x", &m, &modulus) != 2)
    return std::nullopt;
  if (m != field.degree() || modulus != field.modulus()) return std::nullopt;
  if (!std::getline(in, line) || line != "a_bits,value") return std::nullopt;

  KloostermanTable table;
  table.m_ = m;
  table.modulus_ = modulus;
  table.values_.assign(field.size(), 0);
  std::vector<char> seen(field.size(), 0);
  size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    uint64_t a = 0;
    int64_t v = 0;
    if (std::sscanf(line.c_str(), "%" SCNu64 ",%" SCNd64, &a, &v) != 2 ||
        a >= field.size() || seen[a])
      return std::nullopt;
    seen[a] = 1;
    table.values_[a] = v;
    ++rows;
  }
  if (rows != field.size()) return std::nullopt;
  return table;
}

KloostermanTable KloostermanTable::load_or_compute(
    const Gf2Field& field, const std::filesystem::path& dir, unsigned jobs) {
  if (auto cached = load(dir / file_name(field), field)) return *cached;
  auto table = compute(field, jobs);
  table.save(dir);
  return table;
}

std::set<int64_t> kloosterman_value_set(int m) {
  if (m < 2 || m > KloostermanTable::kMaxTableDegree)
    throw InvalidArgument("value sets are defined here for 2 <= m <= 12");
  const auto table = KloostermanTable::compute(Gf2Field(m));
  return {table.values().begin(), table.values().end()};
}

std::set<int64_t> kloosterman_value_set_predicted(int m) {
  if (m < 1 || m > 60) throw InvalidArgument("m must be in [1, 60]");
  std::set<int64_t> out;
  // |t| <= 2^{m/2+1}  <=>  t^2 <= 2^{m+2}
  const __int128 limit = __int128{1} << (m + 2);
  for (int64_t t = -1; static_cast<__int128>(t) * t <= limit; t -= 4)
    out.insert(t);
  for (int64_t t = 3; static_cast<__int128>(t) * t <= limit; t += 4)
    out.insert(t);
  return out;
}

}  // namespace cayley

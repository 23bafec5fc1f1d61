#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cayley/gf2m.hpp"

namespace cayley {

/// k_m(a) = sum over x != 0 of (-1)^{Tr(a x + 1/x)}, by direct summation.
int64_t kloosterman(const Gf2Field& field, Gf2Element a);
/// Two-parameter sum k_m(a, b) = sum over x != 0 of (-1)^{Tr(a x + b/x)}.
int64_t kloosterman(const Gf2Field& field, Gf2Element a, Gf2Element b);

/// k_m(1) from k_1(1) = 1, k_2(1) = 3 and k_{m+2} + k_{m+1} + 2 k_m = 0.
int64_t kloosterman_one_recursive(int m);
/// k_m(1) = -sum_j (-1)^{m-j} m/(m-j) C(m-j, j) 2^j, j = 0..floor(m/2).
int64_t kloosterman_one_carlitz(int m);

/// Lifted sum over GF(2^{ms}) by the three-term recursion with
/// k^(0) = -2 and k^(1) = k_m(a).
int64_t kloosterman_lifted(const Gf2Field& field, int s, Gf2Element a);
/// The same lifted sum evaluated directly in GF(2^{ms}); m * s <= 24.
int64_t kloosterman_lifted_direct(const Gf2Field& field, int s, Gf2Element a);

/// Whether |k| <= 2 * sqrt(2^m), decided in integers.
bool within_weil_bound(int64_t k, int m);

/// All values a -> k_m(a) over one field.
class KloostermanTable {
 public:
  static constexpr int kMaxTableDegree = 12;

  /// Direct evaluation for every a, split across `jobs` threads (0 = auto).
  static KloostermanTable compute(const Gf2Field& field, unsigned jobs = 0);
  /// Reads `path`; returns nullopt when it is missing or describes another
  /// field.
  static std::optional<KloostermanTable> load(const std::filesystem::path& path,
                                              const Gf2Field& field);
  /// Uses `<dir>/<file_name(field)>` when present, otherwise computes and
  /// writes it.
  static KloostermanTable load_or_compute(const Gf2Field& field,
                                          const std::filesystem::path& dir,
                                          unsigned jobs = 0);

  /// kloosterman_m{m}_{modulus_hex}.csv
  static std::string file_name(const Gf2Field& field);

  /// Writes the CSV cache file into `dir` and returns its path.
  std::filesystem::path save(const std::filesystem::path& dir) const;

  int degree() const { return m_; }
  uint32_t modulus() const { return modulus_; }
  int64_t at(Gf2Element a) const { return values_.at(a.bits); }
  const std::vector<int64_t>& values() const { return values_; }

 private:
  int m_ = 0;
  uint32_t modulus_ = 0;
  std::vector<int64_t> values_;
};

/// {k_m(a) : a in GF(2^m)}; 2 <= m <= 12.
std::set<int64_t> kloosterman_value_set(int m);
/// All t = -1 (mod 4) with |t| <= 2^{m/2 + 1}.
std::set<int64_t> kloosterman_value_set_predicted(int m);

}  // namespace cayley

#include "cayley/group_ring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>
#include <unordered_map>

namespace cayley {

DifferenceCounts difference_counts(const AbelianGroup& group,
                                   std::span<const GroupElement> set) {
  if (set.empty()) throw InvalidArgument("difference counts need a nonempty set");
  const auto elems = normalize_set({set.begin(), set.end()});
  DifferenceCounts out;
  out.counts.assign(static_cast<size_t>(group.order()), 0);
  for (const auto& c1 : elems)
    for (const auto& c2 : elems)
      ++out.counts[static_cast<size_t>(group.index(group.sub(c1, c2)))];
  return out;
}

namespace {

// Builds the canonical certificate from a difference-count vector, or
// nullopt when the nonidentity counts take more than two values.
std::optional<GdsCertificate> certificate_from_counts(
    const AbelianGroup& group, std::span<const int64_t> counts,
    std::vector<GroupElement> c) {
  std::set<int64_t> values(counts.begin() + 1, counts.end());
  if (values.size() > 2) return std::nullopt;

  GdsCertificate cert;
  cert.n = group.order();
  cert.k = static_cast<int64_t>(c.size());
  cert.c = std::move(c);
  cert.identity_in_s = true;
  cert.s.push_back(group.zero());
  if (values.size() == 1) {
    cert.mu1 = cert.mu2 = *values.begin();
    return cert;
  }
  // Identity goes into S; the smaller value labels S so that mu1 < mu2.
  cert.mu1 = *values.begin();
  cert.mu2 = *values.rbegin();
  for (int64_t i = 1; i < group.order(); ++i)
    if (counts[static_cast<size_t>(i)] == cert.mu1)
      cert.s.push_back(group.element(i));
  return cert;
}

}  // namespace

std::optional<GdsCertificate> verify_gds(const AbelianGroup& group,
                                         std::span<const GroupElement> set) {
  if (set.empty()) throw InvalidArgument("GDS check needs a nonempty set");
  auto elems = normalize_set({set.begin(), set.end()});
  if (static_cast<int64_t>(elems.size()) == group.order())
    throw InvalidArgument("GDS check needs C != G");
  const auto counts = difference_counts(group, elems);
  return certificate_from_counts(group, counts.counts, std::move(elems));
}

std::optional<DifferenceSetParams> verify_difference_set(
    const AbelianGroup& group, std::span<const GroupElement> set) {
  const auto cert = verify_gds(group, set);
  if (!cert || !cert->is_difference_set()) return std::nullopt;
  return DifferenceSetParams{cert->n, cert->k, cert->mu1};
}

bool group_ring_identity_holds(const AbelianGroup& group,
                               const DifferenceCounts& counts,
                               const GdsCertificate& cert) {
  if (static_cast<int64_t>(counts.counts.size()) != group.order()) return false;
  std::vector<char> in_s(static_cast<size_t>(group.order()), 0);
  for (const auto& g : cert.s) in_s[static_cast<size_t>(group.index(g))] = 1;
  if (static_cast<bool>(in_s[0]) != cert.identity_in_s) return false;

  const int64_t identity_term =
      cert.identity_in_s ? cert.k - cert.mu1 : cert.k - cert.mu2;
  for (int64_t i = 0; i < group.order(); ++i) {
    int64_t rhs = in_s[static_cast<size_t>(i)] ? cert.mu1 : cert.mu2;
    if (i == 0) rhs += identity_term;
    if (counts.at(i) != rhs) return false;
  }
  return true;
}

std::optional<GroupElement> minus_one_multiplier_shift(
    const AbelianGroup& group, std::span<const GroupElement> set) {
  if (set.empty()) throw InvalidArgument("multiplier check needs a nonempty set");
  const auto elems = normalize_set({set.begin(), set.end()});
  std::vector<char> member(static_cast<size_t>(group.order()), 0);
  for (const auto& c : elems) member[static_cast<size_t>(group.index(c))] = 1;

  std::vector<GroupElement> negated;
  negated.reserve(elems.size());
  for (const auto& c : elems) negated.push_back(group.neg(c));

  // -C == C + t  <=>  every -c - t lies in C (sizes match).
  for (int64_t ti = 0; ti < group.order(); ++ti) {
    const GroupElement t = group.element(ti);
    const bool ok = std::all_of(negated.begin(), negated.end(), [&](const auto& x) {
      return member[static_cast<size_t>(group.index(group.sub(x, t)))];
    });
    if (ok) return t;
  }
  return std::nullopt;
}

bool has_multiplier_minus_one(const AbelianGroup& group,
                              std::span<const GroupElement> set) {
  return minus_one_multiplier_shift(group, set).has_value();
}

namespace cyclic_mask {

uint64_t rotate(uint64_t mask, int n, int shift) {
  const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
  shift %= n;
  if (shift < 0) shift += n;
  if (shift == 0) return mask;
  return ((mask << shift) | (mask >> (n - shift))) & full;
}

namespace {

constexpr std::array<uint8_t, 256> kByteReverse = [] {
  std::array<uint8_t, 256> t{};
  for (int b = 0; b < 256; ++b) {
    int r = 0;
    for (int i = 0; i < 8; ++i)
      if (b & (1 << i)) r |= 1 << (7 - i);
    t[static_cast<size_t>(b)] = static_cast<uint8_t>(r);
  }
  return t;
}();

uint64_t reverse64(uint64_t x) {
  uint64_t r = 0;
  for (int i = 0; i < 8; ++i, x >>= 8) r = (r << 8) | kByteReverse[x & 0xff];
  return r;
}

}  // namespace

uint64_t negate(uint64_t mask, int n) {
  // bit i -> bit (n - i) mod n: bit 0 stays, bits 1..n-1 reverse.
  if (n == 1) return mask;
  const uint64_t reversed = reverse64(mask >> 1) >> (64 - (n - 1));
  return (mask & 1) | (reversed << 1);
}

uint64_t orbit_minimum(uint64_t mask, int n) {
  uint64_t best = mask;
  const uint64_t neg = negate(mask, n);
  for (int t = 0; t < n; ++t) {
    best = std::min(best, rotate(mask, n, t));
    best = std::min(best, rotate(neg, n, t));
  }
  return best;
}

std::vector<GroupElement> to_elements(uint64_t mask, int n) {
  std::vector<GroupElement> out;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) out.push_back(GroupElement{i});
  return out;
}

uint64_t from_elements(std::span<const GroupElement> set, int n) {
  uint64_t mask = 0;
  for (const auto& g : set) {
    if (g.rank() != 1 || g[0] < 0 || g[0] >= n)
      throw InvalidArgument("element is not in Z_" + std::to_string(n));
    mask |= uint64_t{1} << g[0];
  }
  return mask;
}

}  // namespace cyclic_mask

uint64_t search_gds(int n, const std::function<void(const GdsSearchHit&)>& emit,
                    const GdsSearchOptions& options) {
  if (n < 2 || n > 24)
    throw BudgetExceeded("GDS search supports 2 <= n <= 24, got " +
                         std::to_string(n));
  const AbelianGroup group = AbelianGroup::cyclic(n);
  const uint64_t limit = uint64_t{1} << n;

  // Canonical encoding -> certificate, kept only for GDS orbits. The
  // certificate (S, mu1, mu2) is invariant along the orbit; only C changes.
  std::unordered_map<uint64_t, GdsCertificate> certified;
  std::vector<int64_t> counts(static_cast<size_t>(n));
  uint64_t emitted = 0;

  for (uint64_t s = 1; s + 1 < limit; ++s) {
    const int k = std::popcount(s);
    if (k < 2) continue;
    const uint64_t canon = cyclic_mask::orbit_minimum(s, n);
    if (options.canonical_only && canon != s) continue;

    const GdsCertificate* base = nullptr;
    if (canon == s) {
      // mu_g = |C cap (C + g)| via rotation and popcount.
      for (int g = 0; g < n; ++g)
        counts[static_cast<size_t>(g)] =
            std::popcount(s & cyclic_mask::rotate(s, n, g));
      auto cert = certificate_from_counts(group, counts,
                                          cyclic_mask::to_elements(s, n));
      if (!cert) continue;
      base = &certified.emplace(s, std::move(*cert)).first->second;
    } else {
      auto it = certified.find(canon);
      if (it == certified.end()) continue;
      base = &it->second;
    }

    GdsSearchHit hit;
    hit.encoding = s;
    hit.certificate = *base;
    hit.certificate.c = cyclic_mask::to_elements(s, n);
    emit(hit);
    ++emitted;
  }
  return emitted;
}

}  // namespace cayley

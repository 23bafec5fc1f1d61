#include "cayley/abelian_group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace cayley {

namespace {

constexpr int64_t kMaxOrder = int64_t{1} << 40;

int64_t mod(int64_t a, int64_t d) {
  int64_t r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int64_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("group needs at least one factor");
  for (int64_t d : factors_) {
    if (d < 2)
      throw InvalidArgument("cyclic factor must be >= 2, got " +
                            std::to_string(d));
    if (order_ > kMaxOrder / d) throw InvalidArgument("group order too large");
    order_ *= d;
    exponent_ = std::lcm(exponent_, d);
  }
}

AbelianGroup AbelianGroup::cyclic(int64_t n) { return AbelianGroup({n}); }

AbelianGroup AbelianGroup::elementary_abelian_2(int t) {
  if (t < 1) throw InvalidArgument("Z_2^t needs t >= 1");
  return AbelianGroup(std::vector<int64_t>(static_cast<size_t>(t), 2));
}

template <class Tag>
void AbelianGroup::check_shape(const Coords<Tag>& c) const {
  if (c.rank() != factors_.size())
    throw InvalidArgument("coordinate count " + std::to_string(c.rank()) +
                          " does not match group rank " +
                          std::to_string(factors_.size()));
  for (size_t i = 0; i < factors_.size(); ++i)
    if (c.coords[i] < 0 || c.coords[i] >= factors_[i])
      throw InvalidArgument("coordinate out of range for factor Z_" +
                            std::to_string(factors_[i]));
}

GroupElement AbelianGroup::zero() const {
  return GroupElement(std::vector<int64_t>(factors_.size(), 0));
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.rank() != factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
  return true;
}

bool AbelianGroup::is_zero(const GroupElement& g) const {
  check_shape(g);
  return std::all_of(g.coords.begin(), g.coords.end(),
                     [](int64_t x) { return x == 0; });
}

GroupElement AbelianGroup::add(const GroupElement& g,
                               const GroupElement& h) const {
  check_shape(g);
  check_shape(h);
  GroupElement r = g;
  for (size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = (g.coords[i] + h.coords[i]) % factors_[i];
  return r;
}

GroupElement AbelianGroup::neg(const GroupElement& g) const {
  check_shape(g);
  GroupElement r = g;
  for (size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = mod(-g.coords[i], factors_[i]);
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& g,
                               const GroupElement& h) const {
  return add(g, neg(h));
}

int64_t AbelianGroup::index(const GroupElement& g) const {
  check_shape(g);
  int64_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i)
    idx = idx * factors_[i] + g.coords[i];
  return idx;
}

int64_t AbelianGroup::index(const CharacterIndex& a) const {
  check_shape(a);
  int64_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i)
    idx = idx * factors_[i] + a.coords[i];
  return idx;
}

GroupElement AbelianGroup::element(int64_t index) const {
  if (index < 0 || index >= order_)
    throw InvalidArgument("element index out of range");
  std::vector<int64_t> c(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    c[i] = index % factors_[i];
    index /= factors_[i];
  }
  return GroupElement(std::move(c));
}

CharacterIndex AbelianGroup::character(int64_t index) const {
  return CharacterIndex(element(index).coords);
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(order_));
  for (int64_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

int64_t AbelianGroup::character_phase(const CharacterIndex& a,
                                      const GroupElement& x) const {
  check_shape(a);
  check_shape(x);
  int64_t p = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int64_t d = factors_[i];
    const auto term = static_cast<__int128>(a.coords[i]) * x.coords[i] % d *
                      (exponent_ / d);
    p = static_cast<int64_t>((p + term) % exponent_);
  }
  return p;
}

std::complex<double> root_of_unity(int64_t p, int64_t q) {
  p = mod(p, q);
  if ((4 * p) % q == 0) {
    switch ((4 * p) / q) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(p) /
                       static_cast<double>(q);
  return {std::cos(theta), std::sin(theta)};
}

std::complex<double> AbelianGroup::character_value(
    const CharacterIndex& a, const GroupElement& x) const {
  return root_of_unity(character_phase(a, x), exponent_);
}

std::complex<double> AbelianGroup::character_sum(
    const CharacterIndex& a, std::span<const GroupElement> set) const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& x : set) sum += character_value(a, x);
  if (std::abs(sum.imag()) < 1e-9 * static_cast<double>(order_) &&
      is_symmetric(set))
    sum.imag(0.0);
  return sum;
}

bool AbelianGroup::is_symmetric(std::span<const GroupElement> set) const {
  std::set<GroupElement> members(set.begin(), set.end());
  for (const auto& x : set)
    if (!members.contains(neg(x))) return false;
  return true;
}

std::vector<GroupElement> AbelianGroup::subgroup_generated(
    std::span<const GroupElement> gens) const {
  for (const auto& g : gens) check_shape(g);
  std::vector<char> seen(static_cast<size_t>(order_), 0);
  std::vector<GroupElement> frontier{zero()};
  seen[0] = 1;
  // Closure under addition of generators; negation follows from finiteness.
  while (!frontier.empty()) {
    GroupElement x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      GroupElement y = add(x, g);
      auto idx = static_cast<size_t>(index(y));
      if (!seen[idx]) {
        seen[idx] = 1;
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<GroupElement> out;
  for (int64_t i = 0; i < order_; ++i)
    if (seen[static_cast<size_t>(i)]) out.push_back(element(i));
  return out;
}

std::vector<GroupElement> normalize_set(std::vector<GroupElement> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace cayley

#include "cayley/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace cayley {

namespace {

constexpr int64_t kOracleMaxVertices = 4096;
constexpr int64_t kExpansionMaxVertices = 20;

}  // namespace

Spectrum Spectrum::from_values(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  for (double& x : v) {
    const double r = std::round(x);
    if (std::abs(x - r) < kSnapTolerance) x = r == 0.0 ? 0.0 : r;
  }
  std::sort(v.begin(), v.end(), std::greater<>());

  const double group_tol = 1e-8 * static_cast<double>(std::max<size_t>(v.size(), 1));
  Spectrum s;
  size_t i = 0;
  while (i < v.size()) {
    const bool exact = std::round(v[i]) == v[i];
    size_t j = i + 1;
    double sum = v[i];
    while (j < v.size() &&
           (exact ? v[j] == v[i] : std::abs(v[j] - v[i]) < group_tol &&
                                       std::round(v[j]) != v[j])) {
      sum += v[j];
      ++j;
    }
    Eigenvalue e;
    e.exact = exact;
    e.multiplicity = static_cast<int64_t>(j - i);
    e.value = exact ? v[i] : sum / static_cast<double>(j - i);
    s.entries_.push_back(e);
    i = j;
  }
  return s;
}

int64_t Spectrum::total_multiplicity() const {
  int64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool Spectrum::all_exact() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Eigenvalue& e) { return e.exact; });
}

int64_t Spectrum::multiplicity_of(double value, double tol) const {
  int64_t m = 0;
  for (const auto& e : entries_)
    if (std::abs(e.value - value) < tol) m += e.multiplicity;
  return m;
}

double Spectrum::second_largest() const {
  if (entries_.empty()) throw InvalidArgument("empty spectrum");
  if (entries_.front().multiplicity > 1 || entries_.size() == 1)
    return entries_.front().value;
  return entries_[1].value;
}

bool Spectrum::symmetric_about_zero(double tol) const {
  for (const auto& e : entries_)
    if (multiplicity_of(-e.value, tol) != e.multiplicity) return false;
  return true;
}

bool Spectrum::trace_identities_hold(int64_t n, int64_t k) const {
  if (total_multiplicity() != n) return false;
  if (all_exact()) {
    __int128 s1 = 0, s2 = 0;
    for (const auto& e : entries_) {
      const __int128 v = e.exact_value();
      s1 += v * e.multiplicity;
      s2 += v * v * e.multiplicity;
    }
    return s1 == 0 && s2 == static_cast<__int128>(n) * k;
  }
  double s1 = 0.0, s2 = 0.0;
  for (const auto& e : entries_) {
    s1 += e.value * static_cast<double>(e.multiplicity);
    s2 += e.value * e.value * static_cast<double>(e.multiplicity);
  }
  const double scale = static_cast<double>(n) * static_cast<double>(k);
  return std::abs(s1) < 1e-6 * scale && std::abs(s2 - scale) < 1e-6 * scale;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  for (const auto& e : entries_)
    out.insert(out.end(), static_cast<size_t>(e.multiplicity), e.value);
  return out;
}

Spectrum spectrum_by_characters(const CayleyGraph& graph, unsigned jobs) {
  const AbelianGroup& group = graph.group();
  const int64_t n = group.order();
  const int64_t exponent = group.exponent();
  const size_t rank = group.rank();

  std::vector<double> cosines(static_cast<size_t>(exponent));
  for (int64_t p = 0; p < exponent; ++p)
    cosines[static_cast<size_t>(p)] = root_of_unity(p, exponent).real();

  // weights[c * rank + i] = c_i * (exponent / d_i): the phase of chi_a(c) is
  // sum_i a_i * weights_i mod exponent.
  const auto conn = graph.connection().elements();
  std::vector<int64_t> weights;
  weights.reserve(conn.size() * rank);
  for (const auto& c : conn)
    for (size_t i = 0; i < rank; ++i)
      weights.push_back(c[i] * (exponent / group.factors()[i]));

  std::vector<double> values(static_cast<size_t>(n));
  auto worker = [&](int64_t begin, int64_t step) {
    for (int64_t ai = begin; ai < n; ai += step) {
      const CharacterIndex a = group.character(ai);
      double sum = 0.0;
      for (size_t c = 0; c < conn.size(); ++c) {
        __int128 phase = 0;
        for (size_t i = 0; i < rank; ++i)
          phase += static_cast<__int128>(a[i]) * weights[c * rank + i];
        sum += cosines[static_cast<size_t>(phase % exponent)];
      }
      values[static_cast<size_t>(ai)] = sum;
    }
  };
  jobs = std::clamp<unsigned>(jobs, 1, 64);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w, jobs);
    for (auto& t : threads) t.join();
  }
  return Spectrum::from_values(values);
}

Spectrum spectrum_oracle(const CayleyGraph& graph) {
  const int64_t n = graph.vertex_count();
  if (n > kOracleMaxVertices)
    throw BudgetExceeded("dense eigensolve limited to 4096 vertices, got " +
                         std::to_string(n));
  const int64_t k = graph.degree();
  const auto table = graph.neighbor_table();
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int64_t u = 0; u < n; ++u)
    for (int64_t j = 0; j < k; ++j)
      adjacency(u, table[static_cast<size_t>(u * k + j)]) += 1.0;
  // Highly degenerate adjacency matrices can stall the QR iteration; a
  // diagonal shift moves every eigenvalue by the same amount and unsticks it.
  for (double shift : {0.0, 0.5, 0.375}) {
    Eigen::MatrixXd shifted = adjacency;
    shifted.diagonal().array() += shift;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(shifted,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    for (double& v : values) v -= shift;
    return Spectrum::from_values(values);
  }
  throw std::runtime_error("symmetric eigensolver did not converge");
}

bool spectra_agree(const Spectrum& a, const Spectrum& b, double tol) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (ea.size() != eb.size()) return false;
  for (size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].multiplicity != eb[i].multiplicity) return false;
    if (std::abs(ea[i].value - eb[i].value) > tol) return false;
  }
  return true;
}

RamanujanVerdict ramanujan_check(const Spectrum& spectrum, int64_t k,
                                 const GraphStats& stats) {
  RamanujanVerdict v;
  v.degree = k;
  v.connected = stats.connected();
  v.bound = 2.0 * std::sqrt(static_cast<double>(std::max<int64_t>(k - 1, 0)));
  const int64_t bound_sq = 4 * (k - 1);

  bool within = true;
  for (const auto& e : spectrum.entries()) {
    // Only exact values can equal +-k; real-tagged values are off-integer.
    if (e.exact && std::llabs(e.exact_value()) == k) continue;
    v.second_largest_abs = std::max(v.second_largest_abs, std::abs(e.value));
    if (e.exact) {
      const int64_t x = e.exact_value();
      if (x * x > bound_sq) within = false;
    } else if (std::abs(std::abs(e.value) - v.bound) < kSnapTolerance) {
      // Equality passes; the flag says exact arithmetic should confirm it.
      v.boundary_flag = true;
    } else if (e.value * e.value > static_cast<double>(bound_sq)) {
      within = false;
    }
  }

  if (!v.connected) {
    v.reason = "not connected";
  } else if (!within) {
    v.reason = "eigenvalue exceeds 2*sqrt(k-1)";
  } else {
    v.is_ramanujan = true;
    v.reason = v.boundary_flag ? "within bound; non-integer eigenvalue at boundary"
                               : "within bound";
  }
  return v;
}

double spectral_gap(const Spectrum& spectrum, int64_t k) {
  return static_cast<double>(k) - spectrum.second_largest();
}

CrossingLemma::CrossingLemma(const CayleyGraph& graph, const Spectrum& spectrum)
    : n_(graph.vertex_count()),
      k_(graph.degree()),
      gap_(spectral_gap(spectrum, graph.degree())),
      table_(graph.neighbor_table()) {}

CrossingBound CrossingLemma::evaluate(std::span<const int64_t> omega1,
                                      std::span<const int64_t> omega2) const {
  std::vector<char> side(static_cast<size_t>(n_), -1);
  auto mark = [&](std::span<const int64_t> part, char label) {
    for (int64_t v : part) {
      if (v < 0 || v >= n_) throw InvalidArgument("vertex out of range");
      char& s = side[static_cast<size_t>(v)];
      if (s != -1) throw InvalidArgument("partition parts overlap or repeat");
      s = label;
    }
  };
  mark(omega1, 0);
  mark(omega2, 1);
  if (std::find(side.begin(), side.end(), char{-1}) != side.end())
    throw InvalidArgument("partition does not cover every vertex");

  CrossingBound out;
  for (int64_t u : omega1)
    for (int64_t j = 0; j < k_; ++j)
      if (side[static_cast<size_t>(table_[static_cast<size_t>(u * k_ + j)])] == 1)
        ++out.actual;
  out.bound = gap_ * static_cast<double>(omega1.size()) *
              static_cast<double>(omega2.size()) / static_cast<double>(n_);
  return out;
}

CrossingBound crossing_lemma_bound(const CayleyGraph& graph,
                                   const Spectrum& spectrum,
                                   std::span<const int64_t> omega1,
                                   std::span<const int64_t> omega2) {
  return CrossingLemma(graph, spectrum).evaluate(omega1, omega2);
}

double vertex_expansion(const CayleyGraph& graph) {
  const int64_t n = graph.vertex_count();
  if (n > kExpansionMaxVertices)
    throw BudgetExceeded("vertex expansion scan limited to 20 vertices");
  std::vector<uint32_t> nbr(static_cast<size_t>(n), 0);
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v : graph.neighbors(u)) nbr[static_cast<size_t>(u)] |= 1u << v;

  // Track the minimum as a fraction to keep comparisons exact.
  int64_t best_num = 1, best_den = 0;
  const uint32_t limit = 1u << n;
  for (uint32_t w = 1; w < limit; ++w) {
    const int size = std::popcount(w);
    if (2 * size > n) continue;
    uint32_t reach = 0;
    for (uint32_t rest = w; rest; rest &= rest - 1)
      reach |= nbr[static_cast<size_t>(std::countr_zero(rest))];
    const int boundary = std::popcount(reach & ~w);
    if (best_den == 0 || boundary * best_den < best_num * size) {
      best_num = boundary;
      best_den = size;
    }
  }
  return static_cast<double>(best_num) / static_cast<double>(best_den);
}

std::vector<double> gds_predicted_eigenvalues(const AbelianGroup& group,
                                              const GdsCertificate& cert) {
  if (cert.n != group.order())
    throw InvalidArgument("certificate order does not match the group");
  for (const auto& g : cert.s)
    if (!group.contains(g))
      throw InvalidArgument("certificate S is not a subset of the group");

  const int64_t base = cert.identity_in_s ? cert.k - cert.mu1 : cert.k - cert.mu2;
  std::vector<double> raw;
  for (int64_t ai = 1; ai < group.order(); ++ai) {
    const double chi_s = group.character_sum(group.character(ai), cert.s).real();
    double radicand = static_cast<double>(base) +
                      static_cast<double>(cert.mu1 - cert.mu2) * chi_s;
    if (radicand < -kSnapTolerance)
      throw std::logic_error("negative radicand in predicted eigenvalue");
    const double root = std::sqrt(std::max(radicand, 0.0));
    raw.push_back(root);
    raw.push_back(-root);
  }
  const auto grouped = Spectrum::from_values(raw);
  std::vector<double> out;
  for (const auto& e : grouped.entries()) out.push_back(e.value);
  return out;
}

GdsFilterReport gds_filters(const AbelianGroup& group, const GdsCertificate& cert) {
  GdsFilterReport r;
  const int64_t s = cert.s_size();
  const int64_t k = cert.k;
  const int64_t lhs = -cert.mu1 + (cert.mu1 - cert.mu2) * s;
  r.connected_filter = lhs < k * k - k;
  r.ramanujan_filter = lhs < 3 * k - 4;

  const auto closure = group.subgroup_generated(cert.s);
  r.s_is_subgroup = static_cast<int64_t>(closure.size()) == s;
  if (r.s_is_subgroup) {
    r.subgroup_connected = (cert.mu1 - cert.mu2) * s - cert.mu1 < k * k - k;
    r.subgroup_ramanujan = (cert.mu1 - cert.mu2) * s <= 3 * k + cert.mu1 - 4;
  }
  return r;
}

}  // namespace cayley

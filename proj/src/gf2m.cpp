#include "cayley/gf2m.hpp"

#include <bit>
#include <string>

namespace cayley {

namespace {

int poly_degree(uint64_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

// Remainder of a modulo b over GF(2)[x].
uint64_t poly_mod(uint64_t a, uint64_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a))
    a ^= b << (da - db);
  return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool Gf2Field::is_irreducible(uint32_t poly, int m) {
  if (m < 1 || poly_degree(poly) != m) return false;
  // Trial division by every polynomial of degree 1..m/2.
  for (int d = 1; d <= m / 2; ++d)
    for (uint64_t f = uint64_t{1} << d; f < (uint64_t{2} << d); ++f)
      if (poly_mod(poly, f) == 0) return false;
  return true;
}

uint32_t Gf2Field::smallest_irreducible(int m) {
  if (m < 1 || m > kMaxDegree)
    throw InvalidArgument("field degree must be in [1, 24], got " +
                          std::to_string(m));
  for (uint64_t p = uint64_t{1} << m; p < (uint64_t{2} << m); ++p)
    if (is_irreducible(static_cast<uint32_t>(p), m))
      return static_cast<uint32_t>(p);
  throw std::logic_error("no irreducible polynomial found");
}

Gf2Field::Gf2Field(int m) : Gf2Field(m, smallest_irreducible(m)) {}

Gf2Field::Gf2Field(int m, uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > kMaxDegree)
    throw InvalidArgument("field degree must be in [1, 24], got " +
                          std::to_string(m));
  if (!is_irreducible(modulus, m))
    throw InvalidArgument("modulus is not irreducible of degree " +
                          std::to_string(m));
  build();
}

void Gf2Field::build() {
  for (int i = 0; i < m_; ++i) {
    Gf2Element basis{uint32_t{1} << i};
    Gf2Element t = zero();
    Gf2Element x = basis;
    for (int j = 0; j < m_; ++j) {
      t = add(t, x);
      x = slow_mul(x, x);
    }
    if (t.bits & 1) trace_mask_ |= uint32_t{1} << i;
  }

  const uint64_t group_order = size() - 1;
  const auto primes = prime_factors(group_order);
  generator_ = 1;
  for (uint32_t g = 2; g < size(); ++g) {
    bool primitive = true;
    for (uint64_t p : primes) {
      if (pow({g}, group_order / p) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  if (m_ <= 16) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * group_order);
    t->log.assign(size(), 0);
    Gf2Element x = one();
    for (uint64_t i = 0; i < group_order; ++i) {
      t->exp[i] = t->exp[i + group_order] = x.bits;
      t->log[x.bits] = static_cast<uint32_t>(i);
      x = slow_mul(x, {generator_});
    }
    tables_ = std::move(t);
  }
}

Gf2Element Gf2Field::element(uint32_t bits) const {
  if (bits >= size())
    throw InvalidArgument("bit pattern exceeds field size 2^" +
                          std::to_string(m_));
  return {bits};
}

Gf2Element Gf2Field::slow_mul(Gf2Element a, Gf2Element b) const {
  uint64_t acc = 0;
  uint64_t x = a.bits;
  for (uint32_t y = b.bits; y; y >>= 1, x <<= 1)
    if (y & 1) acc ^= x;
  return {static_cast<uint32_t>(poly_mod(acc, modulus_))};
}

Gf2Element Gf2Field::mul(Gf2Element a, Gf2Element b) const {
  if (a.bits == 0 || b.bits == 0) return zero();
  if (tables_)
    return {tables_->exp[tables_->log[a.bits] + tables_->log[b.bits]]};
  return slow_mul(a, b);
}

Gf2Element Gf2Field::inv(Gf2Element a) const {
  if (a.bits == 0) throw InvalidArgument("inverse of zero in GF(2^m)");
  if (tables_) {
    const uint32_t order = size() - 1;
    return {tables_->exp[(order - tables_->log[a.bits]) % order]};
  }
  // Extended Euclid over GF(2)[x].
  uint64_t u = a.bits, v = modulus_, g1 = 1, g2 = 0;
  while (u != 1) {
    int j = poly_degree(u) - poly_degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return {static_cast<uint32_t>(poly_mod(g1, modulus_))};
}

Gf2Element Gf2Field::pow(Gf2Element a, uint64_t e) const {
  Gf2Element r = one();
  while (e) {
    if (e & 1) r = tables_ ? mul(r, a) : slow_mul(r, a);
    a = tables_ ? mul(a, a) : slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

Gf2Element Gf2Field::frobenius(Gf2Element a, int i) const {
  i %= m_;
  if (i < 0) i += m_;
  for (int k = 0; k < i; ++k) a = mul(a, a);
  return a;
}

int Gf2Field::abs_trace(Gf2Element a) const {
  return std::popcount(a.bits & trace_mask_) & 1;
}

bool Gf2Field::in_subfield(Gf2Element a, int d) const {
  if (d < 1 || m_ % d != 0)
    throw InvalidArgument("subfield degree " + std::to_string(d) +
                          " does not divide " + std::to_string(m_));
  return frobenius(a, d) == a;
}

int Gf2Field::subfield_trace(Gf2Element a, int d) const {
  if (!in_subfield(a, d))
    throw InvalidArgument("element is not in the subfield GF(2^" +
                          std::to_string(d) + ")");
  Gf2Element t = zero();
  for (int i = 0; i < d; ++i, a = mul(a, a)) t = add(t, a);
  if (t.bits > 1) throw std::logic_error("subfield trace left GF(2)");
  return static_cast<int>(t.bits);
}

Gf2Element Gf2Field::conjugate(Gf2Element a) const {
  if (m_ % 2) throw InvalidArgument("conjugation needs an even degree");
  return frobenius(a, m_ / 2);
}

PolarDecomposition Gf2Field::polar_decompose(Gf2Element a) const {
  if (m_ % 2) throw InvalidArgument("polar decomposition needs an even degree");
  if (a.bits == 0) throw InvalidArgument("polar decomposition of zero");
  // y^2 = a * conj(a) since y is fixed by conjugation and z * conj(z) = 1.
  const Gf2Element norm = mul(a, conjugate(a));
  const Gf2Element y = frobenius(norm, m_ - 1);
  return {y, mul(a, inv(y))};
}

GroupElement Gf2Field::to_group_element(Gf2Element a) const {
  std::vector<int64_t> c(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) c[static_cast<size_t>(i)] = (a.bits >> (m_ - 1 - i)) & 1;
  return GroupElement(std::move(c));
}

Gf2Element Gf2Field::from_group_element(const GroupElement& g) const {
  if (g.rank() != static_cast<size_t>(m_))
    throw InvalidArgument("element rank does not match field degree");
  uint32_t bits = 0;
  for (int i = 0; i < m_; ++i) {
    const int64_t c = g.coords[static_cast<size_t>(i)];
    if (c != 0 && c != 1) throw InvalidArgument("coordinate is not a bit");
    bits = (bits << 1) | static_cast<uint32_t>(c);
  }
  return {bits};
}

Gf2Embedding::Gf2Embedding(const Gf2Field& small, const Gf2Field& big) {
  const int m = small.degree();
  if (big.degree() % m != 0)
    throw InvalidArgument("GF(2^" + std::to_string(m) +
                          ") is not a subfield of GF(2^" +
                          std::to_string(big.degree()) + ")");
  if (m == 1) {
    basis_images_.push_back(big.one());
    return;
  }
  // Walk the multiplicative group of the subfield looking for a root of the
  // small field's modulus.
  const uint64_t cofactor = (uint64_t{big.size()} - 1) / (small.size() - 1);
  const Gf2Element h = big.pow(big.primitive_element(), cofactor);
  Gf2Element beta = big.one();
  bool found = false;
  for (uint32_t j = 0; j + 1 < small.size(); ++j) {
    Gf2Element acc = big.zero();
    for (int bit = m; bit >= 0; --bit) {
      acc = big.mul(acc, beta);
      if ((small.modulus() >> bit) & 1) acc = big.add(acc, big.one());
    }
    if (acc == big.zero()) {
      found = true;
      break;
    }
    beta = big.mul(beta, h);
  }
  if (!found) throw std::logic_error("no root of the subfield modulus found");
  Gf2Element power = big.one();
  for (int i = 0; i < m; ++i) {
    basis_images_.push_back(power);
    power = big.mul(power, beta);
  }
}

Gf2Element Gf2Embedding::operator()(Gf2Element a) const {
  uint32_t bits = 0;
  for (size_t i = 0; i < basis_images_.size(); ++i)
    if ((a.bits >> i) & 1) bits ^= basis_images_[i].bits;
  return {bits};
}

}  // namespace cayley

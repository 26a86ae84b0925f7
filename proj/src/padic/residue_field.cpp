#include "ltlab/padic/residue_field.hpp"

#include <stdexcept>

namespace ltlab {
namespace fp_poly {

static std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = md(a, p), e = p - 2;
  if (b == 0) throw std::domain_error("inverse of 0 mod p");
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly mod(Poly a, const Poly& m, std::int64_t p) {
  Poly mm = m;
  for (auto& c : mm) c = md(c, p);
  trim(mm);
  for (auto& c : a) c = md(c, p);
  trim(a);
  if (mm.empty()) throw std::domain_error("polynomial modulus is zero mod p");
  const std::int64_t lead_inv = inv_mod(mm.back(), p);
  const std::size_t dm = mm.size() - 1;
  while (a.size() > dm && !a.empty()) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = md(a[shift + i] - c * mm[i], p);
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return mod(std::move(c), m, p);
}

Poly powmod(Poly a, std::uint64_t e, const Poly& m, std::int64_t p) {
  Poly r = mod(Poly{1}, m, p);
  a = mod(std::move(a), m, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m, p);
    e >>= 1;
    if (e) a = mulmod(a, a, m, p);
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  for (auto& c : a) c = md(c, p);
  for (auto& c : b) c = md(c, p);
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::int64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = c * li % p;
  }
  return a;
}

bool is_irreducible(const Poly& m0, std::int64_t p) {
  Poly m = m0;
  for (auto& c : m) c = md(c, p);
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t n = m.size() - 1;
  if (n == 1) return true;
  auto x_pow_pk = [&](std::size_t k) {
    // x^(p^k) mod m by repeated p-th powers
    Poly x{0, 1};
    for (std::size_t i = 0; i < k; ++i) x = powmod(x, static_cast<std::uint64_t>(p), m, p);
    return x;
  };
  Poly xn = x_pow_pk(n);
  Poly diff = xn;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = md(diff[1] - 1, p);
  trim(diff);
  if (!mod(diff, m, p).empty()) return false;
  std::size_t rest = n;
  for (std::size_t r = 2; r <= rest; ++r) {
    if (rest % r != 0) continue;
    while (rest % r == 0) rest /= r;
    Poly h = x_pow_pk(n / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = md(h[1] - 1, p);
    trim(h);
    Poly g = gcd(m, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace fp_poly

ResidueField::ResidueField(int p, std::vector<std::int64_t> g_monic) : p_(p), g_(std::move(g_monic)) {
  f_ = static_cast<int>(g_.size()) - 1;
  if (f_ < 1) {
    f_ = 1;
    g_ = {0, 1};
  }
  q_ = 1;
  for (int i = 0; i < f_; ++i) q_ *= static_cast<std::uint64_t>(p_);
}

ResidueField::Elem ResidueField::one() const {
  Elem r(f_, 0);
  r[0] = 1;
  return r;
}

ResidueField::Elem ResidueField::from_int(std::int64_t n) const {
  Elem r(f_, 0);
  r[0] = static_cast<int>(((n % p_) + p_) % p_);
  return r;
}

bool ResidueField::is_zero(const Elem& a) const {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (int i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

ResidueField::Elem ResidueField::neg(const Elem& a) const {
  Elem r(f_);
  for (int i = 0; i < f_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  if (f_ == 1) return Elem{static_cast<int>(static_cast<std::int64_t>(a[0]) * b[0] % p_)};
  fp_poly::Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  fp_poly::Poly c = fp_poly::mulmod(pa, pb, g_, p_);
  Elem r(f_, 0);
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = static_cast<int>(c[i]);
  return r;
}

ResidueField::Elem ResidueField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

ResidueField::Elem ResidueField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of 0 in residue field");
  return pow(a, q_ - 2);
}

ResidueField::Elem ResidueField::from_index(std::uint64_t i) const {
  Elem r(f_, 0);
  for (int k = 0; k < f_; ++k) {
    r[k] = static_cast<int>(i % static_cast<std::uint64_t>(p_));
    i /= static_cast<std::uint64_t>(p_);
  }
  return r;
}

std::vector<ResidueField::Elem> ResidueField::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

}  // namespace ltlab

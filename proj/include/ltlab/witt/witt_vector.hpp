#pragma once

// Ramified Witt vectors W_{O_K,pi}(A) of finite length over pi-torsion-free
// O_K-algebras A, computed through ghost components.

#include <cstdint>
#include <optional>
#include <vector>

#include "ltlab/series/power_series.hpp"
#include "ltlab/witt/multi_poly.hpp"

namespace ltlab {

// The Witt ring is fixed by the uniformizer pi of O_K and q.
class WittParams {
 public:
  WittParams(const LocalElem& pi, std::uint64_t q);
  const LocalElem& pi() const { return pi_; }
  std::uint64_t q() const { return q_; }
  const LocalElem& pi_pow(int i) const;
  const LocalElem& pi_inv_pow(int i) const;

 private:
  LocalElem pi_;
  std::uint64_t q_;
  mutable std::vector<LocalElem> pw_, inv_;
};

// Algebra interface used by the ghost strategy.
template <class A>
struct WittAlgebra;

template <>
struct WittAlgebra<LocalElem> {
  static LocalElem zero_like(const LocalElem& x) { return LocalElem::exact_zero(x.ring()); }
  static LocalElem scalar_like(const LocalElem& c, const LocalElem& x) {
    return LocalElem::embed(c, common_ring(c, x));
  }
  static LocalElem power(const LocalElem& x, std::uint64_t n) { return x.pow(n); }
  static std::optional<LocalElem> scale_integral(const LocalElem& x, const LocalElem& c) {
    LocalElem y = c * x;
    if (y.is_zero()) {
      if (y.abs_prec() < 0) fail(ErrorKind::PrecisionExhausted, "Witt component lost all precision");
      return y;
    }
    if (y.valuation() < 0) return std::nullopt;
    return y;
  }
};

template <>
struct WittAlgebra<PowerSeries> {
  static PowerSeries zero_like(const PowerSeries& x) { return PowerSeries(x.ring(), x.D()); }
  static PowerSeries scalar_like(const LocalElem& c, const PowerSeries& x) {
    PowerSeries s(common_ring(c, x[0]), x.D());
    s[0] = LocalElem::embed(c, s.ring());
    return s;
  }
  static PowerSeries power(const PowerSeries& x, std::uint64_t n) { return pow(x, static_cast<unsigned>(n)); }
  static std::optional<PowerSeries> scale_integral(const PowerSeries& x, const LocalElem& c) {
    PowerSeries y = c * x;
    for (int k = 0; k <= y.D(); ++k) {
      if (y[k].is_zero()) {
        if (y[k].abs_prec() < 0) fail(ErrorKind::PrecisionExhausted, "Witt component lost all precision");
        continue;
      }
      if (y[k].valuation() < 0) return std::nullopt;
    }
    y.set_valuation_floor(std::nullopt);
    return y;
  }
};

template <>
struct WittAlgebra<MultiPoly> {
  static MultiPoly zero_like(const MultiPoly& x) { return MultiPoly(x.ring(), x.nvars()); }
  static MultiPoly scalar_like(const LocalElem& c, const MultiPoly& x) { return MultiPoly::constant(c, x.nvars()); }
  static MultiPoly power(const MultiPoly& x, std::uint64_t n) { return x.pow(n); }
  static std::optional<MultiPoly> scale_integral(const MultiPoly& x, const LocalElem& c) { return x.scale_integral(c); }
};

// a^{(n)} = sum_{i <= n} pi^i a_i^{q^{n-i}}
template <class A>
std::vector<A> witt_ghost(const WittParams& W, const std::vector<A>& a) {
  using T = WittAlgebra<A>;
  std::vector<A> g;
  std::vector<A> pw = a;  // pw[i] = a_i^{q^{n-i}} at step n
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n > 0)
      for (std::size_t i = 0; i < n; ++i) pw[i] = T::power(pw[i], W.q());
    A s = pw[0];
    for (std::size_t i = 1; i <= n; ++i) s = s + W.pi_pow(static_cast<int>(i)) * pw[i];
    g.push_back(s);
  }
  return g;
}

// Unique preimage of u under the ghost map; throws NotInGhostImage when a
// component fails to be integral.
template <class A>
std::vector<A> witt_unghost(const WittParams& W, const std::vector<A>& u) {
  using T = WittAlgebra<A>;
  std::vector<A> a, pw;
  for (std::size_t n = 0; n < u.size(); ++n) {
    for (auto& x : pw) x = T::power(x, W.q());
    A s = u[n];
    for (std::size_t i = 0; i < n; ++i) s = s - W.pi_pow(static_cast<int>(i)) * pw[i];
    std::optional<A> an = n == 0 ? std::optional<A>(s) : T::scale_integral(s, W.pi_inv_pow(static_cast<int>(n)));
    if (!an) fail(ErrorKind::NotInGhostImage, "ghost vector fails the congruence at level " + std::to_string(n));
    a.push_back(*an);
    pw.push_back(*an);
  }
  return a;
}

template <class A>
class WittVector {
 public:
  WittVector(const WittParams& W, std::vector<A> comps) : W_(&W), a_(std::move(comps)), g_(witt_ghost(W, a_)) {}

  static WittVector from_ghost(const WittParams& W, const std::vector<A>& ghost) {
    WittVector w(W);
    w.a_ = witt_unghost(W, ghost);
    w.g_ = ghost;
    return w;
  }
  static WittVector teichmuller(const WittParams& W, const A& x, std::size_t len) {
    std::vector<A> c(len, WittAlgebra<A>::zero_like(x));
    c[0] = x;
    return WittVector(W, std::move(c));
  }
  // image of c in O_K under the structure map: ghost <c, c, ...>
  static WittVector scalar(const WittParams& W, const LocalElem& c, const A& like, std::size_t len) {
    return from_ghost(W, std::vector<A>(len, WittAlgebra<A>::scalar_like(c, like)));
  }

  const WittParams& params() const { return *W_; }
  std::size_t length() const { return a_.size(); }
  const std::vector<A>& components() const { return a_; }
  const A& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<A>& ghost() const { return g_; }

  friend WittVector operator+(const WittVector& x, const WittVector& y) {
    return from_ghost(*x.W_, zip(x, y, [](const A& s, const A& t) { return s + t; }));
  }
  friend WittVector operator-(const WittVector& x, const WittVector& y) {
    return from_ghost(*x.W_, zip(x, y, [](const A& s, const A& t) { return s - t; }));
  }
  friend WittVector operator*(const WittVector& x, const WittVector& y) {
    return from_ghost(*x.W_, zip(x, y, [](const A& s, const A& t) { return s * t; }));
  }
  WittVector operator-() const {
    std::vector<A> g;
    for (auto& c : g_) g.push_back(WittAlgebra<A>::zero_like(c) - c);
    return from_ghost(*W_, g);
  }
  // O_K-algebra action of c
  WittVector scale(const LocalElem& c) const {
    std::vector<A> g;
    for (auto& x : g_) g.push_back(c * x);
    return from_ghost(*W_, g);
  }
  // ghost <a^(1), a^(2), ...>, one component shorter
  WittVector frobenius() const {
    if (g_.size() < 2) fail(ErrorKind::ConfigError, "Frobenius needs length at least 2");
    return from_ghost(*W_, std::vector<A>(g_.begin() + 1, g_.end()));
  }
  // (0, a_0, a_1, ...), one component longer
  WittVector verschiebung() const {
    std::vector<A> c{WittAlgebra<A>::zero_like(a_[0])};
    c.insert(c.end(), a_.begin(), a_.end());
    return WittVector(*W_, std::move(c));
  }
  WittVector truncate(std::size_t len) const {
    return WittVector(*W_, std::vector<A>(a_.begin(), a_.begin() + static_cast<long>(std::min(len, a_.size()))));
  }

 private:
  explicit WittVector(const WittParams& W) : W_(&W) {}
  template <class Op>
  static std::vector<A> zip(const WittVector& x, const WittVector& y, Op op) {
    if (x.length() != y.length()) fail(ErrorKind::RingMismatch, "Witt vectors of different lengths");
    std::vector<A> g;
    for (std::size_t i = 0; i < x.length(); ++i) g.push_back(op(x.g_[i], y.g_[i]));
    return g;
  }
  const WittParams* W_;
  std::vector<A> a_, g_;
};

}  // namespace ltlab

#include "ltlab/witt/witt.hpp"

#include <functional>

namespace ltlab {

WittParams::WittParams(const LocalElem& pi, std::uint64_t q) : pi_(pi), q_(q) {
  pw_.push_back(LocalElem::one(pi.ring()));
  inv_.push_back(LocalElem::one(pi.ring()));
}

const LocalElem& WittParams::pi_pow(int i) const {
  while (static_cast<int>(pw_.size()) <= i) pw_.push_back(pw_.back() * pi_);
  return pw_[static_cast<std::size_t>(i)];
}

const LocalElem& WittParams::pi_inv_pow(int i) const {
  if (inv_.size() == 1) inv_.push_back(pi_.inverse());
  while (static_cast<int>(inv_.size()) <= i) inv_.push_back(inv_.back() * inv_[1]);
  return inv_[static_cast<std::size_t>(i)];
}

std::vector<std::string> structural_var_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n + 1; ++i) names.push_back("X" + std::to_string(i));
  for (int i = 0; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  return names;
}

StructuralPolys structural_polys(const WittParams& W, const LocalRing& R, int n, const std::optional<LocalElem>& x) {
  // variables X_0..X_{n+1}, Y_0..Y_n
  const int nv = 2 * n + 3;
  std::vector<MultiPoly> X, Y;
  for (int i = 0; i <= n + 1; ++i) X.push_back(MultiPoly::var(R, nv, i));
  for (int i = 0; i <= n; ++i) Y.push_back(MultiPoly::var(R, nv, n + 2 + i));
  WittVector<MultiPoly> wx(W, std::vector<MultiPoly>(X.begin(), X.begin() + n + 1));
  WittVector<MultiPoly> wy(W, Y);
  StructuralPolys s;
  s.n = n;
  s.S = (wx + wy).components();
  s.P = (wx * wy).components();
  s.I = (-wx).components();
  s.C = wx.scale(x ? *x : W.pi()).components();
  s.F = WittVector<MultiPoly>(W, X).frobenius().components();
  return s;
}

bool classical_oracle(const Context& ctx, int m) {
  if (ctx.f() != 1 || ctx.e() != 1) fail(ErrorKind::ConfigError, "classical oracle needs K = Q_p");
  const int p = ctx.p();
  WittParams W(ctx.pi(), ctx.q());
  StructuralPolys s = structural_polys(W, ctx.ring(), m - 1);
  const int nv = 2 * (m - 1) + 3;
  using V = std::vector<int>;  // components in F_p
  auto args = [&](const V& a, const V& b) {
    std::vector<ResidueField::Elem> x(static_cast<std::size_t>(nv), ResidueField::Elem{0});
    for (int i = 0; i < m; ++i) {
      x[static_cast<std::size_t>(i)] = {a[static_cast<std::size_t>(i)]};
      x[static_cast<std::size_t>(m + 1 + i)] = {b[static_cast<std::size_t>(i)]};
    }
    return x;
  };
  auto apply = [&](const std::vector<MultiPoly>& polys, const V& a, const V& b) {
    V r;
    auto x = args(a, b);
    for (int i = 0; i < m; ++i) r.push_back(polys[static_cast<std::size_t>(i)].eval_residue(x)[0]);
    return r;
  };
  long pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  // k -> k * 1 by repeated addition
  V one(static_cast<std::size_t>(m), 0), zero(static_cast<std::size_t>(m), 0);
  one[0] = 1;
  std::vector<V> image{zero};
  for (long k = 1; k <= pm; ++k) image.push_back(apply(s.S, image.back(), one));
  if (image[static_cast<std::size_t>(pm)] != zero) return false;
  for (long k = 1; k < pm; ++k)
    if (image[static_cast<std::size_t>(k)] == zero) return false;
  // bijective onto W_m(F_p) since both have p^m elements; check both laws
  for (long a = 0; a < pm; ++a)
    for (long b = 0; b < pm; ++b) {
      const V& x = image[static_cast<std::size_t>(a)];
      const V& y = image[static_cast<std::size_t>(b)];
      if (apply(s.S, x, y) != image[static_cast<std::size_t>((a + b) % pm)]) return false;
      if (apply(s.P, x, y) != image[static_cast<std::size_t>((a * b) % pm)]) return false;
    }
  return true;
}

WittVector<PowerSeries> sP(const WittParams& W, const PowerSeries& h, const PowerSeries& P, std::size_t len) {
  std::vector<PowerSeries> g{h};
  for (std::size_t k = 1; k < len; ++k) g.push_back(compose(g.back(), P));
  return WittVector<PowerSeries>::from_ghost(W, g);
}

namespace {

LocalElem eval_h(const PowerSeries& h, const LocalElem& x) {
  if (h.is_polynomial()) return eval_interior(h, x).value;
  return eval_interior(h, x, h.valuation_floor() ? h.valuation_floor() : std::optional<int>(0)).value;
}

}  // namespace

WittVector<LocalElem> sPa(const WittParams& W, const PowerSeries& h, const PowerSeries& P, const LocalElem& a,
                          std::size_t len) {
  if (a.is_zero() ? a.abs_prec() <= 0 : a.valuation() <= 0)
    fail(ErrorKind::NonPositiveValuationPoint, "S_{P,a} needs v(a) > 0");
  if (!h.integral_determinate()) fail(ErrorKind::IntegralityViolation, "h must be integral");
  std::vector<LocalElem> g;
  LocalElem x = a;
  for (std::size_t k = 0; k < len; ++k) {
    if (k > 0) x = eval_interior(P, x, 0).value;
    g.push_back(eval_h(h, x));
  }
  return WittVector<LocalElem>::from_ghost(W, g);
}

KeyCriterion key_valuation_criterion(const WittParams& W, const PowerSeries& h, const PowerSeries& P,
                                     const LocalElem& a, std::size_t len) {
  KeyCriterion kc;
  const LocalElem& a0 = h[0];
  const int vpi = W.pi().valuation();
  if (!a0.is_exact_zero()) {
    if (a0.is_zero()) fail(ErrorKind::IndeterminateValuation, "h(0) is indistinguishable from 0");
    if (a0.valuation() % vpi != 0) fail(ErrorKind::HypothesisViolated, "v(h(0)) is not a multiple of v(pi)");
    kc.r_from_h = a0.valuation() / vpi;
  }
  auto alpha = sPa(W, h, P, a, len);
  for (std::size_t i = 0; i < len; ++i) {
    const LocalElem& c = alpha[i];
    if (c.is_zero()) {
      if (c.abs_prec() <= 0) fail(ErrorKind::IndeterminateValuation, "component " + std::to_string(i) + " has no precision");
      continue;  // known to have positive valuation
    }
    if (c.valuation() == 0) {
      kc.r_from_alpha = static_cast<int>(i);
      break;
    }
  }
  if (kc.r_from_h >= 0 && kc.r_from_h < static_cast<int>(len)) kc.consistent = kc.r_from_alpha == kc.r_from_h;
  else kc.consistent = kc.r_from_alpha < 0;
  return kc;
}

}  // namespace ltlab

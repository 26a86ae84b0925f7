#include "ltlab/series/power_series.hpp"

#include <algorithm>

namespace ltlab {

namespace {

const LocalRing& ring_of(const PowerSeries& f, const PowerSeries& g) {
  if (f.ring_ptr() == g.ring_ptr()) return f.ring();
  if (g.ring().base() == f.ring_ptr()) return g.ring();
  if (f.ring().base() == g.ring_ptr()) return f.ring();
  fail(ErrorKind::RingMismatch, "series over unrelated rings");
}

int result_degree(const PowerSeries& f, const PowerSeries& g) {
  if (f.is_polynomial() && g.is_polynomial()) return std::max(f.D(), g.D());
  if (f.is_polynomial()) return g.D();
  if (g.is_polynomial()) return f.D();
  return std::min(f.D(), g.D());
}

}  // namespace

PowerSeries::PowerSeries(const LocalRing& R, int D) : R_(&R), c_(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R)) {}

PowerSeries PowerSeries::from_coeffs(std::vector<LocalElem> c, bool polynomial) {
  PowerSeries s;
  if (c.empty()) fail(ErrorKind::RingMismatch, "empty coefficient list");
  s.R_ = c[0].ring_ptr();
  for (auto& x : c) {
    if (x.ring_ptr() != s.R_) x = LocalElem::embed(x, *s.R_);
  }
  s.c_ = std::move(c);
  s.polynomial_ = polynomial;
  return s;
}

PowerSeries PowerSeries::from_poly(const Poly& p, int D) {
  if (p.empty()) fail(ErrorKind::RingMismatch, "empty polynomial");
  const int deg = poly_degree(p);
  PowerSeries s(p[0].ring(), std::max(D, deg));
  for (int i = 0; i <= deg; ++i) s.c_[i] = p[i];
  s.polynomial_ = true;
  return s;
}

PowerSeries PowerSeries::X(const LocalRing& R, int D) {
  PowerSeries s(R, D);
  if (D >= 1) s.c_[1] = LocalElem::one(R);
  s.polynomial_ = true;
  return s;
}

PowerSeries PowerSeries::constant(const LocalElem& c, int D) {
  PowerSeries s(c.ring(), D);
  s.c_[0] = c;
  s.polynomial_ = true;
  return s;
}

PowerSeries PowerSeries::monomial(const LocalElem& c, int k, int D) {
  PowerSeries s(c.ring(), D);
  if (k <= D) s.c_[k] = c;
  s.polynomial_ = true;
  return s;
}

int PowerSeries::order() const {
  for (int k = 0; k <= D(); ++k)
    if (!c_[k].is_exact_zero()) return k;
  return D() + 1;
}

int PowerSeries::nonzero_count() const {
  int n = 0;
  for (auto& c : c_) n += c.is_exact_zero() ? 0 : 1;
  return n;
}

bool PowerSeries::integral_determinate() const {
  for (auto& c : c_)
    if (!c.is_zero() && c.valuation() < 0) return false;
  return true;
}

PowerSeries PowerSeries::truncate(int D) const {
  PowerSeries s = *this;
  if (D < this->D()) {
    s.c_.resize(static_cast<std::size_t>(D + 1));
    s.polynomial_ = false;
  } else if (D > this->D()) {
    if (!polynomial_) fail(ErrorKind::PrecisionExhausted, "cannot extend a truncated series");
    s.c_.resize(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(*R_));
  }
  return s;
}

PowerSeries PowerSeries::derivative() const {
  const int n = std::max(D() - 1, 0);
  PowerSeries s(*R_, n);
  for (int k = 1; k <= D(); ++k) s.c_[k - 1] = c_[k] * LocalElem::from_int(*R_, k);
  s.polynomial_ = polynomial_;
  return s;
}

PowerSeries PowerSeries::embed(const LocalRing& ext) const {
  if (&ext == R_) return *this;
  PowerSeries s(ext, D());
  for (int k = 0; k <= D(); ++k) s.c_[k] = LocalElem::embed(c_[k], ext);
  s.polynomial_ = polynomial_;
  s.floor_ = floor_ ? std::optional<int>(*floor_ * ext.rel_degree()) : std::nullopt;
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

bool PowerSeries::equals(const PowerSeries& o) const {
  const int n = std::min(D(), o.D());
  for (int k = 0; k <= n; ++k)
    if (!c_[k].equals(o.c_[k])) return false;
  return true;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  const LocalRing& R = ring_of(f, g);
  const int D = result_degree(f, g);
  PowerSeries s(R, D);
  for (int k = 0; k <= D; ++k) {
    const bool hf = k <= f.D(), hg = k <= g.D();
    if (hf && hg)
      s[k] = f[k] + g[k];
    else if (hf)
      s[k] = LocalElem::embed(f[k], R);
    else
      s[k] = LocalElem::embed(g[k], R);
  }
  s.set_polynomial(f.is_polynomial() && g.is_polynomial());
  return s;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  const LocalRing& R = ring_of(f, g);
  int D = result_degree(f, g);
  if (f.is_polynomial() && g.is_polynomial()) D = f.D() + g.D();
  PowerSeries s(R, D);
  std::vector<int> gnz;
  for (int j = 0; j <= g.D(); ++j)
    if (!g[j].is_exact_zero()) gnz.push_back(j);
  for (int i = 0; i <= std::min(D, f.D()); ++i) {
    if (f[i].is_exact_zero()) continue;
    for (int j : gnz) {
      if (i + j > D) break;
      s[i + j] += f[i] * g[j];
    }
  }
  // exact zeros are only guaranteed where no product contributed; keep
  // precision of untouched slots as exact zero
  s.set_polynomial(f.is_polynomial() && g.is_polynomial());
  return s;
}

PowerSeries operator*(const LocalElem& a, const PowerSeries& f) {
  const LocalRing& R = common_ring(a, f[0]);
  PowerSeries s(R, f.D());
  for (int k = 0; k <= f.D(); ++k)
    if (!f[k].is_exact_zero()) s[k] = a * f[k];
  s.set_polynomial(f.is_polynomial());
  return s;
}

PowerSeries pow(const PowerSeries& f, unsigned n) {
  PowerSeries r = PowerSeries::constant(LocalElem::one(f.ring()), f.D());
  if (!f.is_polynomial()) r = r.truncate(f.D()), r.set_polynomial(false);
  PowerSeries b = f;
  while (n > 0) {
    if (n & 1) r = (r * b).truncate(std::min(r.D(), f.D()));
    n >>= 1;
    if (n) b = (b * b).truncate(f.D());
  }
  return r;
}

PowerSeries substitute_power(const PowerSeries& f, int k, int D) {
  PowerSeries s(f.ring(), D);
  for (int i = 0; i <= f.D() && i * k <= D; ++i) s[i * k] = f[i];
  s.set_polynomial(f.is_polynomial() && f.D() * k <= D);
  if (!f.is_polynomial() && (f.D() + 1) * k <= D) s = s.truncate((f.D() + 1) * k - 1);
  return s;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (g.D() >= 0 && !g[0].is_exact_zero())
    fail(ErrorKind::NonzeroConstantTerm, "inner series must have an exactly zero constant term");
  const LocalRing& R = ring_of(f, g);
  const int ord = std::max(g.order(), 1);
  int D;
  if (f.is_polynomial() && g.is_polynomial()) {
    D = std::max(f.D(), g.D());
  } else if (f.is_polynomial()) {
    D = g.D();
  } else if (g.is_polynomial()) {
    D = std::min<long long>(static_cast<long long>(f.D() + 1) * ord - 1, std::max(f.D(), g.D()));
  } else {
    D = std::min<long long>(g.D(), static_cast<long long>(f.D() + 1) * ord - 1);
  }
  PowerSeries out(R, D);
  out[0] = LocalElem::embed(f[0], R);
  // power accumulation: P = g^k, starting at order k*ord
  std::vector<LocalElem> P(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R));
  std::vector<int> gnz;
  for (int j = 1; j <= std::min(g.D(), D); ++j)
    if (!g[j].is_exact_zero()) gnz.push_back(j);
  for (int j : gnz) P[j] = LocalElem::embed(g[j], R);
  std::vector<LocalElem> next(static_cast<std::size_t>(D + 1));
  for (int k = 1; k <= f.D() && k * ord <= D; ++k) {
    if (!f[k].is_exact_zero())
      for (int i = k * ord; i <= D; ++i)
        if (!P[i].is_exact_zero()) out[i] += f[k] * P[i];
    if (k == f.D() || (k + 1) * ord > D) break;
    std::fill(next.begin(), next.end(), LocalElem::exact_zero(R));
    for (int i = k * ord; i <= D; ++i) {
      if (P[i].is_exact_zero()) continue;
      for (int j : gnz) {
        if (i + j > D) break;
        next[i + j] += P[i] * g[j];
      }
    }
    std::swap(P, next);
  }
  out.set_polynomial(f.is_polynomial() && g.is_polynomial() && D >= (f.D() * g.D()));
  return out;
}

PowerSeries compose_factored(const PowerSeries& f, const std::vector<FactoredTerm>& arg, int D) {
  if (arg.empty()) fail(ErrorKind::RingMismatch, "empty argument");
  const LocalRing* R = arg[0].gamma.ring_ptr();
  for (auto& t : arg) {
    if (t.gamma.ring().rel_degree() > R->rel_degree()) R = t.gamma.ring_ptr();
    if (t.B.ring().rel_degree() > R->rel_degree()) R = t.B.ring_ptr();
    if (!t.B[0].is_exact_zero()) fail(ErrorKind::NonzeroConstantTerm, "argument must vanish at 0");
  }
  if (f.ring().rel_degree() > R->rel_degree()) R = f.ring_ptr();
  int ord = D + 1;
  for (auto& t : arg) {
    ord = std::min(ord, std::max(t.B.order(), 1));
    if (!t.B.is_polynomial()) D = std::min(D, t.B.D());
  }
  if (!f.is_polynomial()) D = std::min<long long>(D, static_cast<long long>(f.D() + 1) * ord - 1);
  struct Sparse {
    LocalElem gamma;
    std::vector<std::pair<int, LocalElem>> terms;
  };
  std::vector<Sparse> A;
  for (auto& t : arg) {
    Sparse s{t.gamma, {}};
    for (int j = 1; j <= std::min(D, t.B.D()); ++j)
      if (!t.B[j].is_exact_zero()) s.terms.emplace_back(j, t.B[j]);
    A.push_back(std::move(s));
  }
  PowerSeries out(*R, D);
  out[0] = LocalElem::embed(f[0], *R);
  std::vector<LocalElem> P(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(*R));
  for (auto& s : A)
    for (auto& [j, c] : s.terms) P[j] += s.gamma * c;
  std::vector<LocalElem> next(static_cast<std::size_t>(D + 1)), part(static_cast<std::size_t>(D + 1));
  for (int k = 1; k <= f.D() && k * ord <= D; ++k) {
    if (!f[k].is_exact_zero())
      for (int i = k * ord; i <= D; ++i)
        if (!P[i].is_exact_zero()) out[i] += f[k] * P[i];
    if (k == f.D() || (k + 1) * ord > D) break;
    std::fill(next.begin(), next.end(), LocalElem::exact_zero(*R));
    for (auto& s : A) {
      std::fill(part.begin(), part.end(), LocalElem::exact_zero(*R));
      for (int i = k * ord; i <= D; ++i) {
        if (P[i].is_exact_zero()) continue;
        for (auto& [j, c] : s.terms) {
          if (i + j > D) break;
          part[i + j] += P[i] * c;
        }
      }
      for (int i = 0; i <= D; ++i)
        if (!part[i].is_exact_zero()) next[i] += s.gamma * part[i];
    }
    std::swap(P, next);
  }
  return out;
}

PowerSeries reciprocal(const PowerSeries& f) {
  if (!f[0].is_unit()) fail(ErrorKind::NonUnitConstantTerm, "constant term is not a unit");
  const LocalRing& R = f.ring();
  const int D = f.D();
  PowerSeries g(R, D);
  const LocalElem inv0 = f[0].inverse();
  g[0] = inv0;
  for (int k = 1; k <= D; ++k) {
    LocalElem acc = LocalElem::exact_zero(R);
    for (int i = 1; i <= k; ++i)
      if (!f[i].is_exact_zero()) acc += f[i] * g[k - i];
    g[k] = -(acc * inv0);
  }
  return g;
}

PowerSeries reversion(const PowerSeries& f) {
  if (!f[0].is_exact_zero()) fail(ErrorKind::NonzeroConstantTerm, "reversion needs f(0) = 0");
  if (f.D() < 1 || !f[1].is_unit()) fail(ErrorKind::NonUnitLinearCoefficient, "linear coefficient is not a unit");
  const LocalRing& R = f.ring();
  const int D = f.D();
  // df padded to degree D; the padded coefficient never reaches the valid range
  PowerSeries df(R, D);
  {
    const PowerSeries d = f.derivative();
    for (int k = 0; k <= std::min(D, d.D()); ++k) df[k] = d[k];
  }
  PowerSeries h(R, D);
  h[1] = f[1].inverse();
  int valid = 2;  // h correct mod X^valid
  while (valid <= D) {
    const int n = std::min(2 * valid, D + 1);
    PowerSeries ht = h.truncate(n - 1);
    PowerSeries fh = compose(f.truncate(n - 1), ht);
    PowerSeries dfh = compose(df.truncate(n - 1), ht);
    fh[1] -= LocalElem::one(R);
    PowerSeries corr = fh * reciprocal(dfh);
    for (int k = valid; k < n; ++k) h[k] = -corr[k];
    valid = n;
  }
  return h;
}

InteriorEval eval_interior(const PowerSeries& f, const LocalElem& x, std::optional<int> floor) {
  if (x.is_zero() && !x.is_exact_zero() && x.abs_prec() <= 0)
    fail(ErrorKind::NonPositiveValuationPoint, "point not known to have positive valuation");
  if (!x.is_exact_zero() && x.valuation() <= 0) fail(ErrorKind::NonPositiveValuationPoint, "v(x) must be positive");
  const LocalRing& R = common_ring(f[0], x);
  LocalElem acc = LocalElem::embed(f[f.D()], R);
  for (int k = f.D() - 1; k >= 0; --k) acc = acc * x + f[k];
  InteriorEval r{acc, kInfPrec};
  if (f.is_polynomial() || x.is_exact_zero()) return r;
  std::optional<int> m = floor ? floor : f.valuation_floor();
  if (!m) {
    if (!f.integral_determinate())
      fail(ErrorKind::IntegralityViolation, "series with negative coefficients needs a valuation floor");
    fail(ErrorKind::IntegralityViolation, "series carries no valuation floor");
  }
  const int scale = (&R == f.ring_ptr()) ? 1 : R.rel_degree();
  const long long tail = static_cast<long long>(f.D() + 1) * x.valuation() + static_cast<long long>(*m) * scale;
  r.tail_bound = static_cast<int>(std::min<long long>(tail, kInfPrec));
  r.value = acc.with_abs_prec(r.tail_bound);
  return r;
}

std::vector<CoeffValuation> valuation_profile(const PowerSeries& f) {
  std::vector<CoeffValuation> out;
  out.reserve(static_cast<std::size_t>(f.D() + 1));
  for (auto& c : f.coeffs()) {
    CoeffValuation cv;
    cv.exact_zero = c.is_exact_zero();
    cv.determinate = !c.is_zero();
    cv.v = c.valuation();
    out.push_back(cv);
  }
  return out;
}

BoundaryEval eval_boundary(const PowerSeries& f, const LocalElem& x, int window) {
  if (x.is_zero() || x.valuation() < 0) fail(ErrorKind::NonPositiveValuationPoint, "boundary evaluation needs v(x) >= 0");
  const LocalRing& R = common_ring(f[0], x);
  const int D = f.D();
  window = std::clamp(window, 1, D + 1);
  LocalElem sum = LocalElem::embed(f[0], R);
  LocalElem xk = LocalElem::one(R);
  std::vector<int> inc(static_cast<std::size_t>(D + 1), kInfPrec);
  for (int k = 1; k <= D; ++k) {
    xk = xk * x;
    if (f[k].is_exact_zero()) continue;
    LocalElem t = f[k] * xk;
    inc[k] = t.valuation();
    sum += t;
  }
  BoundaryEval r;
  r.profile = valuation_profile(f);
  if (f.is_polynomial()) {
    r.value = sum;
    r.achieved_prec = sum.abs_prec();
    return r;
  }
  int tail = kInfPrec;
  for (int k = D - window + 1; k <= D; ++k) tail = std::min(tail, inc[k]);
  int head = kInfPrec;
  for (int k = 1; k <= std::min(window, D); ++k) head = std::min(head, inc[k]);
  if (tail <= head || tail <= 0)
    fail(ErrorKind::NoStabilization, "increments do not grow: not over-convergent at this truncation");
  r.achieved_prec = std::min(tail, sum.abs_prec());
  r.value = sum.with_abs_prec(r.achieved_prec);
  return r;
}

}  // namespace ltlab

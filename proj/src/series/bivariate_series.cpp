#include "ltlab/series/bivariate_series.hpp"

#include <algorithm>

namespace ltlab {

BivariateSeries::BivariateSeries(const LocalRing& R, int D)
    : R_(&R), D_(D), c_(static_cast<std::size_t>((D + 1) * (D + 2) / 2), LocalElem::exact_zero(R)) {}

BivariateSeries BivariateSeries::from_x(const PowerSeries& f, int D) {
  BivariateSeries B(f.ring(), D);
  for (int i = 0; i <= std::min(D, f.D()); ++i) B.at(i, 0) = f[i];
  B.polynomial_ = f.is_polynomial() && f.D() <= D;
  return B;
}

BivariateSeries BivariateSeries::from_y(const PowerSeries& f, int D) { return from_x(f, D).swap_xy(); }

BivariateSeries BivariateSeries::swap_xy() const {
  BivariateSeries B(*R_, D_);
  for (int t = 0; t <= D_; ++t)
    for (int j = 0; j <= t; ++j) B.at(t - j, j) = at(j, t - j);
  B.polynomial_ = polynomial_;
  return B;
}

BivariateSeries BivariateSeries::truncate(int D) const {
  if (D >= D_) return *this;
  BivariateSeries B(*R_, D);
  for (std::size_t k = 0; k < B.c_.size(); ++k) B.c_[k] = c_[k];
  return B;
}

bool BivariateSeries::equals(const BivariateSeries& o) const {
  const int D = std::min(D_, o.D_);
  for (int t = 0; t <= D; ++t)
    for (int j = 0; j <= t; ++j)
      if (!at(t - j, j).equals(o.at(t - j, j))) return false;
  return true;
}

bool BivariateSeries::integral_determinate() const {
  for (auto& c : c_)
    if (!c.is_zero() && c.valuation() < 0) return false;
  return true;
}

PowerSeries BivariateSeries::restrict_y0() const {
  PowerSeries s(*R_, D_);
  for (int i = 0; i <= D_; ++i) s[i] = at(i, 0);
  s.set_polynomial(polynomial_);
  return s;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  const int D = std::min(a.D_, b.D_);
  BivariateSeries r(*a.R_, D);
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
  r.polynomial_ = a.polynomial_ && b.polynomial_ && a.D_ == b.D_;
  return r;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  const int D = std::min(a.D_, b.D_);
  BivariateSeries r(*a.R_, D);
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int D = std::min(a.D_, b.D_);
  BivariateSeries r(*a.R_, D);
  std::vector<std::pair<int, int>> bnz;
  for (int t = 0; t <= D; ++t)
    for (int j = 0; j <= t; ++j)
      if (!b.at(t - j, j).is_exact_zero()) bnz.emplace_back(t - j, j);
  for (int t = 0; t <= D; ++t)
    for (int j = 0; j <= t; ++j) {
      const LocalElem& x = a.at(t - j, j);
      if (x.is_exact_zero()) continue;
      for (auto [i2, j2] : bnz) {
        if (t + i2 + j2 > D) break;
        r.at(t - j + i2, j + j2) += x * b.at(i2, j2);
      }
    }
  return r;
}

BivariateSeries compose(const PowerSeries& f, const BivariateSeries& B) {
  if (!B.at(0, 0).is_exact_zero()) fail(ErrorKind::NonzeroConstantTerm, "inner series must vanish at the origin");
  const int D = std::min(B.D(), f.D());
  BivariateSeries out(B.ring(), D);
  out.at(0, 0) = f[0];
  BivariateSeries P = B.truncate(D);
  for (int k = 1; k <= D; ++k) {
    for (int t = k; t <= D; ++t)
      for (int j = 0; j <= t; ++j)
        if (!P.at(t - j, j).is_exact_zero()) out.at(t - j, j) += f[k] * P.at(t - j, j);
    if (k < D) P = P * B;
  }
  return out;
}

BivariateEval bps_eval(const BivariateSeries& F, const LocalElem& x, const LocalElem& y) {
  for (const LocalElem* z : {&x, &y})
    if (!z->is_exact_zero() && (z->valuation() <= 0 || (z->is_zero() && z->abs_prec() <= 0)))
      fail(ErrorKind::NonPositiveValuationPoint, "bivariate evaluation needs positive valuations");
  const LocalRing& Rx = common_ring(F.at(0, 0), x);
  const LocalRing& R = (&Rx == x.ring_ptr()) ? common_ring(x, y) : common_ring(F.at(0, 0), y);
  const int D = F.D();
  // Horner in Y for each power of X, then Horner in X
  LocalElem acc = LocalElem::exact_zero(R);
  for (int i = D; i >= 0; --i) {
    LocalElem inner = LocalElem::exact_zero(R);
    for (int j = D - i; j >= 0; --j) inner = inner * y + F.at(i, j);
    acc = acc * x + inner;
  }
  BivariateEval r{acc, kInfPrec};
  if (F.is_polynomial()) return r;
  if (!F.integral_determinate()) fail(ErrorKind::IntegralityViolation, "bivariate evaluation needs an integral series");
  int v = kInfPrec;
  if (!x.is_exact_zero()) v = std::min(v, x.valuation());
  if (!y.is_exact_zero()) v = std::min(v, y.valuation());
  if (v < kInfPrec) {
    r.tail_bound = static_cast<int>(std::min<long long>(static_cast<long long>(D + 1) * v, kInfPrec));
    r.value = acc.with_abs_prec(r.tail_bound);
  }
  return r;
}

PowerSeries bps_eval_series(const BivariateSeries& F, const PowerSeries& S1, const PowerSeries& S2, int D) {
  if (!S1[0].is_exact_zero() || !S2[0].is_exact_zero())
    fail(ErrorKind::NonzeroConstantTerm, "arguments must vanish at 0");
  const int o = std::max(1, std::min(S1.order(), S2.order()));
  D = std::min({D, S1.D(), S2.D()});
  if (!F.is_polynomial()) D = std::min(D, (F.D() + 1) * o - 1);
  const LocalRing& R = (S1.ring().rel_degree() >= S2.ring().rel_degree()) ? S1.ring() : S2.ring();
  PowerSeries a = S1.truncate(D), b = S2.truncate(D);
  // powers of S2
  std::vector<PowerSeries> pb{PowerSeries::constant(LocalElem::one(R), D).truncate(D)};
  for (int j = 1; j <= F.D(); ++j) pb.push_back((pb.back() * b).truncate(D));
  PowerSeries out(R, D);
  PowerSeries pa = PowerSeries::constant(LocalElem::one(R), D).truncate(D);
  for (int i = 0; i <= F.D(); ++i) {
    if (i > 0) pa = (pa * a).truncate(D);
    if (pa.order() > D) break;
    PowerSeries inner(R, D);
    for (int j = 0; j + i <= F.D(); ++j) {
      const LocalElem& c = F.at(i, j);
      if (c.is_exact_zero() || pb[j].order() > D) continue;
      inner = inner + c * pb[j];
    }
    out = out + (inner * pa).truncate(D);
  }
  return out;
}

}  // namespace ltlab

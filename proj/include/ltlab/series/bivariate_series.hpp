#pragma once

#include <vector>

#include "ltlab/series/power_series.hpp"

namespace ltlab {

// Sum of c_{ij} X^i Y^j over i + j <= D, stored by total degree.
class BivariateSeries {
 public:
  BivariateSeries() = default;
  BivariateSeries(const LocalRing& R, int D);

  static BivariateSeries from_x(const PowerSeries& f, int D);
  static BivariateSeries from_y(const PowerSeries& f, int D);

  int D() const { return D_; }
  const LocalRing& ring() const { return *R_; }
  static int index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }
  const LocalElem& at(int i, int j) const { return c_[static_cast<std::size_t>(index(i, j))]; }
  LocalElem& at(int i, int j) { return c_[static_cast<std::size_t>(index(i, j))]; }

  bool is_polynomial() const { return polynomial_; }
  void set_polynomial(bool v) { polynomial_ = v; }

  BivariateSeries swap_xy() const;
  BivariateSeries truncate(int D) const;
  bool equals(const BivariateSeries& o) const;
  bool integral_determinate() const;
  // F(X, 0) as a univariate series
  PowerSeries restrict_y0() const;

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

 private:
  const LocalRing* R_ = nullptr;
  int D_ = 0;
  bool polynomial_ = false;
  std::vector<LocalElem> c_;
};

// f(B) for univariate f and bivariate B with B(0,0) = 0
BivariateSeries compose(const PowerSeries& f, const BivariateSeries& B);

struct BivariateEval {
  LocalElem value;
  int tail_bound;
};
// F(x, y) with tail (D+1) min(v(x), v(y)) for integral F
BivariateEval bps_eval(const BivariateSeries& F, const LocalElem& x, const LocalElem& y);
// F(S1(X), S2(X)) as a univariate series, S1(0) = S2(0) = 0
PowerSeries bps_eval_series(const BivariateSeries& F, const PowerSeries& S1, const PowerSeries& S2, int D);

}  // namespace ltlab

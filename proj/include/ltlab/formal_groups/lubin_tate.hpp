#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ltlab/padic/context.hpp"
#include "ltlab/series/bivariate_series.hpp"
#include "ltlab/series/power_series.hpp"

namespace ltlab {

// P(0) = 0, P'(0) = pi and P = X^q mod pi, at available precision.
bool lt_validate(const PowerSeries& P, const LocalElem& pi, std::uint64_t q);

// Normalized logarithm: L(P(X)) = pi L(X).
PowerSeries lt_log(const PowerSeries& P, const LocalElem& pi, int D);
// Exponential from E(pi Y) = P(E(Y)).
PowerSeries lt_exp(const PowerSeries& P, const LocalElem& pi, int D);
// [a]_P from [a] o P = P o [a].
PowerSeries lt_bracket(const PowerSeries& P, const LocalElem& pi, const LocalElem& a, int D);
// E(L(X) + L(Y)) truncated at total degree D.
BivariateSeries lt_formal_group(const PowerSeries& log, const PowerSeries& exp, int D);

// v_pi(b_k) (q - 1) >= -(k - 1) for the exponential coefficients.
struct BoundReport {
  bool ok = true;
  int checked = 0;
  int indeterminate = 0;
  int first_violation = -1;
};
BoundReport check_convergence_bound(const PowerSeries& exp, std::uint64_t q);

struct HazewinkelResult {
  PowerSeries f;  // f_g
  PowerSeries P;
  BivariateSeries F;
};
HazewinkelResult hazewinkel(const PowerSeries& g, const LocalElem& pi, std::uint64_t q, int D, int D_biv);

// Left fold x_1 +_F x_2 +_F ...; tail_bound is the smallest propagated bound.
BivariateEval fg_sum(const BivariateSeries& F, const std::vector<LocalElem>& values);

class LubinTate {
 public:
  // P must be a polynomial with coefficients in O_K; throws HypothesisViolated
  // when lt_validate fails and ConvergenceBoundViolation when exp violates
  // the coefficient bound.
  static std::shared_ptr<const LubinTate> make(ContextPtr ctx, const Poly& P, const LocalElem& pi, int D, int D_biv);

  const Context& ctx() const { return *ctx_; }
  ContextPtr ctx_ptr() const { return ctx_; }
  const LocalElem& pi() const { return pi_; }
  const Poly& P_poly() const { return Ppoly_; }
  const PowerSeries& P() const { return P_; }
  const PowerSeries& log() const { return log_; }
  const PowerSeries& exp() const { return exp_; }
  int D() const { return D_; }
  int D_biv() const { return D_biv_; }
  std::uint64_t q() const { return ctx_->q(); }
  const BoundReport& bound_report() const { return bound_; }

  const BivariateSeries& F() const;
  const PowerSeries& bracket(const LocalElem& a) const;

 private:
  LubinTate() = default;
  ContextPtr ctx_;
  LocalElem pi_;
  Poly Ppoly_;
  PowerSeries P_, log_, exp_;
  int D_ = 0, D_biv_ = 0;
  BoundReport bound_;
  mutable std::mutex mu_;
  mutable std::unique_ptr<BivariateSeries> F_;
  mutable std::map<std::string, std::unique_ptr<PowerSeries>> brackets_;
};

using LubinTatePtr = std::shared_ptr<const LubinTate>;

// canonical key of an element (digits, shift, precision)
std::string element_key(const LocalElem& x);

}  // namespace ltlab

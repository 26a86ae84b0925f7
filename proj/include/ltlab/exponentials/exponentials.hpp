#pragma once

#include <string>
#include <vector>

#include "ltlab/formal_groups/lubin_tate.hpp"
#include "ltlab/tower/tower.hpp"
#include "ltlab/witt/witt_vector.hpp"

namespace ltlab {

// X + X^q/pi + X^{q^2}/pi^2 + ...
PowerSeries artin_hasse_log(const LocalElem& pi, std::uint64_t q, int D);

// E_P = exp_F o (X + X^q/pi + ...); throws IntegralityViolation.
PowerSeries e_p(const LubinTate& lt, int D);

// exp_F(sum_j lambda^(j) X^{q^j} / pi^j)
PowerSeries e_p_lambda_exp(const LubinTate& lt, const WittVector<LocalElem>& lambda, int D);
// sum^F_j E_P(lambda_j X^{q^j}); needs lt.F() up to degree D
PowerSeries e_p_lambda_fold(const LubinTate& lt, const WittVector<LocalElem>& lambda, int D);
// both routes; throws RouteMismatch when they disagree
PowerSeries e_p_lambda(const LubinTate& lt, const WittVector<LocalElem>& lambda, int D);

// E^Q_{P,m}(X) = exp_F(sum_{i<m} w_{m-i} X^{q^i} / pi^i), w from the tower
PowerSeries e_pmq(const LubinTate& lt, const Tower& T, int m, int D);

struct Certificate {
  bool pass = true;
  int checked = 0;
  int indeterminate = 0;
  int first_failure = -1;
};

struct CurlyE {
  int m = 0;
  PowerSeries series;
  Certificate integrality;  // every determinate coefficient is integral
  Certificate congruence;   // c_1 = w_m and c_k = 0 mod w_m^2
  int min_abs_prec = kInfPrec;  // over coefficients 1..D, tower units
};

// The main series exp_F(sum_{i<m} w_{m-i}(X^{q^i} - X^{q^{i+1}}) / pi^i) over
// O_K[w_m] inside the tower ring.  With strict set, a failed certificate
// throws IntegralityViolation or CongruenceViolation.
CurlyE curly_e(const LubinTate& lt, const Tower& T, int m, int D, bool strict = true);

// max(0, v) style comparison of two series: all coefficients agree at the
// joint precision; min_prec is the smallest precision of the agreement.
struct SeriesComparison {
  bool agree = true;
  int first_mismatch = -1;
  int min_prec = kInfPrec;
};
SeriesComparison compare_series(const PowerSeries& a, const PowerSeries& b);

// E_P(S_{Q,w_n}(X) lambda, X) = sum^F_j E^Q_{P,n-j}(lambda_j X^{q^j})
SeriesComparison decompose_check(const LubinTate& lt, const Tower& T, int n, const WittVector<LocalElem>& lambda,
                                 int D);
// curly_e at level n equals exp_F(pi w_{n+1} X) +_F E_P(S_{Q,w_{n+1}}(X) lambda, X)
// with lambda = S_{Q,w_{n+1}}(Q(X)/X - pi); T must have level >= n + 1.
SeriesComparison main_series_decomposition(const LubinTate& lt, const Tower& T, int n, int D);

struct OverconvergenceProfile {
  std::vector<int> tail_min;  // min valuation over [k, D], tower units
  bool polynomial = false;
  bool growing = false;
  std::string verdict;
};
OverconvergenceProfile overconvergence_profile(const PowerSeries& s);

}  // namespace ltlab

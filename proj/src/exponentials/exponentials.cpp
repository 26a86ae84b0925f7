#include "ltlab/exponentials/exponentials.hpp"

#include "ltlab/witt/witt.hpp"

namespace ltlab {

namespace {

// X^k as a polynomial series over R, truncated at D
PowerSeries monomial_poly(const LocalRing& R, int k, int D) {
  PowerSeries m(R, D);
  if (k <= D) m[k] = LocalElem::one(R);
  m.set_polynomial(true);
  return m;
}

std::vector<int> q_powers(std::uint64_t q, int D) {
  std::vector<int> out;
  for (long long k = 1; k <= D; k *= static_cast<long long>(q)) out.push_back(static_cast<int>(k));
  return out;
}

LocalElem pi_inv_pow(const LocalElem& pi, int i) { return pi.inverse().pow(static_cast<std::uint64_t>(i)); }

// sum^F of the given series, left to right
PowerSeries fg_fold(const BivariateSeries& F, const std::vector<PowerSeries>& terms, int D) {
  PowerSeries acc = terms.front().truncate(std::min(D, terms.front().D()));
  for (std::size_t j = 1; j < terms.size(); ++j) acc = bps_eval_series(F, acc, terms[j], D);
  return acc;
}

PowerSeries identity_poly(const LocalRing& R) { return PowerSeries::from_poly(Poly{LocalElem::exact_zero(R), LocalElem::one(R)}, 1); }

const LocalRing& larger_ring(const LocalRing& a, const LocalRing& b) { return a.rel_degree() >= b.rel_degree() ? a : b; }

}  // namespace

PowerSeries artin_hasse_log(const LocalElem& pi, std::uint64_t q, int D) {
  const LocalRing& R = pi.ring();
  PowerSeries f(R, D);
  const LocalElem inv = pi.inverse();
  LocalElem c = LocalElem::one(R);
  for (int k : q_powers(q, D)) {
    f[k] = c;
    c = c * inv;
  }
  f.set_polynomial(true);
  return f;
}

PowerSeries e_p(const LubinTate& lt, int D) {
  if (D > lt.D()) fail(ErrorKind::ConfigError, "E_P requested beyond the exponential's degree");
  PowerSeries e = compose(lt.exp().truncate(D), artin_hasse_log(lt.pi(), lt.q(), D));
  if (!e.integral_determinate()) fail(ErrorKind::IntegralityViolation, "E_P has a non-integral coefficient");
  return e;
}

PowerSeries e_p_lambda_exp(const LubinTate& lt, const WittVector<LocalElem>& lambda, int D) {
  const auto& g = lambda.ghost();
  std::vector<FactoredTerm> arg;
  const auto qs = q_powers(lt.q(), D);
  const LocalRing& R = g.empty() ? lt.pi().ring() : g[0].ring();
  for (std::size_t j = 0; j < qs.size(); ++j) {
    if (j >= g.size()) {
      D = qs[j] - 1;  // beyond the known ghost components
      break;
    }
    arg.push_back({g[j] * pi_inv_pow(lt.pi(), static_cast<int>(j)), monomial_poly(R, qs[j], D)});
  }
  if (arg.empty()) fail(ErrorKind::ConfigError, "Witt vector has no components");
  for (auto& t : arg) t.B = t.B.truncate(D);
  return compose_factored(lt.exp().truncate(std::min(D, lt.exp().D())), arg, D);
}

PowerSeries e_p_lambda_fold(const LubinTate& lt, const WittVector<LocalElem>& lambda, int D) {
  const auto qs = q_powers(lt.q(), D);
  const std::size_t len = std::min(qs.size(), lambda.length());
  if (len == 0) fail(ErrorKind::ConfigError, "Witt vector has no components");
  if (len < qs.size()) D = qs[len] - 1;
  const PowerSeries E = e_p(lt, D);
  std::vector<PowerSeries> terms;
  for (std::size_t j = 0; j < len; ++j) {
    const LocalElem& c = lambda[j];
    terms.push_back(compose_factored(E, {{c, monomial_poly(c.ring(), qs[j], D)}}, D));
  }
  return fg_fold(lt.F(), terms, D);
}

PowerSeries e_p_lambda(const LubinTate& lt, const WittVector<LocalElem>& lambda, int D) {
  PowerSeries a = e_p_lambda_exp(lt, lambda, D);
  PowerSeries b = e_p_lambda_fold(lt, lambda, D);
  SeriesComparison c = compare_series(a, b);
  if (!c.agree)
    fail(ErrorKind::RouteMismatch, "exp and fold routes differ at X^" + std::to_string(c.first_mismatch));
  return a;
}

PowerSeries e_pmq(const LubinTate& lt, const Tower& T, int m, int D) {
  if (m < 1 || m > T.n()) fail(ErrorKind::ConfigError, "level outside the tower");
  const LocalRing& L = T.ring();
  const auto qs = q_powers(lt.q(), D);
  std::vector<FactoredTerm> arg;
  for (int i = 0; i < m && i < static_cast<int>(qs.size()); ++i)
    arg.push_back({T.omega(m - i) * pi_inv_pow(lt.pi(), i), monomial_poly(L, qs[static_cast<std::size_t>(i)], D)});
  return compose_factored(lt.exp().truncate(std::min(D, lt.exp().D())), arg, D);
}

CurlyE curly_e(const LubinTate& lt, const Tower& T, int m, int D, bool strict) {
  if (m < 1 || m > T.n()) fail(ErrorKind::ConfigError, "level outside the tower");
  if (D > lt.exp().D()) fail(ErrorKind::ConfigError, "series degree exceeds the exponential's degree");
  const LocalRing& L = T.ring();
  std::vector<FactoredTerm> arg;
  const auto qs = q_powers(lt.q(), D);
  for (int i = 0; i < m && i < static_cast<int>(qs.size()); ++i) {
    const long long a = qs[static_cast<std::size_t>(i)];
    const long long b = a * static_cast<long long>(lt.q());
    PowerSeries B(L, D);
    B[static_cast<int>(a)] = LocalElem::one(L);
    if (b <= D) B[static_cast<int>(b)] = LocalElem::from_int(L, -1);
    B.set_polynomial(true);
    arg.push_back({T.omega(m - i) * pi_inv_pow(lt.pi(), i), B});
  }
  CurlyE out;
  out.m = m;
  out.series = compose_factored(lt.exp().truncate(D), arg, D);
  const PowerSeries& s = out.series;
  const LocalElem& wm = T.omega(m);
  const int two_v = 2 * wm.valuation();
  for (int k = 1; k <= s.D(); ++k) {
    const LocalElem& c = s[k];
    out.min_abs_prec = std::min(out.min_abs_prec, c.abs_prec());
    // part 1
    ++out.integrality.checked;
    if (c.is_zero()) {
      if (c.abs_prec() < 0) ++out.integrality.indeterminate;
    } else if (c.valuation() < 0 && out.integrality.pass) {
      out.integrality.pass = false;
      out.integrality.first_failure = k;
    }
    // part 2
    const LocalElem r = k == 1 ? c - wm : c;
    ++out.congruence.checked;
    if (r.is_zero()) {
      if (r.abs_prec() < two_v) ++out.congruence.indeterminate;
    } else if (r.valuation() < two_v && out.congruence.pass) {
      out.congruence.pass = false;
      out.congruence.first_failure = k;
    }
  }
  if (strict && !out.integrality.pass)
    fail(ErrorKind::IntegralityViolation,
         "coefficient of X^" + std::to_string(out.integrality.first_failure) + " is not integral");
  if (strict && !out.congruence.pass)
    fail(ErrorKind::CongruenceViolation,
         "coefficient of X^" + std::to_string(out.congruence.first_failure) + " breaks the congruence");
  return out;
}

SeriesComparison compare_series(const PowerSeries& a, const PowerSeries& b) {
  SeriesComparison out;
  const LocalRing& R = larger_ring(a.ring(), b.ring());
  for (int k = 0; k <= std::min(a.D(), b.D()); ++k) {
    const LocalElem d = LocalElem::embed(a[k], R) - LocalElem::embed(b[k], R);
    out.min_prec = std::min(out.min_prec, d.abs_prec());
    if (!d.is_zero() && out.agree) {
      out.agree = false;
      out.first_mismatch = k;
    }
  }
  return out;
}

SeriesComparison decompose_check(const LubinTate& lt, const Tower& T, int n, const WittVector<LocalElem>& lambda,
                                 int D) {
  if (n < 1 || n > T.n()) fail(ErrorKind::ConfigError, "level outside the tower");
  const WittParams& W = lambda.params();
  const LocalRing& L = T.ring();
  const WittVector<LocalElem> s = sPa(W, identity_poly(L), PowerSeries::from_poly(T.Q_poly(), static_cast<int>(lt.q())),
                                      T.omega(n), lambda.length());
  const PowerSeries left = e_p_lambda_exp(lt, s * lambda, D);
  const auto qs = q_powers(lt.q(), D);
  std::vector<PowerSeries> terms;
  for (int j = 0; j < n && j < static_cast<int>(lambda.length()) && j < static_cast<int>(qs.size()); ++j) {
    const PowerSeries E = e_pmq(lt, T, n - j, D);
    const LocalElem& c = lambda[static_cast<std::size_t>(j)];
    terms.push_back(compose_factored(E, {{c, monomial_poly(L, qs[static_cast<std::size_t>(j)], D)}}, D));
  }
  const PowerSeries right = fg_fold(lt.F(), terms, D);
  return compare_series(left, right);
}

SeriesComparison main_series_decomposition(const LubinTate& lt, const Tower& T, int n, int D) {
  if (n + 1 > T.n()) fail(ErrorKind::ConfigError, "decomposition needs a tower of level n + 1");
  const LocalRing& L = T.ring();
  const std::uint64_t q = lt.q();
  const std::size_t len = q_powers(q, D).size();
  const WittParams W(lt.pi(), q);
  const PowerSeries Qs = PowerSeries::from_poly(T.Q_poly(), static_cast<int>(q));
  // Q(X)/X - pi as a polynomial over K
  Poly g;
  for (int i = 1; i <= static_cast<int>(q); ++i) g.push_back(T.Q_poly()[static_cast<std::size_t>(i)]);
  g[0] = g[0] - lt.pi();
  const WittVector<LocalElem> lambda = sPa(W, PowerSeries::from_poly(g, static_cast<int>(q) - 1), Qs, T.omega(n + 1), len);
  const WittVector<LocalElem> s =
      sPa(W, identity_poly(L), Qs, T.omega(n + 1), len);
  const PowerSeries tail = e_p_lambda_exp(lt, s * lambda, D);
  PowerSeries head(L, std::min(D, lt.exp().D()));
  const PowerSeries lin = PowerSeries::monomial(lt.pi() * T.omega(n + 1), 1, head.D());
  head = compose(lt.exp().truncate(head.D()), lin);
  const PowerSeries right = bps_eval_series(lt.F(), head, tail, D);
  const PowerSeries left = curly_e(lt, T, n, std::min(D, right.D()), false).series;
  return compare_series(left, right);
}

OverconvergenceProfile overconvergence_profile(const PowerSeries& s) {
  OverconvergenceProfile out;
  const int D = s.D();
  out.tail_min.assign(static_cast<std::size_t>(D + 1), kInfPrec);
  int run = kInfPrec;
  for (int k = D; k >= 0; --k) {
    const LocalElem& c = s[k];
    if (!c.is_exact_zero()) run = std::min(run, c.is_zero() ? c.abs_prec() : c.valuation());
    out.tail_min[static_cast<std::size_t>(k)] = run;
  }
  // exactly vanishing last quarter (series like ours may skip residues mod q - 1)
  if (s.is_polynomial() || (D >= 4 && out.tail_min[static_cast<std::size_t>(3 * D / 4)] >= kInfPrec)) {
    out.polynomial = true;
    out.growing = true;
    out.verdict = "empirically over-convergent";
    return out;
  }
  // sampled windows at D/4, D/2, 3D/4, D
  std::vector<int> w;
  for (int i = 1; i <= 4; ++i) w.push_back(out.tail_min[static_cast<std::size_t>(std::max(1, i * D / 4))]);
  out.growing = D >= 4;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] <= w[i - 1]) out.growing = false;
  out.verdict = out.growing ? "empirically over-convergent" : "not over-convergent";
  return out;
}

}  // namespace ltlab

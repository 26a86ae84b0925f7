#include "ltlab/formal_groups/lubin_tate.hpp"

#include <sstream>

namespace ltlab {

namespace {

std::vector<std::pair<int, LocalElem>> sparse_terms(const PowerSeries& P, int from, int D) {
  std::vector<std::pair<int, LocalElem>> t;
  for (int i = from; i <= std::min(P.D(), D); ++i)
    if (!P[i].is_exact_zero()) t.emplace_back(i, P[i]);
  return t;
}

// next = cur * P truncated at D (cur has order >= k)
void mul_sparse(const std::vector<LocalElem>& cur, int k, const std::vector<std::pair<int, LocalElem>>& Pt, int D,
                std::vector<LocalElem>& next, const LocalRing& R) {
  std::fill(next.begin(), next.end(), LocalElem::exact_zero(R));
  for (int i = k; i <= D; ++i) {
    if (cur[i].is_exact_zero()) continue;
    for (auto& [j, c] : Pt) {
      if (i + j > D) break;
      next[i + j] += cur[i] * c;
    }
  }
}

std::vector<LocalElem> pi_powers(const LocalElem& pi, int D) {
  std::vector<LocalElem> pw{LocalElem::one(pi.ring())};
  for (int m = 1; m <= D; ++m) pw.push_back(pw.back() * pi);
  return pw;
}

// rows of the powers B^2, ..., B^imax at index m, given B known below m
void power_rows(std::vector<std::vector<LocalElem>>& Bp, const std::vector<LocalElem>& B, int imax, int m,
                const LocalRing& R) {
  for (int i = 2; i <= std::min(imax, m); ++i) {
    LocalElem acc = LocalElem::exact_zero(R);
    for (int j = 1; j <= m - i + 1; ++j) {
      const LocalElem& x = Bp[i - 1][m - j];
      if (B[j].is_exact_zero() || x.is_exact_zero()) continue;
      acc += B[j] * x;
    }
    Bp[i][m] = acc;
  }
}

}  // namespace

bool lt_validate(const PowerSeries& P, const LocalElem& pi, std::uint64_t q) {
  if (P.D() < 1) return false;
  if (!P[0].is_zero()) return false;
  if (!P[1].equals(pi)) return false;
  const LocalElem one = LocalElem::one(P.ring());
  for (int i = 0; i <= P.D(); ++i) {
    LocalElem c = (static_cast<std::uint64_t>(i) == q) ? P[i] - one : P[i];
    if (c.is_zero()) {
      if (c.abs_prec() < pi.valuation()) return false;
      continue;
    }
    if (c.valuation() < pi.valuation()) return false;
  }
  if (P.is_polynomial() && static_cast<std::uint64_t>(P.D()) < q) return false;
  return true;
}

PowerSeries lt_log(const PowerSeries& P, const LocalElem& pi, int D) {
  const LocalRing& R = P.ring();
  auto Pt = sparse_terms(P, 1, D);
  auto pw = pi_powers(pi, D);
  PowerSeries L(R, D);
  L[1] = LocalElem::one(R);
  std::vector<LocalElem> Pk(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R));
  for (auto& [j, c] : Pt) Pk[j] = c;
  std::vector<LocalElem> S = Pk, next(static_cast<std::size_t>(D + 1));
  for (int m = 2; m <= D; ++m) {
    L[m] = S[m] / (pi - pw[m]);
    mul_sparse(Pk, m - 1, Pt, D, next, R);
    std::swap(Pk, next);
    for (int i = m; i <= D; ++i)
      if (!Pk[i].is_exact_zero() && !L[m].is_exact_zero()) S[i] += L[m] * Pk[i];
  }
  return L;
}

PowerSeries lt_exp(const PowerSeries& P, const LocalElem& pi, int D) {
  const LocalRing& R = P.ring();
  auto pw = pi_powers(pi, D);
  int imax = 1;
  for (int i = 2; i <= std::min(P.D(), D); ++i)
    if (!P[i].is_exact_zero()) imax = i;
  if (!P.is_polynomial()) imax = std::min(P.D(), D);
  PowerSeries E(R, D);
  std::vector<LocalElem> e(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R));
  e[1] = LocalElem::one(R);
  std::vector<std::vector<LocalElem>> Ep(static_cast<std::size_t>(imax + 1),
                                         std::vector<LocalElem>(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R)));
  if (imax >= 1) Ep[1] = e;
  for (int m = 2; m <= D; ++m) {
    power_rows(Ep, e, imax, m, R);
    LocalElem rhs = LocalElem::exact_zero(R);
    for (int i = 2; i <= std::min(imax, m); ++i)
      if (i <= P.D() && !P[i].is_exact_zero() && !Ep[i][m].is_exact_zero()) rhs += P[i] * Ep[i][m];
    e[m] = rhs.is_exact_zero() ? rhs : rhs / (pw[m] - pi);
    Ep[1][m] = e[m];
  }
  for (int m = 0; m <= D; ++m) E[m] = e[m];
  return E;
}

PowerSeries lt_bracket(const PowerSeries& P, const LocalElem& pi, const LocalElem& a, int D) {
  const LocalRing& R = P.ring();
  if (!a.is_exact_zero() && !a.is_zero() && a.valuation() < 0)
    fail(ErrorKind::IntegralityViolation, "[a]_P needs a in O_K");
  auto pw = pi_powers(pi, D);
  auto Pt = sparse_terms(P, 1, D);
  int imax = 1;
  for (int i = 2; i <= std::min(P.D(), D); ++i)
    if (!P[i].is_exact_zero()) imax = i;
  if (!P.is_polynomial()) imax = std::min(P.D(), D);
  std::vector<LocalElem> b(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R));
  b[1] = LocalElem::embed(a, R);
  std::vector<std::vector<LocalElem>> Bp(static_cast<std::size_t>(imax + 1),
                                         std::vector<LocalElem>(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R)));
  Bp[1] = b;
  std::vector<LocalElem> Pk(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R));
  for (auto& [j, c] : Pt) Pk[j] = c;
  std::vector<LocalElem> S(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R)), next(static_cast<std::size_t>(D + 1));
  for (int i = 1; i <= D; ++i)
    if (!Pk[i].is_exact_zero()) S[i] = b[1] * Pk[i];
  for (int m = 2; m <= D; ++m) {
    power_rows(Bp, b, imax, m, R);
    LocalElem rhs = -S[m];
    for (int i = 2; i <= std::min(imax, m); ++i)
      if (i <= P.D() && !P[i].is_exact_zero() && !Bp[i][m].is_exact_zero()) rhs += P[i] * Bp[i][m];
    b[m] = rhs.is_exact_zero() ? rhs : rhs / (pw[m] - pi);
    Bp[1][m] = b[m];
    mul_sparse(Pk, m - 1, Pt, D, next, R);
    std::swap(Pk, next);
    if (!b[m].is_exact_zero())
      for (int i = m; i <= D; ++i)
        if (!Pk[i].is_exact_zero()) S[i] += b[m] * Pk[i];
  }
  PowerSeries out(R, D);
  for (int m = 0; m <= D; ++m) out[m] = b[m];
  if (!out.integral_determinate()) fail(ErrorKind::IntegralityViolation, "[a]_P has a non-integral coefficient");
  out.set_valuation_floor(0);
  return out;
}

BivariateSeries lt_formal_group(const PowerSeries& log, const PowerSeries& exp, int D) {
  D = std::min({D, log.D(), exp.D()});
  const LocalRing& R = log.ring();
  // lam[j][a] = [X^a] L^j
  std::vector<std::vector<LocalElem>> lam(static_cast<std::size_t>(D + 1),
                                          std::vector<LocalElem>(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R)));
  lam[0][0] = LocalElem::one(R);
  for (int j = 1; j <= D; ++j)
    for (int a = j; a <= D; ++a) {
      LocalElem acc = LocalElem::exact_zero(R);
      for (int i = 1; i <= a - (j - 1); ++i) {
        const LocalElem& x = lam[j - 1][a - i];
        if (x.is_exact_zero() || log[i].is_exact_zero()) continue;
        acc += log[i] * x;
      }
      lam[j][a] = acc;
    }
  // M[j][b] = sum_l e_{j+l} C(j+l, j) lam[l][b]
  std::vector<std::vector<LocalElem>> M(static_cast<std::size_t>(D + 1),
                                        std::vector<LocalElem>(static_cast<std::size_t>(D + 1), LocalElem::exact_zero(R)));
  for (int j = 0; j <= D; ++j)
    for (int b = 0; j + b <= D; ++b) {
      LocalElem acc = LocalElem::exact_zero(R);
      for (int l = 0; l <= b && j + l <= D; ++l) {
        const LocalElem& x = lam[l][b];
        if (x.is_exact_zero() || exp[j + l].is_exact_zero()) continue;
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(j + l), static_cast<unsigned long>(j));
        acc += exp[j + l] * LocalElem::from_int(R, c) * x;
      }
      M[j][b] = acc;
    }
  BivariateSeries F(R, D);
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      LocalElem acc = LocalElem::exact_zero(R);
      for (int j = 0; j <= a; ++j) {
        if (lam[j][a].is_exact_zero() || M[j][b].is_exact_zero()) continue;
        acc += lam[j][a] * M[j][b];
      }
      F.at(a, b) = acc;
    }
  if (!F.integral_determinate()) fail(ErrorKind::IntegralityViolation, "formal group law has a non-integral coefficient");
  return F;
}

BoundReport check_convergence_bound(const PowerSeries& exp, std::uint64_t q) {
  BoundReport r;
  const long long qm1 = static_cast<long long>(q) - 1;
  for (int k = 1; k <= exp.D(); ++k) {
    const LocalElem& c = exp[k];
    if (c.is_exact_zero()) continue;
    ++r.checked;
    const long long need = -(k - 1);
    if (c.is_zero()) {
      if (static_cast<long long>(c.abs_prec()) * qm1 < need) ++r.indeterminate;
      continue;
    }
    if (static_cast<long long>(c.valuation()) * qm1 < need) {
      r.ok = false;
      if (r.first_violation < 0) r.first_violation = k;
    }
  }
  return r;
}

HazewinkelResult hazewinkel(const PowerSeries& g, const LocalElem& pi, std::uint64_t q, int D, int D_biv) {
  const LocalRing& R = g.ring();
  if (!g[0].is_exact_zero() && !g[0].is_zero()) fail(ErrorKind::NonzeroConstantTerm, "g(0) must vanish");
  if (!g[1].equals(LocalElem::one(R))) fail(ErrorKind::NonUnitLinearCoefficient, "g must be X mod X^2");
  if (!g.integral_determinate()) fail(ErrorKind::IntegralityViolation, "g must be integral");
  PowerSeries f(R, D);
  const LocalElem pinv = pi.inverse();
  for (int m = 1; m <= D; ++m) {
    LocalElem c = m <= g.D() ? g[m] : LocalElem::exact_zero(R);
    if (static_cast<std::uint64_t>(m) % q == 0) c += f[static_cast<int>(static_cast<std::uint64_t>(m) / q)] * pinv;
    f[m] = c;
  }
  f[0] = LocalElem::exact_zero(R);
  PowerSeries finv = reversion(f);
  PowerSeries P = compose(finv, pi * f);
  if (!P.integral_determinate()) fail(ErrorKind::IntegralityViolation, "Hazewinkel P is not integral");
  if (!lt_validate(P, pi, q)) fail(ErrorKind::HypothesisViolated, "Hazewinkel P is not a Lubin-Tate series");
  BivariateSeries F = lt_formal_group(f, finv, D_biv);
  return {f, P, F};
}

BivariateEval fg_sum(const BivariateSeries& F, const std::vector<LocalElem>& values) {
  if (values.empty()) fail(ErrorKind::ConfigError, "fg_sum of an empty list");
  for (auto& v : values)
    if (!v.is_exact_zero() && (v.is_zero() ? v.abs_prec() <= 0 : v.valuation() <= 0))
      fail(ErrorKind::NonPositiveValuationPoint, "formal group sum needs positive valuations");
  BivariateEval acc{values[0], values[0].abs_prec()};
  for (std::size_t i = 1; i < values.size(); ++i) {
    BivariateEval r = bps_eval(F, acc.value, values[i]);
    acc.value = r.value;
    acc.tail_bound = std::min(acc.tail_bound, r.tail_bound);
  }
  return acc;
}

std::shared_ptr<const LubinTate> LubinTate::make(ContextPtr ctx, const Poly& P, const LocalElem& pi, int D, int D_biv) {
  auto lt = std::shared_ptr<LubinTate>(new LubinTate());
  lt->ctx_ = ctx;
  lt->pi_ = pi;
  lt->Ppoly_ = P;
  lt->D_ = D;
  lt->D_biv_ = std::min(D_biv, D);
  lt->P_ = PowerSeries::from_poly(P, D).truncate(std::max(D, poly_degree(P)));
  lt->P_.set_polynomial(true);
  for (auto& c : P)
    if (!c.is_exact_zero() && !c.is_zero() && c.valuation() < 0)
      fail(ErrorKind::HypothesisViolated, "Lubin-Tate polynomial must have integral coefficients");
  if (!lt_validate(lt->P_, pi, ctx->q())) fail(ErrorKind::HypothesisViolated, "P is not a Lubin-Tate polynomial for pi");
  lt->log_ = lt_log(lt->P_, pi, D);
  lt->exp_ = lt_exp(lt->P_, pi, D);
  lt->bound_ = check_convergence_bound(lt->exp_, ctx->q());
  if (!lt->bound_.ok)
    fail(ErrorKind::ConvergenceBoundViolation,
         "exponential coefficient " + std::to_string(lt->bound_.first_violation) + " violates the convergence bound");
  return lt;
}

const BivariateSeries& LubinTate::F() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!F_) F_ = std::make_unique<BivariateSeries>(lt_formal_group(log_, exp_, D_biv_));
  return *F_;
}

const PowerSeries& LubinTate::bracket(const LocalElem& a) const {
  const std::string key = element_key(a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = brackets_.find(key);
    if (it != brackets_.end()) return *it->second;
  }
  auto s = std::make_unique<PowerSeries>(lt_bracket(P_, pi_, a, D_));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = brackets_.emplace(key, std::move(s));
  return *it->second;
}

std::string element_key(const LocalElem& x) {
  std::ostringstream os;
  os << x.shift() << ':' << x.abs_prec() << ':' << x.valuation();
  for (auto& z : x.digits()) os << ':' << z.get_str(16);
  return os.str();
}

}  // namespace ltlab

#include "ltlab/tower/galois.hpp"

#include "ltlab/exponentials/exponentials.hpp"

namespace ltlab {

namespace {

// least valuation x is known to have
int known_valuation(const LocalElem& x) { return x.is_zero() ? x.abs_prec() : x.valuation(); }

bool vanishes_to(const LocalElem& x, int units) { return known_valuation(x) >= units; }

int clamp_digits(long long v) { return static_cast<int>(std::min<long long>(v, kInfPrec)); }

}  // namespace

int digits_to_units(const Tower& T, int digits) { return digits * T.degree(); }

int units_to_digits(const Tower& T, int units) {
  if (units >= kInfPrec) return kInfPrec;
  // floor division
  const int d = T.degree();
  return units >= 0 ? units / d : -((-units + d - 1) / d);
}

const char* status_name(DivisionPointStatus s) {
  switch (s) {
    case DivisionPointStatus::Primitive: return "primitive";
    case DivisionPointStatus::NonPrimitive: return "nonprimitive";
    case DivisionPointStatus::Fail: return "fail";
  }
  return "fail";
}

DivisionPointReport division_point_check(const LubinTate& lt, const Tower& T, const LocalElem& x, int m,
                                         int threshold_digits) {
  if (m < 1) fail(ErrorKind::ConfigError, "division level must be at least 1");
  if (!x.is_exact_zero() && known_valuation(x) <= 0)
    fail(ErrorKind::NonPositiveValuationPoint, "division points have positive valuation");
  const int thr = digits_to_units(T, threshold_digits);
  LocalElem y = LocalElem::embed(x, T.ring()), prev = y;
  for (int i = 0; i < m; ++i) {
    prev = y;
    y = poly_eval(lt.P_poly(), y);
  }
  DivisionPointReport r;
  r.top_digits = units_to_digits(T, known_valuation(y));
  if (!y.is_zero() && y.valuation() < thr) {
    r.status = DivisionPointStatus::Fail;
    return r;
  }
  if (y.is_zero() && y.abs_prec() < thr)
    fail(ErrorKind::ThresholdTooHigh, "only " + std::to_string(r.top_digits) + " digits available for threshold " +
                                          std::to_string(threshold_digits));
  r.prev_determinate = !prev.is_zero();
  if (r.prev_determinate) {
    r.prev_vp = prev.vp();
    r.status = DivisionPointStatus::Primitive;
  } else {
    r.status = DivisionPointStatus::NonPrimitive;
  }
  return r;
}

LocalElem galois_conjugate(const LubinTate& lt, const LocalElem& u, const LocalElem& x) {
  if (!u.is_unit()) fail(ErrorKind::HypothesisViolated, "Galois parameter must be a unit");
  if (x.is_exact_zero()) return x;
  return eval_interior(lt.bracket(u), x, 0).value;
}

LocalElem galois_embedding(const LubinTate& ltQ, const Tower& T, const LocalElem& u, const LocalElem& x) {
  return apply_embedding(T, x, galois_conjugate(ltQ, u, T.omega(T.n())));
}

std::vector<std::vector<LocalElem>> unit_digit_vectors(const Context& C, int n) {
  const std::vector<LocalElem> mu = C.roots_of_unity();
  std::vector<LocalElem> digits{C.zero()};
  digits.insert(digits.end(), mu.begin(), mu.end());
  std::vector<std::vector<LocalElem>> out;
  for (const auto& z0 : mu) out.push_back({z0});
  for (int i = 1; i < n; ++i) {
    std::vector<std::vector<LocalElem>> next;
    for (const auto& v : out)
      for (const auto& z : digits) {
        auto w = v;
        w.push_back(z);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<LocalElem> unit_representatives(const Context& C, int n) {
  std::vector<LocalElem> out;
  for (const auto& z : unit_digit_vectors(C, n)) {
    LocalElem u = C.zero(), pk = C.one();
    for (const auto& zi : z) {
      u += zi * pk;
      pk *= C.pi();
    }
    out.push_back(u);
  }
  return out;
}

BoundaryPoint boundary_point(const LubinTate& lt, const Tower& T, int m, int D, const LocalElem& x) {
  const CurlyE ce = curly_e(lt, T, m, D);
  const BoundaryEval be = eval_boundary(ce.series, LocalElem::embed(x, T.ring()), std::max(1, D / 8));
  return {be.value, units_to_digits(T, be.achieved_prec)};
}

bool pi_congruent(const LocalElem& pi, const LocalElem& pi_prime, int k) {
  return vanishes_to(pi_prime - pi, k * pi.valuation());
}

Prop2Report prop2_check(const LubinTate& lt, const Tower& T, int D, int threshold_digits) {
  Prop2Report rep;
  const int n = T.n();
  rep.hypothesis = pi_congruent(lt.pi(), T.pi_prime(), n + 1);
  const Rational want_vp(1, static_cast<long long>(lt.ctx().e()) * static_cast<long long>(lt.q() - 1));
  const int thr = digits_to_units(T, threshold_digits);
  bool ok = rep.hypothesis;
  LocalElem prev;
  for (int m = 1; m <= n; ++m) {
    Prop2Level lv;
    lv.m = m;
    const BoundaryPoint s = boundary_point(lt, T, m, D, lt.ctx().one());
    lv.boundary_digits = s.digits;
    lv.division = division_point_check(lt, T, s.value, m, threshold_digits);
    const LocalElem& w = T.omega(m);
    lv.congruence = vanishes_to(s.value - w, 2 * w.valuation());
    const LocalElem c = m == 1 ? poly_eval(lt.P_poly(), s.value) : poly_eval(lt.P_poly(), s.value) - prev;
    lv.coherence_digits = units_to_digits(T, known_valuation(c));
    lv.coherence = vanishes_to(c, thr);
    ok = ok && lv.division.status == DivisionPointStatus::Primitive && lv.division.prev_vp == want_vp &&
         lv.congruence && lv.coherence;
    prev = s.value;
    rep.levels.push_back(lv);
  }
  rep.pass = ok;
  return rep;
}

Prop3Case prop3_identity(const LubinTate& lt, const Tower& T, const LocalElem& s_n, const std::vector<LocalElem>& z,
                         int D, int threshold_digits) {
  const Context& C = lt.ctx();
  const int n = T.n();
  if (static_cast<int>(z.size()) != n) fail(ErrorKind::ConfigError, "need one digit per level");
  if (z[0].is_zero()) fail(ErrorKind::HypothesisViolated, "z_0 must be a root of unity");
  LocalElem u = C.zero(), pk = C.one();
  std::vector<LocalElem> values;
  for (int i = 0; i < n; ++i) {
    const LocalElem& zi = z[static_cast<std::size_t>(i)];
    u += zi * pk;
    pk *= C.pi();
    if (!zi.is_zero()) values.push_back(boundary_point(lt, T, n - i, D, zi).value);
  }
  const LocalElem lhs = galois_conjugate(lt, u, s_n);
  LocalElem rhs = values.front();
  if (values.size() > 1) {
    const BivariateEval e = fg_sum(lt.F(), values);
    rhs = e.value.with_abs_prec(std::min(e.value.abs_prec(), e.tail_bound));
  }
  const LocalElem diff = lhs - rhs;
  Prop3Case pc;
  pc.z = z;
  pc.digits = units_to_digits(T, known_valuation(diff));
  pc.pass = vanishes_to(diff, digits_to_units(T, threshold_digits));
  return pc;
}

Prop3Report prop3_check(const LubinTate& lt, const Tower& T, int D, int threshold_digits) {
  Prop3Report rep;
  const int n = T.n();
  rep.hypothesis = pi_congruent(lt.pi(), T.pi_prime(), n + 1);
  const BoundaryPoint s = boundary_point(lt, T, n, D, lt.ctx().one());
  const DivisionPointReport dp = division_point_check(lt, T, s.value, n, threshold_digits);
  bool ok = rep.hypothesis && dp.status == DivisionPointStatus::Primitive;
  for (const auto& z : unit_digit_vectors(lt.ctx(), n)) {
    rep.cases.push_back(prop3_identity(lt, T, s.value, z, D, threshold_digits));
    ok = ok && rep.cases.back().pass;
  }
  rep.pass = ok;
  return rep;
}

LocalElem conjugate_sum(const LubinTate& lt, const std::vector<LocalElem>& units, const LocalElem& x) {
  LocalElem s = LocalElem::exact_zero(x.ring());
  for (const auto& u : units) s += galois_conjugate(lt, u, x);
  return s;
}

LocalElem trace_to_M(const LubinTate& lt, const LubinTate& ltQ, const Tower& T, const LocalElem& x,
                     int threshold_digits) {
  if (T.n() != 2) fail(ErrorKind::ConfigError, "trace to M needs the level-2 tower");
  const std::vector<LocalElem> mu = lt.ctx().roots_of_unity();
  const LocalElem b = conjugate_sum(lt, mu, LocalElem::embed(x, T.ring()));
  const int thr = digits_to_units(T, threshold_digits);
  for (const auto& z : mu) {
    const LocalElem d = galois_embedding(ltQ, T, z, b) - b;
    if (!d.is_zero() && d.valuation() < thr)
      fail(ErrorKind::InvarianceViolation, "trace is moved by an automorphism of order prime to p");
    if (d.abs_prec() < thr && d.is_zero())
      fail(ErrorKind::ThresholdTooHigh, "invariance cannot be certified at the threshold");
  }
  return b;
}

LocalElem trace_to_M_embedding(const LubinTate& ltQ, const Tower& T, const LocalElem& x) {
  if (T.n() != 2) fail(ErrorKind::ConfigError, "trace to M needs the level-2 tower");
  LocalElem s = LocalElem::exact_zero(T.ring());
  for (const auto& z : ltQ.ctx().roots_of_unity()) s += galois_embedding(ltQ, T, z, x);
  return s;
}

LocalElem trace_M_to_K(const LubinTate& ltQ, const Tower& T, const LocalElem& y) {
  const Context& C = ltQ.ctx();
  LocalElem s = y;
  for (const auto& z : C.roots_of_unity()) s += galois_embedding(ltQ, T, C.one() + z * C.pi(), y);
  return s;
}

Thm4Report thm4_check(const LubinTate& lt, const LubinTate& ltQ, const Tower& T, int D, int threshold_digits) {
  const Context& C = lt.ctx();
  const std::uint64_t q = lt.q();
  if (T.n() != 2) fail(ErrorKind::ConfigError, "the trace and lattice checks need the level-2 tower");
  const Poly& P = lt.P_poly();
  const LocalElem a = q - 1 < P.size() ? P[q - 1] : C.zero();
  if (a.is_zero() || a.valuation() != lt.pi().valuation())
    fail(ErrorKind::HypothesisViolated, "v(a_{q-1}) differs from v(pi)");
  if (!pi_congruent(lt.pi(), T.pi_prime(), 3)) fail(ErrorKind::HypothesisViolated, "pi' is not congruent to pi mod pi^3");

  Thm4Report rep;
  const BoundaryPoint s = boundary_point(lt, T, 2, D, C.one());
  rep.boundary_digits = s.digits;
  rep.division = division_point_check(lt, T, s.value, 2, threshold_digits);

  rep.trace = trace_to_K(T, s.value);
  rep.claimed_trace = LocalElem::from_int(C.ring(), static_cast<long>(q - 1)) * a;
  const LocalElem dt = rep.trace - rep.claimed_trace;
  rep.trace_digits = clamp_digits(known_valuation(dt));
  rep.trace_ok = vanishes_to(dt, threshold_digits * lt.pi().valuation());
  rep.trace_negated_ok = vanishes_to(rep.trace + rep.claimed_trace, threshold_digits * lt.pi().valuation());

  const LocalElem beta = trace_to_M(lt, ltQ, T, s.value, threshold_digits);
  if (!beta.is_zero()) rep.beta_valuation = beta.valuation();
  rep.beta_ok = rep.beta_valuation == static_cast<int>(q - 1);

  // Gal(M/K) acts through 1 + z pi, z in {0} and mu_{q-1}
  const std::vector<LocalElem> mu = C.roots_of_unity();
  std::vector<LocalElem> zs{C.zero()};
  zs.insert(zs.end(), mu.begin(), mu.end());
  std::vector<LocalElem> conj;
  rep.conjugates_consistent = true;
  const int thr = digits_to_units(T, threshold_digits);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const LocalElem u = C.one() + zs[i] * lt.pi();
    rep.representatives.push_back(i == 0 ? "1" : "1+pi*mu[" + std::to_string(i - 1) + "]");
    conj.push_back(trace_to_M(lt, ltQ, T, galois_conjugate(lt, u, s.value), threshold_digits));
    if (!vanishes_to(conj.back() - galois_embedding(ltQ, T, u, beta), thr)) rep.conjugates_consistent = false;
  }

  // lattice basis beta^{1-q+i}: solve alpha beta^{q-1} = sum c_i beta^i over K
  const int d = T.degree();
  Matrix A(static_cast<std::size_t>(d), std::vector<LocalElem>(static_cast<std::size_t>(q)));
  LocalElem bp = LocalElem::one(T.ring());
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto cs = bp.coeffs();
    for (int r = 0; r < d; ++r) A[static_cast<std::size_t>(r)][i] = cs[static_cast<std::size_t>(r)];
    bp = bp * beta;
  }
  const LocalElem beta_top = beta.pow(q - 1);
  const LocalElem pi_inv = LocalElem::embed(lt.pi().inverse(), T.ring());
  const Rational want(1 - static_cast<long long>(q), static_cast<long long>(q) * C.e());
  bool ok = rep.division.status == DivisionPointStatus::Primitive && rep.trace_ok && rep.beta_ok &&
            rep.conjugates_consistent;
  for (int cand = 0; cand < 2; ++cand) {
    Thm4Candidate tc;
    tc.name = cand == 0 ? "beta/pi" : "(beta+q)/pi";
    const LocalElem shift = LocalElem::from_int(T.ring(), cand == 0 ? 0L : static_cast<long>(q));
    Matrix M;
    tc.solvable = true;
    for (std::size_t i = 0; i < conj.size(); ++i) {
      const LocalElem alpha = (conj[i] + shift) * pi_inv;
      if (i == 0) {
        tc.vp = tower_valuation(alpha);
        tc.vp_ok = tc.vp == want;
      }
      const auto cs = (alpha * beta_top).coeffs();
      SolveResult sr = solve_linear(A, std::vector<LocalElem>(cs.begin(), cs.end()));
      tc.solvable = tc.solvable && sr.consistent;
      M.push_back(sr.x);
    }
    const LocalElem det = determinant(M);
    if (!det.is_zero()) tc.det_valuation = det.valuation();
    tc.unit_det = tc.solvable && tc.det_valuation == 0;
    ok = ok && tc.vp_ok && tc.unit_det;
    rep.candidates.push_back(tc);
  }
  rep.pass = ok;
  return rep;
}

}  // namespace ltlab

#include "ltlab/cli/suites.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "ltlab/exponentials/exponentials.hpp"
#include "ltlab/tower/galois.hpp"
#include "ltlab/witt/witt.hpp"

namespace ltlab::cli {

namespace {

json claim(bool pass, int digits, json details = json::object()) {
  details["pass"] = pass;
  details["achieved_precision"] = digits >= kInfPrec ? json("exact") : json(digits);
  return details;
}

json informational(json details) {
  details["informational"] = true;
  return details;
}

bool precision_kind(ErrorKind k) {
  return k == ErrorKind::PrecisionExhausted || k == ErrorKind::ThresholdTooHigh ||
         k == ErrorKind::DivisionByIndistinguishableZero;
}

std::string rational_str(const Rational& r) { return r.str(); }

// name of a Teichmuller digit: "0" or "mu[i]" in roots_of_unity order
std::string digit_name(const Context& C, const LocalElem& z) {
  if (z.is_zero()) return "0";
  const auto mu = C.roots_of_unity();
  for (std::size_t i = 0; i < mu.size(); ++i)
    if ((mu[i] - z).is_zero()) return "mu[" + std::to_string(i) + "]";
  return format_elem(z);
}

int lt_degree(const CaseConfig& c, const std::string& suite) {
  if (suite == "thm1") return c.D_series;
  return c.D_boundary;
}

// Lubin-Tate data with its convergence bound recorded as claim `id`; null
// when the bound fails
LubinTatePtr bounded_lt(const CaseSetup& s, const Poly& P, const LocalElem& pi, int D, int D_biv, json& claims,
                        const std::string& id) {
  try {
    auto lt = LubinTate::make(s.ctx, P, pi, D, D_biv);
    const BoundReport& b = lt->bound_report();
    claims[id] = claim(b.ok, kInfPrec, {{"checked", b.checked}, {"indeterminate", b.indeterminate}});
    return b.ok ? lt : nullptr;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConvergenceBoundViolation) throw;
    claims[id] = claim(false, 0, {{"message", e.what()}});
    return nullptr;
  }
}

LubinTatePtr make_lt(const CaseSetup& s, int D, int D_biv, json& claims) {
  return bounded_lt(s, s.P, s.ctx->pi(), D, D_biv, claims, "expfp.bound");
}

// the Lubin-Tate data of Q, shared with P when they coincide
LubinTatePtr make_ltQ(const CaseSetup& s, const LubinTatePtr& ltP, int D, json& claims) {
  bool same = s.P.size() == s.Q.size();
  for (std::size_t i = 0; same && i < s.P.size(); ++i) same = s.P[i].equals(s.Q[i]);
  if (same) return ltP;
  return bounded_lt(s, s.Q, s.pi_prime, D, 4, claims, "expfp.bound.Q");
}

void run_thm1(const CaseConfig& c, int N, json& claims) {
  const int D = c.D_series;
  const CaseSetup s = setup_case(c, N);
  auto lt = make_lt(s, D, std::min(D, c.D_bivariate), claims);
  if (!lt) return;
  auto T = Tower::build(s.ctx, s.Q_exact, c.n);
  const CurlyE ce = curly_e(*lt, *T, c.n, D, false);
  if (ce.integrality.indeterminate > 0 || ce.congruence.indeterminate > 0)
    fail(ErrorKind::PrecisionExhausted, "coefficients of the main series lost their precision");
  const int digits = units_to_digits(*T, ce.min_abs_prec);
  claims["thm1.part1"] = claim(ce.integrality.pass, digits,
                               {{"checked", ce.integrality.checked}, {"first_failure", ce.integrality.first_failure}});
  claims["thm1.part2"] = claim(ce.congruence.pass, digits,
                               {{"checked", ce.congruence.checked}, {"first_failure", ce.congruence.first_failure}});
  const bool hyp = pi_congruent(s.ctx->pi(), s.pi_prime, c.n + 1);
  const OverconvergenceProfile pr = overconvergence_profile(ce.series);
  json samples = json::object();
  for (int i = 1; i <= 4; ++i) {
    const int k = std::max(1, i * D / 4);
    const int v = pr.tail_min[static_cast<std::size_t>(k)];
    samples[std::to_string(k)] = v >= kInfPrec ? json("inf") : json(v);
  }
  claims["thm1.overconvergence"] =
      informational({{"hypothesis", hyp}, {"verdict", pr.verdict}, {"tail_min_units", samples}});
  if (c.decomposition) {
    auto T1 = Tower::build(s.ctx, s.Q_exact, c.n + 1);
    const int Dd = std::min(D, c.D_bivariate);
    const SeriesComparison cmp = main_series_decomposition(*lt, *T1, c.n, Dd);
    claims["thm1.decomposition"] = claim(cmp.agree, units_to_digits(*T1, cmp.min_prec), {{"degree", Dd}});
  }
}

void run_prop2(const CaseConfig& c, int N, json& claims) {
  const CaseSetup s = setup_case(c, N);
  auto lt = make_lt(s, c.D_boundary, 4, claims);
  if (!lt) return;
  auto T = Tower::build(s.ctx, s.Q_exact, c.n);
  const Prop2Report r = prop2_check(*lt, *T, c.D_boundary, c.threshold);
  const Rational want(1, static_cast<long long>(s.ctx->e()) * static_cast<long long>(s.ctx->q() - 1));
  auto wrap = [&](json j) { return r.hypothesis ? j : informational(j); };
  for (const auto& lv : r.levels) {
    const std::string m = ".m" + std::to_string(lv.m);
    const bool prim = lv.division.status == DivisionPointStatus::Primitive && lv.division.prev_vp == want;
    claims["prop2.primitive" + m] =
        wrap(claim(prim, lv.division.top_digits,
                   {{"status", status_name(lv.division.status)},
                    {"previous_iterate_vp", lv.division.prev_determinate ? json(rational_str(lv.division.prev_vp)) : json(nullptr)},
                    {"boundary_digits", lv.boundary_digits},
                    {"threshold", c.threshold}}));
    claims["prop2.congruence" + m] = wrap(claim(lv.congruence, lv.boundary_digits));
    if (lv.m >= 2) claims["prop2.coherence" + m] = wrap(claim(lv.coherence, lv.coherence_digits));
  }
  claims["prop2.hypothesis"] = informational({{"pi_congruent", r.hypothesis}});
}

void run_prop3(const CaseConfig& c, int N, json& claims) {
  const CaseSetup s = setup_case(c, N);
  auto lt = make_lt(s, c.D_boundary, c.D_bivariate, claims);
  if (!lt) return;
  auto T = Tower::build(s.ctx, s.Q_exact, c.n);
  const bool hyp = pi_congruent(s.ctx->pi(), s.pi_prime, c.n + 1);
  const BoundaryPoint sn = boundary_point(*lt, *T, c.n, c.D_boundary, s.ctx->one());
  const DivisionPointReport dp = division_point_check(*lt, *T, sn.value, c.n, c.threshold);
  auto wrap = [&](json j) { return hyp ? j : informational(j); };
  claims["prop3.division"] =
      wrap(claim(dp.status == DivisionPointStatus::Primitive, dp.top_digits, {{"status", status_name(dp.status)}}));
  for (const auto& z : unit_digit_vectors(*s.ctx, c.n)) {
    const Prop3Case pc = prop3_identity(*lt, *T, sn.value, z, c.D_boundary, c.threshold);
    std::string name = "prop3.identity.z=(";
    for (std::size_t i = 0; i < z.size(); ++i) name += (i ? "," : "") + digit_name(*s.ctx, z[i]);
    claims[name + ")"] = wrap(claim(pc.pass, pc.digits, {{"threshold", c.threshold}}));
  }
}

void run_thm4(const CaseConfig& c, int N, json& claims) {
  const CaseSetup s = setup_case(c, N);
  auto lt = make_lt(s, c.D_boundary, 4, claims);
  auto ltQ = lt ? make_ltQ(s, lt, c.D_boundary, claims) : nullptr;
  if (!ltQ) return;
  auto T = Tower::build(s.ctx, s.Q_exact, 2);
  const Thm4Report r = thm4_check(*lt, *ltQ, *T, c.D_boundary, c.threshold);
  claims["thm4.division"] = claim(r.division.status == DivisionPointStatus::Primitive, r.division.top_digits,
                                  {{"boundary_digits", r.boundary_digits}});
  claims["thm4.trace"] = claim(r.trace_ok, r.trace_digits,
                               {{"trace", format_elem(r.trace)},
                                {"claimed", format_elem(r.claimed_trace)},
                                {"equals_negated_claim", r.trace_negated_ok},
                                {"trace_digits_known", r.trace.abs_prec() / s.ctx->pi().valuation()}});
  claims["thm4.uniformizer"] = claim(r.beta_ok, kInfPrec, {{"beta_valuation", r.beta_valuation},
                                                           {"expected", static_cast<long>(s.ctx->q()) - 1}});
  claims["thm4.conjugates"] = claim(r.conjugates_consistent, c.threshold, {{"representatives", r.representatives}});
  for (const auto& cand : r.candidates) {
    claims["thm4.valuation." + cand.name] = claim(cand.vp_ok, kInfPrec, {{"vp", rational_str(cand.vp)}});
    claims["thm4.lattice." + cand.name] =
        claim(cand.unit_det, kInfPrec, {{"solvable", cand.solvable}, {"det_valuation", cand.det_valuation}});
  }
}

// ---------------------------------------------------------------- Witt suite

using WV = WittVector<LocalElem>;

bool same(const WV& a, const WV& b) {
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!(a[i] - b[i]).is_zero()) return false;
  return true;
}

LocalElem random_integer(const Context& C, std::mt19937_64& rng) {
  LocalElem x = C.from_int(static_cast<long>(rng() % 100000) - 50000);
  if (C.f() > 1) x += C.lift_residue(C.fq().from_index(rng() % C.q()));
  if (C.e() > 1) x += C.pi() * C.from_int(static_cast<long>(rng() % 1000));
  return x;
}

WV random_witt(const WittParams& W, const Context& C, std::mt19937_64& rng, std::size_t len) {
  std::vector<LocalElem> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(random_integer(C, rng));
  return WV(W, c);
}

void run_witt(const CaseConfig& c, int N, json& claims) {
  auto C = make_context(c.p, c.f, c.eis, N);
  const WittParams W(C->pi(), C->q());
  std::mt19937_64 rng(static_cast<std::uint64_t>(c.p * 1000 + c.f * 10 + c.e()));
  const std::size_t len = 3;
  auto count = [](int ok, int total, json extra = json::object()) {
    extra["passed"] = ok;
    extra["total"] = total;
    return claim(ok == total, kInfPrec, extra);
  };
  int ok = 0, total = 0;
  for (int it = 0; it < 20; ++it, ++total) {
    const WV r = random_witt(W, *C, rng, 4);
    ok += same(WV::from_ghost(W, r.ghost()), r);
  }
  claims["witt.ghost_roundtrip"] = count(ok, total);

  ok = total = 0;
  const WV zero(W, std::vector<LocalElem>(len, C->zero()));
  std::vector<LocalElem> one_c(len, C->zero());
  one_c[0] = C->one();
  const WV one(W, one_c);
  for (int it = 0; it < 50; ++it, ++total) {
    const WV x = random_witt(W, *C, rng, len), y = random_witt(W, *C, rng, len), z = random_witt(W, *C, rng, len);
    bool good = same((x + y) + z, x + (y + z)) && same((x * y) * z, x * (y * z)) && same(x + y, y + x) &&
                same(x * y, y * x) && same(x * (y + z), x * y + x * z) && same(x - x, zero) && same(x * one, x);
    const WV xy = x * y;
    for (std::size_t i = 0; i < len; ++i) good = good && (xy.ghost()[i] - x.ghost()[i] * y.ghost()[i]).is_zero();
    ok += good;
  }
  claims["witt.ring_axioms"] = count(ok, total, {{"triples", total}});

  int fv = 0, fq = 0, tm = 0;
  const int reps = 20;
  for (int it = 0; it < reps; ++it) {
    const WV w = random_witt(W, *C, rng, len);
    fv += same(w.verschiebung().frobenius(), w.scale(C->pi()));
    const WV f = w.frobenius();
    bool cong = true;
    for (std::size_t n = 0; n < f.length(); ++n) {
      const LocalElem d = f[n] - w[n].pow(C->q());
      cong = cong && (d.is_zero() ? d.abs_prec() : d.valuation()) >= 1;
    }
    fq += cong;
    const LocalElem a = random_integer(*C, rng), b = random_integer(*C, rng);
    tm += same(WV::teichmuller(W, a, len) * WV::teichmuller(W, b, len), WV::teichmuller(W, a * b, len));
  }
  claims["witt.fv_equals_pi"] = count(fv, reps);
  claims["witt.frobenius_congruence"] = count(fq, reps);
  claims["witt.teichmuller_multiplicative"] = count(tm, reps);

  // F(S_P(h)) = S_P(h o P) for the canonical P
  const LocalRing& R = C->ring();
  const Poly Pp = make_poly(*C, PolySpec{}, C->pi());
  const PowerSeries P = PowerSeries::from_poly(Pp, static_cast<int>(C->q()));
  const int D = 40;
  PowerSeries h(R, D);
  for (int k = 1; k <= D; ++k) h[k] = C->from_int(static_cast<long>(rng() % 9) - 4);
  const auto s = sP(W, h, P, 3);
  const auto lhs = s.frobenius();
  const auto rhs = sP(W, compose(h, P), P, 2);
  bool shift = true;
  for (std::size_t i = 0; i < 2; ++i) shift = shift && lhs[i].equals(rhs[i]);
  claims["witt.sP_frobenius"] = claim(shift, kInfPrec, {{"degree", D}});

  // v(h(0)) = r v(pi) iff the first unit component of S_{P,a}(h) is at index r
  auto T = Tower::build(C, exact_poly(*C, Pp), 1);
  const LocalElem& w1 = T->omega(1);
  ok = total = 0;
  for (int it = 0; it < 50; ++it, ++total) {
    const int r = static_cast<int>(rng() % 5);  // 4 stands for h(0) = 0
    PowerSeries hh(R, 8);
    for (int k = 1; k <= 8; ++k) hh[k] = C->from_int(static_cast<long>(rng() % 50) - 25);
    hh.set_polynomial(true);
    if (r < 4) {
      const LocalElem u = C->lift_residue(C->fq().from_index(1 + rng() % (C->q() - 1)));
      hh[0] = u * C->pi().pow(static_cast<std::uint64_t>(r)) +
              C->pi().pow(static_cast<std::uint64_t>(r + 1)) * C->from_int(static_cast<long>(rng() % 5));
    } else {
      hh[0] = C->zero();
    }
    const LocalElem a = w1.pow(1 + rng() % 3) * (LocalElem::one(T->ring()) + C->from_int(static_cast<long>(rng() % 7)));
    const KeyCriterion kc = key_valuation_criterion(W, hh, P, a, 4);
    ok += kc.consistent && kc.r_from_alpha == (r < 4 ? r : -1);
  }
  claims["witt.key_criterion"] = count(ok, total);

  if (c.f == 1 && c.e() == 1) {
    ok = total = 0;
    for (int m = 1; m <= 3; ++m, ++total) ok += classical_oracle(*C, m);
    claims["witt.classical_oracle"] = count(ok, total, {{"max_length", 3}});
  }
}

const std::map<std::string, std::function<void(const CaseConfig&, int, json&)>>& runners() {
  static const std::map<std::string, std::function<void(const CaseConfig&, int, json&)>> m = {
      {"thm1", run_thm1}, {"prop2", run_prop2}, {"prop3", run_prop3}, {"thm4", run_thm4}, {"witt_axioms", run_witt}};
  return m;
}

json series_json(const PowerSeries& s) {
  json out = json::array();
  for (int k = 0; k <= s.D(); ++k) out.push_back(format_elem(s[k]));
  return out;
}

json tower_coeffs_json(const LocalElem& x) {
  if (!x.ring().is_extension()) return format_elem(x);
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(format_elem(c));
  return out;
}

// the field parameters are user input: bad ones are configuration errors
void validate_field(const CaseConfig& c) {
  try {
    make_context(c.p, c.f, c.eis, std::max(c.N, 1));
  } catch (const Error& e) {
    fail(ErrorKind::ConfigError, e.what());
  }
}

}  // namespace

json run_case(const std::string& suite, const CaseConfig& c) {
  const auto it = runners().find(suite);
  if (it == runners().end()) fail(ErrorKind::ConfigError, "unknown suite '" + suite + "'");
  json out;
  out["params"] = c.to_json();
  try {
    validate_field(c);
  } catch (const Error& e) {
    out["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    return out;
  }
  int N = suite == "witt_axioms" ? c.N : planned_precision(c, lt_degree(c, suite));
  for (int attempt = 0;; ++attempt) {
    json claims = json::object();
    try {
      it->second(c, N, claims);
      out["claims"] = claims;
      out["N_used"] = N;
      out.erase("error");
      return out;
    } catch (const Error& e) {
      out["N_used"] = N;
      out["claims"] = claims;
      out["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
      if (!(precision_kind(e.kind()) && c.adaptive && attempt < 2)) return out;
      N += N / 2;
    }
  }
}

json run_suite(const std::string& suite, const RunConfig& rc) {
  if (suite == "all") {
    json out;
    out["suite"] = "all";
    for (const std::string s : {"thm1", "prop2", "prop3", "thm4", "witt_axioms"}) out["suites"][s] = run_suite(s, rc);
    int worst = 0;
    for (auto& [k, v] : out["suites"].items()) worst = std::max(worst, exit_code(v));
    out["summary"] = {{"exit_code", worst}};
    return out;
  }
  json out;
  out["suite"] = suite;
  out["cases"] = json::object();
  int passed = 0, failed = 0, errors = 0, info = 0;
  for (const auto& c : expand_cases(rc, suite)) {
    json r = run_case(suite, c);
    for (auto& [id, cl] : r["claims"].items()) {
      if (cl.value("informational", false)) ++info;
      else if (cl.value("pass", false)) ++passed;
      else ++failed;
    }
    if (r.contains("error")) ++errors;
    out["cases"][c.key()] = r;
  }
  out["summary"] = {{"claims_passed", passed}, {"claims_failed", failed}, {"errors", errors}, {"informational", info}};
  out["summary"]["exit_code"] = exit_code(out);
  return out;
}

int exit_code(const json& report) {
  if (report.contains("suites")) {
    int worst = 0;
    for (auto& [k, v] : report["suites"].items()) {
      const int e = exit_code(v);
      if (e == kConfigError) return kConfigError;
      if (e == kClaimFailure || worst == kClaimFailure) worst = kClaimFailure;
      else worst = std::max(worst, e);
    }
    return worst;
  }
  bool claim_fail = false, precision = false;
  const json cases = report.value("cases", json::object());
  for (auto& [key, r] : cases.items()) {
    if (r.contains("error")) {
      const std::string k = r["error"]["kind"];
      if (k == "ConfigError") return kConfigError;
      if (k == "PrecisionExhausted" || k == "ThresholdTooHigh" || k == "DivisionByIndistinguishableZero")
        precision = true;
      else
        claim_fail = true;
    }
    const json claims = r.value("claims", json::object());
    for (auto& [id, cl] : claims.items())
      if (!cl.value("informational", false) && !cl.value("pass", false)) claim_fail = true;
  }
  if (claim_fail) return kClaimFailure;
  if (precision) return kPrecisionExhausted;
  return kPass;
}

json compute_target(const std::string& target, const CaseConfig& c) {
  json out;
  out["target"] = target;
  out["params"] = c.to_json();
  validate_field(c);
  if (target == "witt") {
    auto C = make_context(c.p, c.f, c.eis, c.N);
    const WittParams W(C->pi(), C->q());
    const int n = std::min(c.n, 2);
    const StructuralPolys sp = structural_polys(W, C->ring(), n);
    const auto names = structural_var_names(n);
    for (int i = 0; i <= n; ++i) {
      out["S"].push_back(sp.S[static_cast<std::size_t>(i)].str(names));
      out["P"].push_back(sp.P[static_cast<std::size_t>(i)].str(names));
    }
    out["N_used"] = c.N;
    return out;
  }
  const int D = c.D_series;
  const int N = planned_precision(c, D);
  out["N_used"] = N;
  const CaseSetup s = setup_case(c, N);
  if (target == "tower") {
    auto T = Tower::build(s.ctx, s.Q_exact, c.n);
    out["modulus"] = T->modulus().str();
    out["degree"] = T->degree();
    for (int i = 1; i <= c.n; ++i) out["omega_vp"].push_back(tower_valuation(T->omega(i)).str());
    for (const auto& t : T->power_traces()) out["power_traces"].push_back(format_elem(t));
    return out;
  }
  json bound;
  auto lt = make_lt(s, D, std::min(D, c.D_bivariate), bound);
  out["expfp.bound"] = bound["expfp.bound"];
  if (!lt) fail(ErrorKind::ConvergenceBoundViolation, "exponential coefficients violate the convergence bound");
  if (target == "fg") {
    const BivariateSeries& F = lt->F();
    json coeffs = json::object();
    for (int t = 0; t <= F.D(); ++t)
      for (int j = 0; j <= t; ++j) {
        const LocalElem& x = F.at(t - j, j);
        if (!x.is_zero()) coeffs[std::to_string(t - j) + "," + std::to_string(j)] = format_elem(x);
      }
    out["degree"] = F.D();
    out["coeffs"] = coeffs;
  } else if (target == "log") {
    out["coeffs"] = series_json(lt->log());
  } else if (target == "exp") {
    out["coeffs"] = series_json(lt->exp());
    out["bound_ok"] = lt->bound_report().ok;
  } else if (target == "e_p") {
    out["coeffs"] = series_json(e_p(*lt, D));
  } else if (target == "curly_e") {
    auto T = Tower::build(s.ctx, s.Q_exact, c.n);
    const CurlyE ce = curly_e(*lt, *T, c.n, D, false);
    json coeffs = json::array();
    for (int k = 0; k <= ce.series.D(); ++k) coeffs.push_back(tower_coeffs_json(ce.series[k]));
    out["coeffs"] = coeffs;
    out["basis"] = "powers of w_n";
    out["integrality"] = ce.integrality.pass;
    out["congruence"] = ce.congruence.pass;
    out["achieved_precision"] = units_to_digits(*T, ce.min_abs_prec);
  } else {
    fail(ErrorKind::ConfigError, "unknown compute target '" + target + "'");
  }
  return out;
}

std::string to_text(const json& j) {
  std::ostringstream os;
  std::function<void(const json&, const std::string&)> walk = [&](const json& v, const std::string& path) {
    if (v.is_object()) {
      for (auto& [k, x] : v.items()) walk(x, path.empty() ? k : path + "." + k);
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(v[i], path + "[" + std::to_string(i) + "]");
    } else {
      os << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(j, "");
  return os.str();
}

}  // namespace ltlab::cli

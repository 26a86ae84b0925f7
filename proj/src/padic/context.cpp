#include "ltlab/padic/context.hpp"

#include <string>

namespace ltlab {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<long> first_irreducible(int p, int f) {
  // enumerate monic polynomials of degree f in lexicographic order of the
  // lower coefficients read from the constant term up
  std::uint64_t count = 1;
  for (int i = 0; i < f; ++i) count *= static_cast<std::uint64_t>(p);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<long> g(f + 1, 0);
    std::uint64_t t = idx;
    for (int i = 0; i < f; ++i) {
      g[i] = static_cast<long>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    g[f] = 1;
    fp_poly::Poly gp(g.begin(), g.end());
    if (fp_poly::is_irreducible(gp, p)) return g;
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

ContextPtr make_context(int p, int f, const std::optional<EisensteinSpec>& eis, int N,
                        const std::optional<std::vector<long>>& unram_modulus) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (f < 1) fail(ErrorKind::ConfigError, "residue degree must be positive");
  if (N < 1) fail(ErrorKind::ConfigError, "precision must be positive");
  auto ctx = std::shared_ptr<Context>(new Context());
  ctx->p_ = p;
  ctx->f_ = f;
  ctx->N_ = N;
  ctx->q_ = 1;
  for (int i = 0; i < f; ++i) ctx->q_ *= static_cast<std::uint64_t>(p);
  mpz_ui_pow_ui(ctx->qz_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));

  std::vector<long> g;
  if (f == 1) {
    g = {0, 1};
  } else if (unram_modulus) {
    g = *unram_modulus;
    if (static_cast<int>(g.size()) != f + 1 || g.back() != 1)
      fail(ErrorKind::ConfigError, "unramified modulus must be monic of degree f");
    fp_poly::Poly gp(g.begin(), g.end());
    if (!fp_poly::is_irreducible(gp, p)) fail(ErrorKind::ReducibleModulus, "unramified modulus is reducible mod p");
  } else {
    g = first_irreducible(p, f);
  }
  ctx->g_ = g;

  int e = 1;
  EisensteinSpec E;
  if (eis && eis->size() > 2) {
    E = *eis;
    e = static_cast<int>(E.size()) - 1;
    for (auto& c : E) {
      if (static_cast<int>(c.size()) > f) fail(ErrorKind::ConfigError, "Eisenstein coefficient has too many t-components");
      c.resize(f, 0);
    }
    auto is_unit_q = [&](const std::vector<long>& c) {
      for (long x : c)
        if (((x % p) + p) % p != 0) return true;
      return false;
    };
    auto divisible = [&](const std::vector<long>& c) { return !is_unit_q(c); };
    if (!is_unit_q(E.back())) fail(ErrorKind::NotEisenstein, "leading coefficient is not a unit");
    // normalize to monic when the leading coefficient is +-1 in every slot pattern we accept
    bool monic = E.back()[0] == 1;
    for (int l = 1; l < f; ++l) monic = monic && E.back()[l] == 0;
    bool neg_monic = E.back()[0] == -1;
    for (int l = 1; l < f; ++l) neg_monic = neg_monic && E.back()[l] == 0;
    if (neg_monic) {
      for (auto& c : E)
        for (auto& x : c) x = -x;
    } else if (!monic) {
      fail(ErrorKind::NotEisenstein, "leading coefficient must be +-1");
    }
    for (int i = 0; i < e; ++i)
      if (!divisible(E[i])) fail(ErrorKind::NotEisenstein, "non-leading coefficient not divisible by p");
    std::vector<long> c0 = E[0];
    for (auto& x : c0) x /= p;
    if (!is_unit_q(c0)) fail(ErrorKind::NotEisenstein, "constant term not exactly divisible by p");
  }
  ctx->e_ = e;
  ctx->eis_ = E;

  std::vector<mpz_class> gz;
  for (long x : g) gz.emplace_back(x);
  std::vector<mpz_class> ez;
  for (int i = 0; i < e && e > 1; ++i)
    for (int l = 0; l < f; ++l) ez.emplace_back(E[i][l]);
  ctx->ring_ = LocalRing::make_base(p, f, std::move(gz), e, std::move(ez), N);
  return ctx;
}

ContextPtr Context::with_precision(int N) const {
  std::optional<EisensteinSpec> E;
  if (e_ > 1) E = eis_;
  std::optional<std::vector<long>> g;
  if (f_ > 1) g = g_;
  return make_context(p_, f_, E, N, g);
}

LocalElem Context::pi() const { return LocalElem::gen(*ring_); }

LocalElem Context::lift_residue(const std::vector<int>& r) const {
  Digits z(ring_->dim());
  for (int l = 0; l < f_; ++l) z[l] = r[l];
  return LocalElem::from_digits(*ring_, std::move(z), 0, kInfPrec);
}

LocalElem Context::teichmuller(const std::vector<int>& r) const {
  if (fq().is_zero(r)) return zero();
  // Newton on X^q - X, whose derivative is a unit at every root
  LocalElem x = lift_residue(r);
  const LocalElem qel = from_int(qz_);
  for (int it = 0; it < 64; ++it) {
    LocalElem xq1 = x.pow(q_ - 1);
    LocalElem val = x * xq1 - x;
    if (val.is_zero()) break;
    LocalElem der = qel * xq1 - one();
    x = (x - val / der).lift_exact();
  }
  return x;
}

std::vector<LocalElem> Context::roots_of_unity() const {
  std::vector<LocalElem> out;
  for (auto& r : fq().elements())
    if (!fq().is_zero(r)) out.push_back(teichmuller(r));
  return out;
}

LocalElem hensel_lift(const Poly& g, const LocalElem& x0) {
  const Poly dg = poly_derivative(g);
  LocalElem gx = poly_eval(g, x0);
  LocalElem dx = poly_eval(dg, x0);
  if (dx.is_zero() || !(gx.valuation() > 2 * dx.valuation()))
    fail(ErrorKind::HenselCriterionFailed, "v(g(x0)) <= 2 v(g'(x0))");
  LocalElem x = x0.lift_exact();
  for (int it = 0; it < 64; ++it) {
    gx = poly_eval(g, x);
    if (gx.is_zero()) break;
    dx = poly_eval(dg, x);
    x = (x - gx / dx).lift_exact();
  }
  gx = poly_eval(g, x);
  dx = poly_eval(dg, x);
  // |x - root| <= |g(x) / g'(x)|
  return x.with_abs_prec(gx.abs_prec() - dx.valuation());
}

}  // namespace ltlab

#include "ltlab/tower/tower.hpp"

#include "ltlab/formal_groups/lubin_tate.hpp"

namespace ltlab {

std::shared_ptr<const Tower> Tower::build(ContextPtr ctx, const ExactPoly& Q, int n) {
  if (n < 1) fail(ErrorKind::ConfigError, "tower level must be at least 1");
  const LocalRing& R = ctx->ring();
  if (Q.ring().dim() != R.dim()) fail(ErrorKind::RingMismatch, "Q is not over the context ring");
  auto T = std::shared_ptr<Tower>(new Tower());
  T->ctx_ = ctx;
  T->Q_ = ExactPoly::from_coords(R, Q.coeffs());
  T->Qp_ = T->Q_.to_poly();
  T->n_ = n;
  if (!T->Q_.is_monic() || T->Q_.degree() != static_cast<int>(ctx->q()))
    fail(ErrorKind::HypothesisViolated, "Q must be monic of degree q");
  const LocalElem pi_p = T->Q_.coeff_elem(1);
  if (pi_p.is_zero() || pi_p.valuation() != 1) fail(ErrorKind::HypothesisViolated, "Q'(0) must be a uniformizer");
  PowerSeries Qs = PowerSeries::from_poly(T->Qp_, T->Q_.degree());
  if (!lt_validate(Qs, pi_p, ctx->q())) fail(ErrorKind::HypothesisViolated, "Q is not a Lubin-Tate polynomial");

  ExactPoly X = ExactPoly::from_ints(R, {0, 1});
  ExactPoly prev = X, cur = T->Q_;
  for (int i = 1; i < n; ++i) {
    prev = cur;
    cur = compose(T->Q_, cur);
  }
  auto [f, rem] = divmod(cur, prev);
  if (!rem.is_zero()) fail(ErrorKind::NonzeroRemainder, "Q^(n) is not divisible by Q^(n-1)");
  std::uint64_t dn = ctx->q() - 1;
  for (int i = 1; i < n; ++i) dn *= ctx->q();
  if (f.degree() != static_cast<int>(dn) || !f.is_monic()) fail(ErrorKind::NotEisenstein, "tower modulus has the wrong degree");
  for (int i = 0; i < f.degree(); ++i) {
    LocalElem c = f.coeff_elem(i);
    if (i == 0 && (c.is_zero() || c.valuation() != 1)) fail(ErrorKind::NotEisenstein, "constant term is not a uniformizer");
    if (!c.is_zero() && c.valuation() < 1) fail(ErrorKind::NotEisenstein, "coefficient is not in the maximal ideal");
  }
  T->mod_ = f;
  T->d_ = f.degree();
  std::vector<mpz_class> m;
  for (int i = 0; i < T->d_; ++i)
    for (auto& z : f.coeff(i)) m.push_back(z);
  T->L_ = LocalRing::make_extension(ctx->ring_shared(), std::move(m), T->d_);
  const LocalRing& L = *T->L_;

  T->omega_.assign(static_cast<std::size_t>(n + 1), LocalElem::exact_zero(L));
  // a degree-one modulus X + c has its root -c in K itself
  T->omega_[static_cast<std::size_t>(n)] =
      T->d_ == 1 ? LocalElem::embed(-f.coeff_elem(0), L) : LocalElem::gen(L);
  for (int i = n - 1; i >= 1; --i)
    T->omega_[static_cast<std::size_t>(i)] = poly_eval(T->Qp_, T->omega_[static_cast<std::size_t>(i + 1)]);
  const LocalElem& w1 = T->omega_[1];
  if (w1.is_zero() || !poly_eval(T->Qp_, w1).is_zero())
    fail(ErrorKind::HypothesisViolated, "w_1 is not a nonzero root of Q");

  // Newton's identities for p_k = Tr(w^k)
  const int d = T->d_;
  auto mc = [&](int i) { return f.coeff_elem(i); };  // coefficient of X^i
  T->ptr_.push_back(LocalElem::from_int(R, d));
  for (int k = 1; k < d; ++k) {
    LocalElem s = LocalElem::from_int(R, k) * mc(d - k);
    for (int i = 1; i < k; ++i) s += mc(d - i) * T->ptr_[static_cast<std::size_t>(k - i)];
    T->ptr_.push_back(-s);
  }
  return T;
}

Rational tower_valuation(const LocalElem& x) {
  if (x.is_zero()) fail(ErrorKind::IndeterminateValuation, "element is indistinguishable from 0");
  return x.vp();
}

Matrix mult_matrix(const Tower& T, const LocalElem& x) {
  const int d = T.degree();
  const LocalRing& L = T.ring();
  Matrix M(static_cast<std::size_t>(d), std::vector<LocalElem>(static_cast<std::size_t>(d)));
  LocalElem col = LocalElem::embed(x, L);
  for (int j = 0; j < d; ++j) {
    if (j > 0) col = col.mul_gen_power(1);
    auto cs = col.coeffs();
    for (int i = 0; i < d; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cs[static_cast<std::size_t>(i)];
  }
  return M;
}

Rational tower_valuation_det(const Tower& T, const LocalElem& x) {
  LocalElem det = determinant(mult_matrix(T, x));
  if (det.is_zero()) fail(ErrorKind::IndeterminateValuation, "norm is indistinguishable from 0");
  // v_p(x) = v_p(N x) / d
  return Rational(det.valuation(), static_cast<long long>(T.ctx().ring().ram()) * T.degree());
}

LocalElem trace_to_K(const Tower& T, const LocalElem& x) {
  const LocalRing& L = T.ring();
  if (x.ring_ptr() != &L) return LocalElem::from_int(T.ctx().ring(), T.degree()) * x;
  LocalElem s = LocalElem::exact_zero(T.ctx().ring());
  auto cs = x.coeffs();
  for (int j = 0; j < T.degree(); ++j) s += cs[static_cast<std::size_t>(j)] * T.power_traces()[static_cast<std::size_t>(j)];
  return s;
}

LocalElem trace_matrix(const Tower& T, const LocalElem& x) {
  Matrix M = mult_matrix(T, x);
  LocalElem s = LocalElem::exact_zero(T.ctx().ring());
  for (int i = 0; i < T.degree(); ++i) s += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  return s;
}

LocalElem apply_embedding(const Tower& T, const LocalElem& x, const LocalElem& y) {
  if (x.ring_ptr() != &T.ring()) return LocalElem::embed(x, T.ring());
  auto cs = x.coeffs();
  LocalElem acc = LocalElem::exact_zero(T.ring());
  for (int j = T.degree() - 1; j >= 0; --j) acc = acc * y + cs[static_cast<std::size_t>(j)];
  return acc;
}

}  // namespace ltlab

#include <doctest.h>

#include <random>

#include "ltlab/padic/context.hpp"
#include "ltlab/series/bivariate_series.hpp"
#include "ltlab/series/power_series.hpp"
#include "oracle/rational_series.hpp"

using namespace ltlab;

namespace {

PowerSeries geometric(const LocalRing& R, int D) {
  PowerSeries s(R, D);
  for (int k = 0; k <= D; ++k) s[k] = LocalElem::one(R);
  return s;
}

PowerSeries random_integral(const Context& C, std::mt19937_64& rng, int D, bool zero_const) {
  PowerSeries s(C.ring(), D);
  for (int k = zero_const ? 1 : 0; k <= D; ++k) s[k] = C.from_int(static_cast<long>(rng() % 1000) - 500);
  return s;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto C = make_context(3, 1, std::nullopt, 30);
  const LocalRing& R = C->ring();
  PowerSeries X = PowerSeries::X(R, 10);
  PowerSeries X2 = X * X;
  CHECK(X2[2].equals(C->one()));
  CHECK(X2[1].is_exact_zero());
  PowerSeries g = geometric(R, 10);
  PowerSeries one_minus_x = PowerSeries::constant(C->one(), 10) - X;
  PowerSeries prod = one_minus_x * g;
  CHECK(prod.D() == 10);
  CHECK(prod[0].equals(C->one()));
  for (int k = 1; k <= 10; ++k) CHECK(prod[k].is_zero());
  PowerSeries z = g + (-g);
  for (int k = 0; k <= 10; ++k) CHECK(z[k].is_zero());
}

TEST_CASE("composition") {
  auto C = make_context(3, 1, std::nullopt, 30);
  const LocalRing& R = C->ring();
  std::mt19937_64 rng(5);
  PowerSeries f = random_integral(*C, rng, 12, false);
  PowerSeries id = compose(f, PowerSeries::X(R, 12));
  CHECK(id.equals(f));
  PowerSeries a(R, 5);
  a[1] = C->one();
  a[2] = C->one();
  a.set_polynomial(true);
  PowerSeries b = C->from_int(2) * PowerSeries::X(R, 5);
  PowerSeries ab = compose(a, b);
  CHECK(ab[1].equals(C->from_int(2)));
  CHECK(ab[2].equals(C->from_int(4)));
  CHECK(ab[3].is_zero());
  PowerSeries bad = PowerSeries::constant(C->from_int(3).with_abs_prec(0), 5) + PowerSeries::X(R, 5);
  CHECK_THROWS_AS(compose(f, bad), Error);
  // exp(log(1+X)) - 1 = X with exact rational oracles
  const int D = 20;
  PowerSeries e = oracle::to_series(R, oracle::expm1(D));
  PowerSeries l = oracle::to_series(R, oracle::log1p(D));
  PowerSeries el = compose(e, l);
  CHECK(el[1].equals(C->one()));
  for (int k = 2; k <= D; ++k) CHECK(el[k].is_zero());
}

TEST_CASE("composition is associative on integral series") {
  auto C = make_context(5, 1, std::nullopt, 25);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 3; ++it) {
    PowerSeries f = random_integral(*C, rng, 30, false);
    PowerSeries g = random_integral(*C, rng, 30, true);
    PowerSeries h = random_integral(*C, rng, 30, true);
    CHECK(compose(compose(f, g), h).equals(compose(f, compose(g, h))));
  }
}

TEST_CASE("reversion and reciprocal") {
  auto C = make_context(3, 1, std::nullopt, 40);
  const LocalRing& R = C->ring();
  const int D = 20;
  PowerSeries X = PowerSeries::X(R, D);
  CHECK(reversion(X.truncate(D)).equals(X));
  // X/(1-X) and X/(1+X)
  PowerSeries m(R, D), minv(R, D);
  for (int k = 1; k <= D; ++k) {
    m[k] = C->one();
    minv[k] = C->from_int((k % 2) ? 1 : -1);
  }
  CHECK(reversion(m).equals(minv));
  PowerSeries l = oracle::to_series(R, oracle::log1p(D));
  CHECK(reversion(l).equals(oracle::to_series(R, oracle::expm1(D))));
  // two-sided
  PowerSeries rl = reversion(l);
  PowerSeries back = compose(rl, l);
  CHECK(back[1].equals(C->one()));
  for (int k = 2; k <= D; ++k) CHECK(back[k].is_zero());
  CHECK_THROWS_AS(reversion(C->from_int(3) * X.truncate(D)), Error);

  PowerSeries one_minus_x = PowerSeries::constant(C->one(), D).truncate(D) - X;
  PowerSeries r = reciprocal(one_minus_x);
  for (int k = 0; k <= D; ++k) CHECK(r[k].equals(C->one()));
  PowerSeries q = PowerSeries::constant(C->one(), D).truncate(D) + X + X * X;
  PowerSeries qq = q * reciprocal(q);
  CHECK(qq[0].equals(C->one()));
  for (int k = 1; k <= D; ++k) CHECK(qq[k].is_zero());
  CHECK_THROWS_AS(reciprocal(C->from_int(3) * q), Error);
}

TEST_CASE("interior evaluation") {
  auto C = make_context(3, 1, std::nullopt, 60);
  const LocalRing& R = C->ring();
  const int D = 30;
  PowerSeries X = PowerSeries::X(R, D).truncate(D);
  X.set_polynomial(false);
  X.set_valuation_floor(0);
  auto r = eval_interior(X, C->pi());
  CHECK(r.value.equals(C->pi()));
  CHECK(r.tail_bound == D + 1);
  PowerSeries g = geometric(R, D);
  g.set_valuation_floor(0);
  auto s = eval_interior(g, C->from_int(3));
  CHECK(s.tail_bound == D + 1);
  CHECK(s.value.equals(C->from_rational(mpq_class(1, -2))));
  CHECK(s.value.abs_prec() == D + 1);
  CHECK_THROWS_AS(eval_interior(g, C->one()), Error);
  // f(g(x)) = (f o g)(x) in the interior
  std::mt19937_64 rng(3);
  PowerSeries f = random_integral(*C, rng, D, false);
  PowerSeries h = random_integral(*C, rng, D, true);
  f.set_valuation_floor(0);
  h.set_valuation_floor(0);
  PowerSeries fh = compose(f, h);
  fh.set_valuation_floor(0);
  LocalElem x = C->from_int(9);
  auto inner = eval_interior(h, x);
  auto lhs = eval_interior(fh, x);
  auto rhs = eval_interior(f, inner.value);
  CHECK(lhs.value.equals(rhs.value));
}

TEST_CASE("boundary evaluation") {
  auto C = make_context(3, 1, std::nullopt, 40);
  const LocalRing& R = C->ring();
  Poly p = poly_from_ints(R, {0, 1, 2, 3});
  auto b = eval_boundary(PowerSeries::from_poly(p, 3), C->one(), 2);
  CHECK(b.value.equals(C->from_int(6)));
  CHECK(b.achieved_prec == b.value.abs_prec());
  CHECK_THROWS_AS(eval_boundary(geometric(R, 30), C->one(), 5), Error);
  // Dwork: exp(pi_D (X - X^3)) with pi_D^2 = -3 over Q_3(pi_D); at 1 gives a cube root of unity
  auto K = make_context(3, 1, EisensteinSpec{{3}, {0}, {1}}, 60);
  const LocalRing& RK = K->ring();
  const int D = 150;
  PowerSeries arg(RK, D);
  arg[1] = K->pi();
  arg[3] = -K->pi();
  arg.set_polynomial(true);
  PowerSeries ex = oracle::to_series(RK, oracle::expm1(D));
  PowerSeries Eg = compose(ex, arg);
  auto r = eval_boundary(Eg, K->one(), 20);
  LocalElem zeta = r.value + K->one();
  CHECK(r.achieved_prec > 10);
  CHECK(zeta.pow(3).with_abs_prec(r.achieved_prec).equals(K->one()));
  CHECK(!zeta.with_abs_prec(r.achieved_prec).equals(K->one()));
}

TEST_CASE("bivariate series") {
  auto C = make_context(3, 1, std::nullopt, 30);
  const LocalRing& R = C->ring();
  BivariateSeries F(R, 10);
  F.at(1, 0) = C->one();
  F.at(0, 1) = C->one();
  F.set_polynomial(true);
  LocalElem a = C->from_int(3), b = C->from_int(9) + C->from_int(27);
  CHECK(bps_eval(F, a, b).value.equals(a + b));
  F.at(1, 1) = C->one();
  CHECK(bps_eval(F, a, b).value.equals(a + b + a * b));
  CHECK(bps_eval(F, a, C->zero()).value.equals(a));
  CHECK(F.swap_xy().equals(F));
  CHECK_THROWS_AS(bps_eval(F, C->one(), a), Error);
}

#include <doctest.h>

#include <map>
#include <random>

#include "ltlab/padic/context.hpp"
#include "ltlab/witt/witt.hpp"
#include "oracle/classical_witt.hpp"

using namespace ltlab;
using namespace oracle;

namespace {

bool matches(const MultiPoly& m, const ZPoly& z, const LocalRing& R) {
  if (m.size() != z.size()) return false;
  for (auto& [mono, c] : z)
    if (!m.coeff(mono).equals(LocalElem::from_int(R, c))) return false;
  return true;
}

using WV = WittVector<LocalElem>;

bool same(const WV& a, const WV& b) {
  if (a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!a[i].equals(b[i])) return false;
  return true;
}

LocalElem rand_int(const Context& C, std::mt19937_64& rng) {
  LocalElem x = C.from_int(static_cast<long>(rng() % 100000) - 50000);
  if (C.f() > 1) x += C.lift_residue(C.fq().from_index(rng() % C.q()));
  if (C.e() > 1) x += C.pi() * C.from_int(static_cast<long>(rng() % 1000));
  return x;
}

WV rand_witt(const WittParams& W, const Context& C, std::mt19937_64& rng, std::size_t len) {
  std::vector<LocalElem> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(rand_int(C, rng));
  return WV(W, c);
}

}  // namespace

TEST_CASE("ghost components") {
  auto C = make_context(3, 2, std::nullopt, 40);
  WittParams W(C->pi(), C->q());
  LocalElem a = C->from_int(7) + C->lift_residue({0, 1});
  auto t = WV::teichmuller(W, a, 3);
  CHECK(t.ghost()[0].equals(a));
  CHECK(t.ghost()[1].equals(a.pow(9)));
  CHECK(t.ghost()[2].equals(a.pow(81)));
  WV v(W, {C->zero(), C->one(), C->zero(), C->zero()});
  CHECK(v.ghost()[0].is_zero());
  for (int n = 1; n < 4; ++n) CHECK(v.ghost()[static_cast<std::size_t>(n)].equals(C->pi()));
  WV z(W, {C->zero(), C->zero(), C->zero()});
  for (auto& g : z.ghost()) CHECK(g.is_zero());
}

TEST_CASE("unghost") {
  auto C = make_context(3, 1, std::nullopt, 40);
  WittParams W(C->pi(), C->q());
  LocalElem a = C->from_int(5);
  auto w = WV::from_ghost(W, {a, a.pow(3), a.pow(9)});
  CHECK(w[0].equals(a));
  CHECK(w[1].is_zero());
  CHECK(w[2].is_zero());
  auto one = WV::from_ghost(W, {C->one(), C->one()});
  CHECK(one[0].equals(C->one()));
  CHECK(one[1].is_zero());
  // 1 and 2 are not congruent mod 3
  try {
    WV::from_ghost(W, {C->one(), C->from_int(2)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInGhostImage);
  }
  // 1 and 1 + pi are congruent: succeeds with a_1 = 1
  auto s = WV::from_ghost(W, {C->one(), C->one() + C->pi()});
  CHECK(s[1].equals(C->one()));
  std::mt19937_64 rng(1);
  for (int it = 0; it < 20; ++it) {
    WV r = rand_witt(W, *C, rng, 4);
    CHECK(same(WV::from_ghost(W, r.ghost()), r));
  }
}

TEST_CASE("Witt ring axioms through the ghost oracle") {
  struct Case {
    int p, f;
    std::optional<EisensteinSpec> eis;
  };
  for (const Case& cs : {Case{2, 1, std::nullopt}, Case{3, 1, std::nullopt}, Case{3, 2, std::nullopt},
                         Case{3, 1, EisensteinSpec{{-3}, {0}, {1}}}}) {
    auto C = make_context(cs.p, cs.f, cs.eis, 60);
    WittParams W(C->pi(), C->q());
    std::mt19937_64 rng(static_cast<unsigned>(cs.p * 10 + cs.f));
    const int triples = 50;
    for (int it = 0; it < triples; ++it) {
      WV x = rand_witt(W, *C, rng, 3), y = rand_witt(W, *C, rng, 3), z = rand_witt(W, *C, rng, 3);
      CHECK(same((x + y) + z, x + (y + z)));
      CHECK(same((x * y) * z, x * (y * z)));
      CHECK(same(x + y, y + x));
      CHECK(same(x * y, y * x));
      CHECK(same(x * (y + z), x * y + x * z));
      CHECK(same(x - x, WV(W, {C->zero(), C->zero(), C->zero()})));
      WV one(W, {C->one(), C->zero(), C->zero()});
      CHECK(same(x * one, x));
      // homomorphism: ghost of the product is the pointwise product
      WV xy = x * y;
      for (std::size_t i = 0; i < 3; ++i) CHECK(xy.ghost()[i].equals(x.ghost()[i] * y.ghost()[i]));
    }
  }
}

TEST_CASE("Frobenius, Verschiebung and Teichmuller") {
  auto C = make_context(3, 2, std::nullopt, 60);
  WittParams W(C->pi(), C->q());
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    WV w = rand_witt(W, *C, rng, 3), u = rand_witt(W, *C, rng, 3);
    // ghost of V(w)
    WV v = w.verschiebung();
    CHECK(v.ghost()[0].is_zero());
    for (std::size_t i = 1; i < v.length(); ++i) CHECK(v.ghost()[i].equals(C->pi() * w.ghost()[i - 1]));
    // FV = pi
    CHECK(same(v.frobenius(), w.scale(C->pi())));
    // V additive
    CHECK(same((w + u).verschiebung(), w.verschiebung() + u.verschiebung()));
    // F(a)_n = a_n^q mod pi
    WV f = w.frobenius();
    for (std::size_t n = 0; n < f.length(); ++n) {
      LocalElem d = f[n] - w[n].pow(C->q());
      CHECK((d.is_zero() ? d.abs_prec() : d.valuation()) >= 1);
    }
    LocalElem a = rand_int(*C, rng), b = rand_int(*C, rng);
    CHECK(same(WV::teichmuller(W, a, 3) * WV::teichmuller(W, b, 3), WV::teichmuller(W, a * b, 3)));
    CHECK(same(WV::teichmuller(W, a, 3).frobenius(), WV::teichmuller(W, a.pow(C->q()), 2)));
  }
}

TEST_CASE("structural polynomials") {
  for (int p : {2, 3}) {
    auto C = make_context(p, 1, std::nullopt, 40);
    const LocalRing& R = C->ring();
    WittParams W(C->pi(), C->q());
    auto s = structural_polys(W, R, 2);
    const int nv = 2 * 2 + 3;
    CAPTURE(p);
    // S_0, P_0, F_0
    CHECK(s.S[0].equals(MultiPoly::var(R, nv, 0) + MultiPoly::var(R, nv, 4)));
    CHECK(s.P[0].equals(MultiPoly::var(R, nv, 0) * MultiPoly::var(R, nv, 4)));
    CHECK(s.F[0].equals(MultiPoly::var(R, nv, 0).pow(C->q()) + C->pi() * MultiPoly::var(R, nv, 1)));
    // S_1 closed form
    ZPoly x0 = zvar(nv, 0), y0 = zvar(nv, 4);
    ZPoly s1 = zadd(zvar(nv, 1), zvar(nv, 5));
    ZPoly corr = zadd(zadd(zpow(x0, p, nv), zpow(y0, p, nv)), zpow(zadd(x0, y0), p, nv), -1);
    s1 = zadd(s1, zdiv(corr, p));
    CHECK(matches(s.S[1], s1, R));
    // classical polynomials up to n = 2
    auto [S, P] = classical_sum_product(p, 2, nv, 4);
    for (int i = 0; i <= 2; ++i) {
      CHECK(matches(s.S[static_cast<std::size_t>(i)], S[static_cast<std::size_t>(i)], R));
      CHECK(matches(s.P[static_cast<std::size_t>(i)], P[static_cast<std::size_t>(i)], R));
    }
  }
  // applied componentwise they agree with the ghost route, here in a ramified ring
  auto C = make_context(3, 1, EisensteinSpec{{-3}, {0}, {1}}, 60);
  WittParams W(C->pi(), C->q());
  auto s = structural_polys(W, C->ring(), 2, C->from_int(5));
  std::mt19937_64 rng(4);
  for (int it = 0; it < 10; ++it) {
    WV x = rand_witt(W, *C, rng, 4), y = rand_witt(W, *C, rng, 3);
    std::vector<LocalElem> args{x[0], x[1], x[2], x[3], y[0], y[1], y[2]};
    WV sum = x.truncate(3) + y, prod = x.truncate(3) * y, neg = -x.truncate(3), sc = x.truncate(3).scale(C->from_int(5));
    WV fr = x.frobenius();
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(s.S[i].eval(args).equals(sum[i]));
      CHECK(s.P[i].eval(args).equals(prod[i]));
      CHECK(s.I[i].eval(args).equals(neg[i]));
      CHECK(s.C[i].eval(args).equals(sc[i]));
      CHECK(s.F[i].eval(args).equals(fr[i]));
    }
  }
}

TEST_CASE("classical oracle") {
  for (int p : {2, 3}) {
    auto C = make_context(p, 1, std::nullopt, 30);
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      CHECK(classical_oracle(*C, m));
    }
  }
}

TEST_CASE("S_P and its specializations") {
  auto C = make_context(3, 1, std::nullopt, 60);
  const LocalRing& R = C->ring();
  WittParams W(C->pi(), C->q());
  const int D = 60;
  PowerSeries P = PowerSeries::from_poly(poly_from_ints(R, {0, 3, 0, 1}), 3);
  PowerSeries h = PowerSeries::X(R, D).truncate(D);
  h.set_polynomial(false);
  auto s = sP(W, h, P, 3);
  CHECK(s[0].equals(h));
  // F(S_P(h)) = S_P(h o P)
  auto lhs = s.frobenius();
  auto rhs = sP(W, compose(h, P), P, 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(lhs[i].equals(rhs[i]));
  // constants map to the structure map image
  auto c = sP(W, PowerSeries::constant(C->from_int(7), D).truncate(D), P, 3);
  auto cs = WittVector<PowerSeries>::scalar(W, C->from_int(7), h, 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(c[i].equals(cs[i]));

  // O_L = Z_3[w], w^2 = -3, a root of P
  auto L = LocalRing::make_extension(C->ring_shared(), {mpz_class(3), mpz_class(0)}, 2);
  LocalElem w = LocalElem::gen(*L);
  REQUIRE(poly_eval(poly_from_ints(R, {0, 3, 0, 1}), w).is_zero());
  auto sa = sPa(W, PowerSeries::X(R, 5), P, w, 3);
  CHECK(sa.ghost()[0].equals(w));
  CHECK(sa.ghost()[1].is_zero());
  CHECK(sa.ghost()[2].is_zero());
  // specialization of the series components equals the direct route
  LocalElem a = w * (LocalElem::one(*L) + LocalElem::gen(*L));
  auto direct = sPa(W, h, P, a, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    PowerSeries comp = s[i];
    auto ev = eval_interior(comp, a, 0);
    LocalElem d = ev.value - direct[i];
    CHECK((d.is_zero() ? d.abs_prec() : d.valuation()) >= std::min(ev.tail_bound, direct[i].abs_prec()));
  }
}

TEST_CASE("valuation criterion on random inputs") {
  auto C = make_context(3, 1, std::nullopt, 60);
  const LocalRing& R = C->ring();
  WittParams W(C->pi(), C->q());
  PowerSeries P = PowerSeries::from_poly(poly_from_ints(R, {0, 3, 0, 1}), 3);
  auto L = LocalRing::make_extension(C->ring_shared(), {mpz_class(3), mpz_class(0)}, 2);
  const LocalElem w = LocalElem::gen(*L);
  std::mt19937_64 rng(21);
  int with_r[5] = {0, 0, 0, 0, 0};
  for (int it = 0; it < 50; ++it) {
    const int r = static_cast<int>(rng() % 5);  // 4 stands for h(0) = 0
    PowerSeries h(R, 8);
    for (int k = 1; k <= 8; ++k) h[k] = C->from_int(static_cast<long>(rng() % 50) - 25);
    h.set_polynomial(true);
    if (r < 4) {
      long u = static_cast<long>(rng() % 2) + 1;  // unit mod 3
      h[0] = C->from_int(u) * C->pi().pow(static_cast<std::uint64_t>(r)) + C->pi().pow(static_cast<std::uint64_t>(r + 1)) * C->from_int(static_cast<long>(rng() % 5));
    } else {
      h[0] = C->zero();
    }
    LocalElem a = w.pow(1 + rng() % 3) * (LocalElem::one(*L) + C->from_int(static_cast<long>(rng() % 7)));
    auto kc = key_valuation_criterion(W, h, P, a, 4);
    ++with_r[r];
    CAPTURE(r);
    CHECK(kc.consistent);
    CHECK(kc.r_from_alpha == (r < 4 ? r : -1));
  }
  for (int r = 0; r < 5; ++r) CHECK(with_r[r] > 0);
  PowerSeries h1 = PowerSeries::constant(C->one(), 4);
  CHECK(key_valuation_criterion(W, h1, P, w, 3).r_from_alpha == 0);
}

#include <doctest.h>

#include <random>

#include "ltlab/padic/context.hpp"

using namespace ltlab;

namespace {

LocalElem random_elem(const Context& C, std::mt19937_64& rng, int vmin, int vmax) {
  const LocalRing& R = C.ring();
  Digits z(R.dim());
  for (auto& c : z) {
    mpz_class x = 0;
    for (int i = 0; i < C.N() + 2; ++i) x = x * C.p() + static_cast<long>(rng() % static_cast<unsigned>(C.p()));
    c = x;
  }
  std::uniform_int_distribution<int> dv(vmin, vmax);
  LocalElem u = LocalElem::from_digits(R, z, 0, kInfPrec);
  if (u.is_zero()) u = C.one();
  return u * C.pi().pow(0) * (dv(rng) >= 0 ? C.pi().pow(static_cast<unsigned>(dv(rng) - vmin)) : C.one());
}

// x^4 = 1 solved digit by digit modulo 5^n, independent of Newton.
mpz_class brute_root_x4(long start, int n) {
  mpz_class x = start, pk = 5;
  for (int k = 1; k < n; ++k) {
    mpz_class next = pk * 5;
    for (int d = 0; d < 5; ++d) {
      mpz_class y = x + d * pk;
      mpz_class r;
      mpz_powm_ui(r.get_mpz_t(), y.get_mpz_t(), 4, next.get_mpz_t());
      if (r == 1) {
        x = y;
        break;
      }
    }
    pk = next;
  }
  return x;
}

}  // namespace

TEST_CASE("context validation") {
  CHECK_THROWS_AS(make_context(4, 1, std::nullopt, 20), Error);
  try {
    make_context(9, 1, std::nullopt, 20);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  try {
    make_context(3, 2, std::nullopt, 20, std::vector<long>{2, 0, 1});  // t^2 + 2 = (t+1)(t+2) mod 3
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
  }
  try {
    make_context(3, 1, EisensteinSpec{{9}, {0}, {1}}, 20);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEisenstein);
  }
  auto C = make_context(3, 2, std::nullopt, 20);
  CHECK(C->q() == 9);
  CHECK(C->unram_modulus() == std::vector<long>{1, 0, 1});
}

TEST_CASE("basic arithmetic over Q_3") {
  auto C = make_context(3, 1, std::nullopt, 20);
  const LocalRing& R = C->ring();
  LocalElem three = C->from_int(3);
  CHECK(three.valuation() == 1);
  CHECK(three.rel_prec() == 20);
  LocalElem third = three.inverse();
  CHECK(third.valuation() == -1);
  CHECK((third * three).equals(C->one()));
  LocalElem x = C->from_rational(mpq_class(5, 7));
  CHECK((x * C->from_int(7)).equals(C->from_int(5)));
  // cancellation: 1 - (1 + 3^5) has valuation 5
  LocalElem y = C->one() - (C->one() + three.pow(5));
  CHECK(y.valuation() == 5);
  CHECK(y.abs_prec() == 20);
  // precision propagation for products
  LocalElem a = C->from_int(2).with_abs_prec(10);
  LocalElem b = three.pow(2).with_abs_prec(7);
  LocalElem ab = a * b;
  CHECK(ab.abs_prec() == std::min(10 + 2, 7 + 0));
  CHECK(ab.valuation() == 2);
  // zero at precision
  LocalElem z = a - a;
  CHECK(z.is_zero());
  CHECK(z.abs_prec() == 10);
  CHECK_THROWS_AS(z.inverse(), Error);
  CHECK(LocalElem::exact_zero(R).is_exact_zero());
}

TEST_CASE("ramified ring Q_3(sqrt 3)") {
  auto C = make_context(3, 1, EisensteinSpec{{-3}, {0}, {1}}, 20);
  CHECK(C->e() == 2);
  LocalElem u = C->pi();
  CHECK(u.valuation() == 1);
  CHECK((u * u).equals(C->from_int(3)));
  CHECK(C->from_int(3).valuation() == 2);
  CHECK((u.inverse() * u).equals(C->one()));
  LocalElem w = (C->one() + u).inverse();
  CHECK(((C->one() + u) * w).equals(C->one()));
  CHECK(u.inverse().valuation() == -1);
  LocalElem x = C->from_int(2) + u.pow(3);
  CHECK(x.valuation() == 0);
  CHECK((x / u.pow(5)).valuation() == -5);
}

TEST_CASE("unramified Q_9 and Teichmuller lifts") {
  auto C = make_context(3, 2, std::nullopt, 30);
  auto mu = C->roots_of_unity();
  CHECK(mu.size() == 8);
  for (auto& z : mu) {
    CHECK(z.is_unit());
    CHECK(z.pow(8).equals(C->one()));
  }
  // distinct residues
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = i + 1; j < mu.size(); ++j) CHECK(!mu[i].equals(mu[j]));
}

TEST_CASE("Eisenstein extension of Q_9") {
  auto C = make_context(3, 2, std::nullopt, 20);
  CHECK(C->ring().dim() == 2);
  auto Cr = make_context(3, 2, EisensteinSpec{{-3, 0}, {0, 0}, {1, 0}}, 20);
  const LocalRing& K = Cr->ring();
  std::vector<mpz_class> m(2 * K.dim());
  // m(W) = W^2 - u
  m[K.f()] = -1;
  auto T = LocalRing::make_extension(Cr->ring_shared(), m, 2);
  LocalElem w = LocalElem::gen(*T);
  CHECK(w.valuation() == 1);
  CHECK(T->ram() == 4);
  LocalElem uu = LocalElem::embed(Cr->pi(), *T);
  CHECK((w * w).equals(uu));
  CHECK((w.inverse() * w).equals(LocalElem::one(*T)));
  CHECK(LocalElem::from_int(*T, 3).valuation() == 4);
  LocalElem t = LocalElem::basis(*T, 1);  // the unramified generator
  CHECK(t.is_unit());
  LocalElem y = (t + w.pow(3)).inverse();
  CHECK((y * (t + w.pow(3))).equals(LocalElem::one(*T)));
  // mixed multiplication with a base scalar
  LocalElem k = Cr->from_int(5) + Cr->pi();
  CHECK((k * w).equals(LocalElem::embed(k, *T) * w));
  CHECK(w.coeff(1).equals(Cr->one()));
  CHECK(w.coeff(0).is_zero());
}

TEST_CASE("Hensel lifting against a digit-by-digit oracle") {
  auto C = make_context(5, 1, std::nullopt, 25);
  Poly g = poly_from_ints(C->ring(), {-1, 0, 0, 0, 1});
  for (long start : {1L, 2L, 3L, 4L}) {
    LocalElem r = hensel_lift(g, C->from_int(start));
    CHECK(r.abs_prec() >= 25);
    mpz_class oracle = brute_root_x4(start, 25);
    CHECK(r.equals(C->from_int(oracle)));
  }
  Poly bad = poly_from_ints(C->ring(), {0, 0, 1});  // X^2 at 0: criterion fails
  CHECK_THROWS_AS(hensel_lift(bad, C->from_int(5)), Error);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(11);
  for (auto spec : {std::make_tuple(2, 1, false), std::make_tuple(3, 2, false), std::make_tuple(3, 1, true),
                    std::make_tuple(5, 1, false)}) {
    auto [p, f, ram] = spec;
    std::optional<EisensteinSpec> eis;
    if (ram) eis = EisensteinSpec{{-3}, {0}, {1}};
    auto C = make_context(p, f, eis, 15);
    for (int it = 0; it < 40; ++it) {
      LocalElem a = random_elem(*C, rng, 0, 4), b = random_elem(*C, rng, 0, 4), c = random_elem(*C, rng, 0, 4);
      CHECK(((a + b) + c).equals(a + (b + c)));
      CHECK(((a * b) * c).equals(a * (b * c)));
      CHECK((a * (b + c)).equals(a * b + a * c));
      CHECK((a * b).equals(b * a));
      CHECK(((a / b) * b).equals(a));
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("canonical form is unique") {
  auto C = make_context(3, 1, std::nullopt, 12);
  LocalElem a = C->from_rational(mpq_class(1, 9));
  LocalElem b = C->from_int(1).mul_p_power(-2);
  CHECK(a.identical(b));
  LocalElem c = (a + C->from_int(3)) - C->from_int(3);
  CHECK(c.with_abs_prec(a.abs_prec()).identical(a.with_abs_prec(c.abs_prec())));
}

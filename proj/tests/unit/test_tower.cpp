#include <doctest.h>

#include <random>

#include "ltlab/padic/context.hpp"
#include "ltlab/tower/galois.hpp"
#include "ltlab/tower/tower.hpp"
#include "support/fixtures.hpp"

using namespace ltlab;

namespace {

// X^q + pi X with pi given by exact coordinates
ExactPoly canonical(const Context& C, const ExactPoly::Coeff& pi) {
  std::vector<ExactPoly::Coeff> c(C.q() + 1, ExactPoly::Coeff(static_cast<std::size_t>(C.ring().dim()), 0));
  c[1] = pi;
  c[C.q()][0] = 1;
  return ExactPoly::from_coords(C.ring(), c);
}

ExactPoly::Coeff int_coeff(const Context& C, long a) {
  ExactPoly::Coeff c(static_cast<std::size_t>(C.ring().dim()), 0);
  c[0] = a;
  return c;
}

LocalElem random_tower_elem(const Tower& T, std::mt19937_64& rng) {
  std::vector<LocalElem> cs;
  for (int j = 0; j < T.degree(); ++j) cs.push_back(T.ctx().from_int(static_cast<long>(rng() % 1000) - 500));
  return LocalElem::from_coeffs(T.ring(), cs);
}

}  // namespace

TEST_CASE("tower moduli") {
  auto C = make_context(3, 1, std::nullopt, 40);
  auto T1 = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 1);
  CHECK(T1->modulus() == ExactPoly::from_ints(C->ring(), {3, 0, 1}));
  CHECK(T1->degree() == 2);
  auto C5 = make_context(5, 1, std::nullopt, 30);
  auto T5 = Tower::build(C5, canonical(*C5, int_coeff(*C5, 5)), 1);
  // w_1 is Dwork's gamma: gamma^{p-1} = -p
  CHECK(T5->omega(1).pow(4).equals(LocalElem::from_int(T5->ring(), -5)));
  auto T2 = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 2);
  CHECK(T2->degree() == 6);
  CHECK(T2->modulus().coeff_elem(0).valuation() == 1);
  // Q(Q(X)) = Q(X) f_2(X) exactly
  ExactPoly Q = T2->Q();
  CHECK(compose(Q, Q) == Q * T2->modulus());
  CHECK(T2->omega(1).equals(poly_eval(T2->Q_poly(), T2->omega(2))));
  CHECK(poly_eval(T2->Q_poly(), T2->omega(1)).is_zero());
  CHECK_THROWS_AS(Tower::build(C, ExactPoly::from_ints(C->ring(), {0, 1, 0, 1}), 1), Error);
  CHECK_THROWS_AS(Tower::build(C, ExactPoly::from_ints(C->ring(), {0, 3, 1, 1}), 1), Error);
}

TEST_CASE("tower valuations by two routes") {
  struct Case {
    int p, f;
    std::optional<EisensteinSpec> eis;
    int n;
  };
  for (const Case& cs : {Case{3, 1, std::nullopt, 2}, Case{2, 1, std::nullopt, 2}, Case{3, 2, std::nullopt, 1},
                         Case{3, 1, EisensteinSpec{{-3}, {0}, {1}}, 2}}) {
    auto C = make_context(cs.p, cs.f, cs.eis, 40);
    ExactPoly::Coeff pi = ExactPoly::coords_of(C->pi());
    auto T = Tower::build(C, canonical(*C, pi), cs.n);
    const long long e = C->e(), q = static_cast<long long>(C->q());
    CAPTURE(cs.p);
    CAPTURE(cs.n);
    CHECK(tower_valuation(T->omega(1)) == Rational(1, e * (q - 1)));
    CHECK(tower_valuation_det(*T, T->omega(1)) == Rational(1, e * (q - 1)));
    CHECK(tower_valuation(LocalElem::embed(C->pi(), T->ring())) == Rational(1, e));
    CHECK(tower_valuation_det(*T, LocalElem::embed(C->pi(), T->ring())) == Rational(1, e));
    if (cs.n == 2) {
      CHECK(tower_valuation(T->omega(2)) == Rational(1, e * q * (q - 1)));
      CHECK(tower_valuation_det(*T, T->omega(2)) == Rational(1, e * q * (q - 1)));
    }
    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
      LocalElem x = random_tower_elem(*T, rng);
      if (x.is_zero()) continue;
      CHECK(tower_valuation(x) == tower_valuation_det(*T, x));
      CHECK(trace_to_K(*T, x).equals(trace_matrix(*T, x)));
    }
  }
}

TEST_CASE("traces") {
  auto C = make_context(3, 1, std::nullopt, 40);
  auto T = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 2);
  CHECK(trace_to_K(*T, LocalElem::one(T->ring())).equals(C->from_int(6)));
  CHECK(trace_to_K(*T, T->omega(2)).equals(-T->modulus().coeff_elem(5)));
  CHECK(trace_matrix(*T, T->omega(2)).equals(-T->modulus().coeff_elem(5)));
  // embeddings fix K and send roots to roots
  LocalElem y = T->omega(2);
  CHECK(apply_embedding(*T, T->omega(1), y).equals(T->omega(1)));
}

// ---------------------------------------------------------------- Galois side

namespace {

Poly canonical_local(const Context& C) { return fixtures::canonical_poly(C); }

}  // namespace

TEST_CASE("division points") {
  auto C = make_context(3, 1, std::nullopt, 60);
  auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 60, 4);
  auto T = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 2);
  for (int m = 1; m <= 2; ++m) {
    auto r = division_point_check(*lt, *T, T->omega(m), m, 10);
    CHECK(r.status == DivisionPointStatus::Primitive);
    CHECK(r.prev_vp == Rational(1, 2));
  }
  CHECK(division_point_check(*lt, *T, T->omega(1), 2, 10).status == DivisionPointStatus::NonPrimitive);
  CHECK(division_point_check(*lt, *T, T->omega(2), 1, 10).status == DivisionPointStatus::Fail);
  CHECK(division_point_check(*lt, *T, LocalElem::exact_zero(T->ring()), 1, 10).status ==
        DivisionPointStatus::NonPrimitive);
  CHECK_THROWS_AS(division_point_check(*lt, *T, T->omega(1), 1, 1000), Error);
}

TEST_CASE("Galois conjugation") {
  auto C = make_context(3, 1, std::nullopt, 60);
  auto lt = LubinTate::make(C, fixtures::ints_poly(*C, {0, 3, 3, 1}), C->pi(), 80, 4);
  auto T = Tower::build(C, fixtures::exact_ints(*C, {0, 3, 3, 1}), 2);
  const LocalElem& x = T->omega(2);
  CHECK(galois_conjugate(*lt, C->one(), x).equals(x));
  const LocalElem u = C->from_int(2), v = C->from_int(4);
  const LocalElem a = galois_conjugate(*lt, u, galois_conjugate(*lt, v, x));
  const LocalElem b = galois_conjugate(*lt, u * v, x);
  CHECK((a - b).is_zero());
  CHECK((a - b).abs_prec() >= 60);
  // for division points the bracket and the field automorphism agree
  for (const auto& w : unit_representatives(*C, 2)) {
    const LocalElem d = galois_conjugate(*lt, w, x) - galois_embedding(*lt, *T, w, x);
    CHECK(d.is_zero());
  }
  CHECK(unit_representatives(*C, 2).size() == 6);
  CHECK(unit_representatives(*C, 1).size() == 2);
}

TEST_CASE("conjugate sum over the full group at level one") {
  for (int p : {3, 5}) {
    auto C = make_context(p, 1, std::nullopt, 40);
    auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 60, 4);
    auto T = Tower::build(C, canonical(*C, int_coeff(*C, p)), 1);
    // w_1 and a second division point P'(w_1)-twisted by a unit
    for (const LocalElem& x : {T->omega(1), galois_conjugate(*lt, C->from_int(p + 1), T->omega(1))}) {
      const LocalElem s = conjugate_sum(*lt, unit_representatives(*C, 1), x);
      CHECK((s - LocalElem::embed(trace_to_K(*T, x), T->ring())).is_zero());
    }
  }
}

TEST_CASE("boundary values form coherent roots") {
  SUBCASE("p = 3, n = 2") {
    auto C = make_context(3, 1, std::nullopt, 160);
    auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 300, 4);
    auto T = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 2);
    Prop2Report r = prop2_check(*lt, *T, 300, 10);
    CHECK(r.hypothesis);
    CHECK(r.pass);
    for (auto& lv : r.levels) {
      CHECK(lv.division.status == DivisionPointStatus::Primitive);
      CHECK(lv.division.prev_vp == Rational(1, 2));
    }
  }
  SUBCASE("multiplicative group gives roots of unity") {
    auto C = make_context(5, 1, std::nullopt, 80);
    auto lt = LubinTate::make(C, fixtures::multiplicative_poly(*C), C->pi(), 120, 4);
    auto T = Tower::build(C, canonical(*C, int_coeff(*C, 5)), 1);
    const BoundaryPoint s = boundary_point(*lt, *T, 1, 120, C->one());
    const LocalElem zeta = s.value + LocalElem::one(T->ring());
    CHECK((zeta.pow(5) - LocalElem::one(T->ring())).is_zero());
    CHECK_FALSE((zeta - LocalElem::one(T->ring())).is_zero());
    CHECK(division_point_check(*lt, *T, s.value, 1, 10).status == DivisionPointStatus::Primitive);
  }
  SUBCASE("pi' = pi (1 + pi^{n+1})") {
    auto C = make_context(3, 1, std::nullopt, 60);
    auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 150, 4);
    auto T = Tower::build(C, canonical(*C, int_coeff(*C, 3 + 27)), 1);
    Prop2Report r = prop2_check(*lt, *T, 150, 10);
    CHECK(r.hypothesis);
    CHECK(r.pass);
  }
}

TEST_CASE("Galois action on boundary values") {
  SUBCASE("level one") {
    auto C = make_context(5, 1, std::nullopt, 60);
    auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 150, 8);
    auto T = Tower::build(C, canonical(*C, int_coeff(*C, 5)), 1);
    Prop3Report r = prop3_check(*lt, *T, 150, 10);
    CHECK(r.cases.size() == 4);
    CHECK(r.pass);
  }
  SUBCASE("identity digits at level two") {
    auto C = make_context(3, 1, std::nullopt, 160);
    auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 300, 4);
    auto T = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 2);
    const BoundaryPoint s = boundary_point(*lt, *T, 2, 300, C->one());
    Prop3Case pc = prop3_identity(*lt, *T, s.value, {C->one(), C->zero()}, 300, 8);
    CHECK(pc.pass);
  }
}

TEST_CASE("traces to the degree-q subfield") {
  auto C = make_context(3, 1, std::nullopt, 60);
  auto lt = LubinTate::make(C, fixtures::ints_poly(*C, {0, 3, 3, 1}), C->pi(), 80, 4);
  auto T = Tower::build(C, fixtures::exact_ints(*C, {0, 3, 3, 1}), 2);
  CHECK(trace_to_M(*lt, *lt, *T, LocalElem::exact_zero(T->ring()), 10).is_zero());
  // transitivity on random elements
  std::mt19937_64 rng(9);
  for (int it = 0; it < 5; ++it) {
    const LocalElem x = random_tower_elem(*T, rng);
    const LocalElem y = trace_to_M_embedding(*lt, *T, x);
    const LocalElem d = trace_M_to_K(*lt, *T, y) - LocalElem::embed(trace_to_K(*T, x), T->ring());
    CHECK(d.is_zero());
    // limited by the bracket truncation: (D + 1) v(w_2)
    CHECK(d.abs_prec() >= 81);
  }
  // the bracket route applies to division points only
  CHECK(trace_to_M(*lt, *lt, *T, T->omega(2), 10).is_zero() == false);
  CHECK_THROWS_AS(trace_to_M(*lt, *lt, *T, LocalElem::embed(C->from_int(1), T->ring()) + T->omega(2), 10), Error);
  // w_2 generates: its M-trace is a uniformizer of M
  const LocalElem b = trace_to_M(*lt, *lt, *T, T->omega(2), 10);
  CHECK(b.valuation() == 2);
}

TEST_CASE("trace and lattice check hypotheses") {
  auto C = make_context(3, 1, std::nullopt, 40);
  auto lt = LubinTate::make(C, canonical_local(*C), C->pi(), 60, 4);
  auto T = Tower::build(C, canonical(*C, int_coeff(*C, 3)), 2);
  try {
    thm4_check(*lt, *lt, *T, 60, 10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
}

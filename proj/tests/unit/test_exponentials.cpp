#include <doctest.h>

#include <random>

#include "ltlab/exponentials/exponentials.hpp"
#include "ltlab/witt/witt.hpp"
#include "oracle/number_field.hpp"
#include "oracle/pulita.hpp"
#include "oracle/rational_series.hpp"
#include "support/fixtures.hpp"

using namespace ltlab;
using namespace fixtures;

namespace {

WittVector<LocalElem> random_witt(const WittParams& W, const LocalRing& R, std::size_t len, std::mt19937_64& rng) {
  std::vector<LocalElem> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(LocalElem::from_int(R, static_cast<long>(rng() % 200) - 100));
  return WittVector<LocalElem>(W, c);
}

}  // namespace

TEST_CASE("E_P for the multiplicative group is the Artin-Hasse exponential") {
  auto C = make_context(3, 1, std::nullopt, 40);
  const int D = 40;
  auto lt = LubinTate::make(C, multiplicative_poly(*C), C->pi(), D, 4);
  PowerSeries E = e_p(*lt, D);
  oracle::QSeries ah = oracle::artin_hasse(3, D);
  ah[0] -= 1;
  CHECK(E.equals(oracle::to_series(C->ring(), ah)));
  CHECK(E[1].equals(C->one()));
}

TEST_CASE("E_P is integral") {
  // the exponential's coefficients reach valuation -(D-1)/(q-1), so N > D/2
  auto C = make_context(3, 1, std::nullopt, 80);
  auto lt = LubinTate::make(C, canonical_poly(*C), C->pi(), 100, 4);
  PowerSeries E = e_p(*lt, 100);
  CHECK(E.integral_determinate());
  CHECK(E[1].equals(C->one()));
  int indeterminate = 0;
  for (int k = 1; k <= 100; ++k)
    if (E[k].abs_prec() < 20) ++indeterminate;
  CHECK(indeterminate == 0);
}

TEST_CASE("generalized Artin-Hasse exponential by two routes") {
  auto C = make_context(3, 1, std::nullopt, 40);
  const int D = 27;
  const WittParams W(C->pi(), C->q());
  auto lt = LubinTate::make(C, ints_poly(*C, {0, 3, 3, 1}), C->pi(), D, D);
  SUBCASE("Teichmuller one and zero") {
    auto one = WittVector<LocalElem>::teichmuller(W, C->one(), 4);
    CHECK(e_p_lambda(*lt, one, D).equals(e_p(*lt, D)));
    auto zero = WittVector<LocalElem>::teichmuller(W, C->zero(), 4);
    PowerSeries z = e_p_lambda(*lt, zero, D);
    for (int k = 0; k <= z.D(); ++k) CHECK(z[k].is_zero());
  }
  SUBCASE("random vectors over O_K") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 5; ++it) {
      auto lam = random_witt(W, C->ring(), 4, rng);
      CHECK(compare_series(e_p_lambda_exp(*lt, lam, D), e_p_lambda_fold(*lt, lam, D)).agree);
    }
  }
  SUBCASE("vectors over the tower") {
    auto T = Tower::build(C, exact_ints(*C, {0, 3, 3, 1}), 2);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 3; ++it) {
      std::vector<LocalElem> c;
      for (int i = 0; i < 4; ++i) {
        std::vector<LocalElem> cs;
        for (int j = 0; j < T->degree(); ++j) cs.push_back(C->from_int(static_cast<long>(rng() % 50) - 25));
        c.push_back(LocalElem::from_coeffs(T->ring(), cs));
      }
      WittVector<LocalElem> lam(W, c);
      CHECK(compare_series(e_p_lambda_exp(*lt, lam, D), e_p_lambda_fold(*lt, lam, D)).agree);
    }
    // S_{Q,w_n}(X) gives E^Q_{P,n}
    for (int n = 1; n <= 2; ++n) {
      const PowerSeries Qs = PowerSeries::from_poly(T->Q_poly(), 3);
      auto s = sPa(W, PowerSeries::from_poly(ints_poly(*C, {0, 1}), 1), Qs, T->omega(n), 4);
      CHECK(compare_series(e_p_lambda(*lt, s, D), e_pmq(*lt, *T, n, D)).agree);
    }
  }
}

TEST_CASE("main series reduces to Dwork and Pulita exponentials") {
  auto C = make_context(3, 1, std::nullopt, 60);
  const int D = 100;
  auto lt = LubinTate::make(C, multiplicative_poly(*C), C->pi(), D, 4);
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    auto T = Tower::build(C, exact_ints(*C, {0, 3, 0, 1}), n);
    CurlyE ce = curly_e(*lt, *T, n, D);
    auto ref = oracle::pulita_oracle(3, n, D);
    PowerSeries want(T->ring(), D);
    for (int k = 1; k <= D; ++k) want[k] = oracle::tower_elem(*C, *T, ref[static_cast<std::size_t>(k)]);
    want[0] = LocalElem::exact_zero(T->ring());
    SeriesComparison cmp = compare_series(ce.series, want);
    CHECK(cmp.agree);
    // agreement in pi-digits of K
    CHECK(cmp.min_prec / T->degree() >= 15);
    CHECK(ce.integrality.pass);
    CHECK(ce.congruence.pass);
    CHECK(ce.congruence.indeterminate == 0);
  }
}

TEST_CASE("main series at level one is exp(w_1 (X - X^q))") {
  auto C = make_context(3, 1, std::nullopt, 40);
  const int D = 40;
  auto lt = LubinTate::make(C, canonical_poly(*C), C->pi(), D, 4);
  auto T = Tower::build(C, exact_of(*C, canonical_poly(*C)), 1);
  PowerSeries arg(T->ring(), D);
  arg[1] = T->omega(1);
  arg[3] = -T->omega(1);
  arg.set_polynomial(true);
  CHECK(compare_series(curly_e(*lt, *T, 1, D).series, compose(lt->exp(), arg)).agree);
}

TEST_CASE("main series certificates over a case matrix") {
  struct Case {
    int p, f;
    std::optional<EisensteinSpec> eis;
    int n;
  };
  std::mt19937_64 rng(7);
  for (const Case& cs : {Case{2, 1, std::nullopt, 2}, Case{3, 1, std::nullopt, 2}, Case{5, 1, std::nullopt, 1},
                         Case{3, 2, std::nullopt, 1}, Case{3, 1, EisensteinSpec{{-3}, {0}, {1}}, 2}}) {
    CAPTURE(cs.p);
    CAPTURE(cs.f);
    CAPTURE(cs.n);
    auto C = make_context(cs.p, cs.f, cs.eis, 50);
    const int D = 40;
    // P = X^q + pi a X^2 + pi X, Q canonical with pi' = pi (1 + pi^{n+1})
    Poly P = canonical_poly(*C);
    if (C->q() > 2) P[2] = C->pi() * C->from_int(static_cast<long>(rng() % 3));
    auto lt = LubinTate::make(C, P, C->pi(), D, 4);
    const ExactPoly Qc = exact_of(*C, canonical_poly(*C));
    ExactPoly::Coeff pip = ExactPoly::coords_of(C->pi() * (C->one() + C->pi().pow(static_cast<std::uint64_t>(cs.n + 1))));
    std::vector<ExactPoly::Coeff> qc = Qc.coeffs();
    qc[1] = pip;
    for (const ExactPoly& Q : {Qc, ExactPoly::from_coords(C->ring(), qc)}) {
      auto T = Tower::build(C, Q, cs.n);
      CurlyE ce = curly_e(*lt, *T, cs.n, D, false);
      CHECK(ce.integrality.pass);
      CHECK(ce.congruence.pass);
      CHECK(ce.integrality.indeterminate == 0);
    }
  }
}

TEST_CASE("decomposition identities") {
  auto C = make_context(3, 1, std::nullopt, 60);
  const int D = 30;
  const WittParams W(C->pi(), C->q());
  auto lt = LubinTate::make(C, ints_poly(*C, {0, 3, 3, 1}), C->pi(), D, D);
  auto T = Tower::build(C, exact_ints(*C, {0, 3, 3, 1}), 2);
  const LocalElem one = LocalElem::one(T->ring());
  auto id = WittVector<LocalElem>::scalar(W, C->one(), one, 4);
  CHECK(decompose_check(*lt, *T, 2, id, D).agree);
  CHECK(decompose_check(*lt, *T, 2, id.verschiebung().truncate(4), D).agree);
  std::mt19937_64 rng(3);
  CHECK(decompose_check(*lt, *T, 1, random_witt(W, T->ring(), 4, rng), D).agree);
  SeriesComparison thm1 = main_series_decomposition(*lt, *T, 1, D);
  CHECK(thm1.agree);
}

TEST_CASE("over-convergence profiles") {
  auto C = make_context(3, 1, std::nullopt, 40);
  const LocalRing& R = C->ring();
  PowerSeries poly = PowerSeries::from_poly(ints_poly(*C, {0, 1, 3, 1}), 20);
  auto pr = overconvergence_profile(poly);
  CHECK(pr.polynomial);
  CHECK(pr.growing);
  CHECK(pr.tail_min[4] >= kInfPrec);
  PowerSeries geo(R, 40);
  for (int k = 1; k <= 40; ++k) geo[k] = C->one();
  auto pg = overconvergence_profile(geo);
  CHECK_FALSE(pg.growing);
  CHECK(pg.tail_min[20] == 0);
  CHECK(pg.verdict == "not over-convergent");
  // main series at level 2 with pi = pi'
  const int D = 120;
  auto C80 = make_context(3, 1, std::nullopt, 80);
  auto lt = LubinTate::make(C80, canonical_poly(*C80), C80->pi(), D, 4);
  auto T = Tower::build(C80, exact_of(*C80, canonical_poly(*C80)), 2);
  auto pe = overconvergence_profile(curly_e(*lt, *T, 2, D).series);
  CHECK(pe.growing);
}

#pragma once

// Polynomials and towers shared by the unit tests.

#include <gmpxx.h>

#include "ltlab/formal_groups/lubin_tate.hpp"
#include "ltlab/padic/context.hpp"
#include "ltlab/padic/exact_poly.hpp"
#include "ltlab/tower/tower.hpp"

namespace fixtures {

using namespace ltlab;

// X^q + pi X
inline Poly canonical_poly(const Context& C) {
  Poly P(C.q() + 1, C.zero());
  P[1] = C.pi();
  P[C.q()] = C.one();
  return P;
}

// (1 + X)^p - 1
inline Poly multiplicative_poly(const Context& C) {
  Poly P(C.p() + 1, C.zero());
  mpz_class b;
  for (unsigned long k = 1; k <= static_cast<unsigned long>(C.p()); ++k) {
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(C.p()), k);
    P[k] = LocalElem::from_int(C.ring(), b);
  }
  return P;
}

// exact polynomial with the same coefficients as P (small nonnegative digits)
inline ExactPoly exact_of(const Context& C, const Poly& P) {
  std::vector<ExactPoly::Coeff> c;
  for (const auto& a : P) c.push_back(ExactPoly::coords_of(a));
  return ExactPoly::from_coords(C.ring(), c);
}

inline ExactPoly exact_ints(const Context& C, const std::vector<long>& c) { return ExactPoly::from_ints(C.ring(), c); }

inline Poly ints_poly(const Context& C, const std::vector<long>& c) { return poly_from_ints(C.ring(), c); }

}  // namespace fixtures

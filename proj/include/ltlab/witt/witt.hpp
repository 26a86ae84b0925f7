#pragma once

#include <vector>

#include "ltlab/padic/context.hpp"
#include "ltlab/witt/witt_vector.hpp"

namespace ltlab {

// Universal polynomials of W_{O_K,pi} up to index n.  S, P, I live in
// variables X_0..X_n, Y_0..Y_n (I and C only use the X block); F_i uses
// X_0..X_{i+1}.
struct StructuralPolys {
  int n = 0;
  std::vector<MultiPoly> S, P, I, C, F;
};
StructuralPolys structural_polys(const WittParams& W, const LocalRing& R, int n,
                                 const std::optional<LocalElem>& x = std::nullopt);
std::vector<std::string> structural_var_names(int n);

// W_m(F_p) built from the structural polynomials reduced mod p is isomorphic
// to Z/p^m; exhaustive for small p^m.  Requires K = Q_p with pi = p.
bool classical_oracle(const Context& ctx, int m);

// Witt vector over O[[X]] with ghost <h, h o P, h o P o P, ...>.
WittVector<PowerSeries> sP(const WittParams& W, const PowerSeries& h, const PowerSeries& P, std::size_t len);
// Specialization at a (v(a) > 0): ghost <h(a), h(P(a)), ...>.
WittVector<LocalElem> sPa(const WittParams& W, const PowerSeries& h, const PowerSeries& P, const LocalElem& a,
                          std::size_t len);

struct KeyCriterion {
  int r_from_h = -1;      // v(h(0)) / v(pi), -1 for h(0) = 0
  int r_from_alpha = -1;  // first component of valuation 0, -1 if none in range
  bool consistent = false;
};
// Compares v(h(0)) = r v(pi) with the component valuations of S_{P,a}(h).
// Throws IndeterminateValuation when a needed valuation is not determined.
KeyCriterion key_valuation_criterion(const WittParams& W, const PowerSeries& h, const PowerSeries& P,
                                     const LocalElem& a, std::size_t len);

}  // namespace ltlab

#pragma once

#include <memory>
#include <vector>

#include "ltlab/padic/context.hpp"
#include "ltlab/padic/exact_poly.hpp"
#include "ltlab/rational.hpp"
#include "ltlab/tower/linalg.hpp"

namespace ltlab {

// K_{pi',n} = K(w_n) with w_n a root of f_n = Q^{(n)} / Q^{(n-1)}.
class Tower {
 public:
  // Throws HypothesisViolated (Q not Lubin-Tate), NonzeroRemainder, NotEisenstein.
  static std::shared_ptr<const Tower> build(ContextPtr ctx, const ExactPoly& Q, int n);

  const Context& ctx() const { return *ctx_; }
  ContextPtr ctx_ptr() const { return ctx_; }
  const ExactPoly& Q() const { return Q_; }
  const Poly& Q_poly() const { return Qp_; }
  const LocalElem& pi_prime() const { return Qp_[1]; }
  int n() const { return n_; }
  int degree() const { return d_; }
  const ExactPoly& modulus() const { return mod_; }
  const LocalRing& ring() const { return *L_; }
  std::shared_ptr<const LocalRing> ring_shared() const { return L_; }
  // w_i for 0 <= i <= n (w_0 = 0)
  const LocalElem& omega(int i) const { return omega_[static_cast<std::size_t>(i)]; }
  // Tr(w^k) for 0 <= k < d from Newton's identities
  const std::vector<LocalElem>& power_traces() const { return ptr_; }

 private:
  Tower() = default;
  ContextPtr ctx_;
  ExactPoly Q_, mod_;
  Poly Qp_;
  int n_ = 0, d_ = 0;
  std::shared_ptr<const LocalRing> L_;
  std::vector<LocalElem> omega_, ptr_;
};

using TowerPtr = std::shared_ptr<const Tower>;

// v_p of a tower element, from its flat representation
Rational tower_valuation(const LocalElem& x);
// v_p from v_K(det M_x) / d
Rational tower_valuation_det(const Tower& T, const LocalElem& x);
// multiplication-by-x matrix in the basis 1, w, ..., w^{d-1}
Matrix mult_matrix(const Tower& T, const LocalElem& x);
// trace to K via power sums, and via the matrix
LocalElem trace_to_K(const Tower& T, const LocalElem& x);
LocalElem trace_matrix(const Tower& T, const LocalElem& x);
// the K-embedding sending w_n to y (a root of the modulus), applied to x
LocalElem apply_embedding(const Tower& T, const LocalElem& x, const LocalElem& y);

}  // namespace ltlab

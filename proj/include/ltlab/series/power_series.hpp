#pragma once

#include <optional>
#include <vector>

#include "ltlab/padic/local_ring.hpp"
#include "ltlab/padic/polynomial.hpp"

namespace ltlab {

// Truncated power series c_0 + ... + c_D X^D (mod X^{D+1}).  A series flagged
// as a polynomial has exactly zero coefficients beyond D.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(const LocalRing& R, int D);

  static PowerSeries from_coeffs(std::vector<LocalElem> c, bool polynomial = false);
  static PowerSeries from_poly(const Poly& p, int D);
  static PowerSeries X(const LocalRing& R, int D);
  static PowerSeries constant(const LocalElem& c, int D);
  static PowerSeries monomial(const LocalElem& c, int k, int D);

  int D() const { return static_cast<int>(c_.size()) - 1; }
  const LocalRing& ring() const { return *R_; }
  const LocalRing* ring_ptr() const { return R_; }
  bool valid() const { return R_ != nullptr; }

  const LocalElem& operator[](int k) const { return c_[k]; }
  LocalElem& operator[](int k) { return c_[k]; }
  const std::vector<LocalElem>& coeffs() const { return c_; }

  bool is_polynomial() const { return polynomial_; }
  void set_polynomial(bool v) { polynomial_ = v; }
  // lower bound for the valuation of every coefficient, including the
  // unknown tail; set by constructors that know it
  std::optional<int> valuation_floor() const { return floor_; }
  void set_valuation_floor(std::optional<int> m) { floor_ = m; }

  // lowest index with a coefficient that is not exactly zero (D+1 if none)
  int order() const;
  int nonzero_count() const;
  // true iff every determinate coefficient has valuation >= 0
  bool integral_determinate() const;

  PowerSeries truncate(int D) const;
  PowerSeries derivative() const;
  PowerSeries embed(const LocalRing& ext) const;
  PowerSeries operator-() const;
  bool equals(const PowerSeries& o) const;

 private:
  const LocalRing* R_ = nullptr;
  std::vector<LocalElem> c_;
  bool polynomial_ = false;
  std::optional<int> floor_;
};

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
PowerSeries operator*(const LocalElem& a, const PowerSeries& f);
// f^n truncated
PowerSeries pow(const PowerSeries& f, unsigned n);
// f(X^k)
PowerSeries substitute_power(const PowerSeries& f, int k, int D);

// f o g, requires g(0) stored as an exact zero.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

// f o (sum_r gamma_r * B_r) where the B_r are sparse series over the base
// ring of the gammas (or the same ring).  Used for arguments like
// sum_i w_{n-i} (X^{q^i} - X^{q^{i+1}}) / pi^i.
struct FactoredTerm {
  LocalElem gamma;
  PowerSeries B;
};
PowerSeries compose_factored(const PowerSeries& f, const std::vector<FactoredTerm>& arg, int D);

PowerSeries reversion(const PowerSeries& f);
PowerSeries reciprocal(const PowerSeries& f);

struct InteriorEval {
  LocalElem value;
  int tail_bound;  // in units of the value's ring; kInfPrec for polynomials
};
InteriorEval eval_interior(const PowerSeries& f, const LocalElem& x, std::optional<int> floor = std::nullopt);

struct CoeffValuation {
  int v = kInfPrec;  // valuation, or abs precision when indeterminate
  bool determinate = true;
  bool exact_zero = false;
};
std::vector<CoeffValuation> valuation_profile(const PowerSeries& f);

struct BoundaryEval {
  LocalElem value;
  int achieved_prec;
  std::vector<CoeffValuation> profile;
};
BoundaryEval eval_boundary(const PowerSeries& f, const LocalElem& x, int window);

}  // namespace ltlab

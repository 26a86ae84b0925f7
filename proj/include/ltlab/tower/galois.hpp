#pragma once

#include <string>
#include <vector>

#include "ltlab/formal_groups/lubin_tate.hpp"
#include "ltlab/rational.hpp"
#include "ltlab/tower/tower.hpp"

namespace ltlab {

// Precision thresholds are counted in pi-digits of K.
int digits_to_units(const Tower& T, int digits);
int units_to_digits(const Tower& T, int units);

enum class DivisionPointStatus { Primitive, NonPrimitive, Fail };
const char* status_name(DivisionPointStatus s);

struct DivisionPointReport {
  DivisionPointStatus status = DivisionPointStatus::Fail;
  int top_digits = 0;          // lower bound for v of P^(m)(x), pi-digits
  bool prev_determinate = false;
  Rational prev_vp;            // v_p of P^(m-1)(x) when determinate
};
// Iterates P m times on x.  Primitive iff P^(m)(x) vanishes to threshold
// digits and P^(m-1)(x) is distinguishable from 0.  Throws ThresholdTooHigh
// when x carries too little precision to decide.
DivisionPointReport division_point_check(const LubinTate& lt, const Tower& T, const LocalElem& x, int m,
                                         int threshold_digits);

// [u]_P(x) for a unit u of O_K and v(x) > 0
LocalElem galois_conjugate(const LubinTate& lt, const LocalElem& u, const LocalElem& x);
// image of x under the automorphism sending w_n to [u]_Q(w_n)
LocalElem galois_embedding(const LubinTate& ltQ, const Tower& T, const LocalElem& u, const LocalElem& x);

// Representatives sum_{i<n} z_i pi^i of (O_K / pi^n)^x with z_0 in mu_{q-1}
// and z_i in mu_{q-1} or 0.
std::vector<LocalElem> unit_representatives(const Context& C, int n);
// the same as digit vectors (z_0, ..., z_{n-1})
std::vector<std::vector<LocalElem>> unit_digit_vectors(const Context& C, int n);

// s_m = curly_e(m) at X = 1, truncated at degree D
struct BoundaryPoint {
  LocalElem value;
  int digits = 0;  // precision claimed by the boundary evaluation
};
BoundaryPoint boundary_point(const LubinTate& lt, const Tower& T, int m, int D, const LocalElem& x);

bool pi_congruent(const LocalElem& pi, const LocalElem& pi_prime, int k);

struct Prop2Level {
  int m = 0;
  int boundary_digits = 0;
  DivisionPointReport division;
  bool congruence = false;  // s_m = w_m mod w_m^2
  bool coherence = false;   // P(s_m) = s_{m-1}
  int coherence_digits = 0;
};
struct Prop2Report {
  bool hypothesis = false;  // pi = pi' mod pi^{n+1}
  std::vector<Prop2Level> levels;
  bool pass = false;
};
Prop2Report prop2_check(const LubinTate& lt, const Tower& T, int D, int threshold_digits);

struct Prop3Case {
  std::vector<LocalElem> z;
  int digits = 0;  // precision of the agreement
  bool pass = false;
};
struct Prop3Report {
  bool hypothesis = false;
  std::vector<Prop3Case> cases;
  bool pass = false;
};
// [sum z_i pi^i]_P(s_n) = curly_e(n)(z_0) +_F ... +_F curly_e(1)(z_{n-1})
Prop3Case prop3_identity(const LubinTate& lt, const Tower& T, const LocalElem& s_n, const std::vector<LocalElem>& z,
                         int D, int threshold_digits);
Prop3Report prop3_check(const LubinTate& lt, const Tower& T, int D, int threshold_digits);

// Sum over conjugates [u]_P(x) for the given units.
LocalElem conjugate_sum(const LubinTate& lt, const std::vector<LocalElem>& units, const LocalElem& x);
// sum_{z in mu_{q-1}} [z]_P(x) on a level-2 tower; the result is checked to be
// fixed by every w_2 -> [z]_Q(w_2), else InvarianceViolation.
LocalElem trace_to_M(const LubinTate& lt, const LubinTate& ltQ, const Tower& T, const LocalElem& x,
                     int threshold_digits);

// sum_{z in mu_{q-1}} sigma_z(x) through the embeddings w_2 -> [z]_Q(w_2);
// valid for every x, not only division points
LocalElem trace_to_M_embedding(const LubinTate& ltQ, const Tower& T, const LocalElem& x);
// Tr_{M/K} of y in M as sum over sigma_{1+z pi}, z in {0} and mu_{q-1}
LocalElem trace_M_to_K(const LubinTate& ltQ, const Tower& T, const LocalElem& y);

struct Thm4Candidate {
  std::string name;
  Rational vp;
  bool vp_ok = false;
  bool solvable = false;   // all conjugates lie in the lattice span
  int det_valuation = -1;  // v_K of the coordinate determinant
  bool unit_det = false;
};
struct Thm4Report {
  DivisionPointReport division;
  int boundary_digits = 0;
  LocalElem trace;             // Tr_{L/K}(s_2)
  LocalElem claimed_trace;     // (q - 1) a_{q-1}
  bool trace_ok = false;
  bool trace_negated_ok = false;  // Tr = -(q - 1) a_{q-1}
  int trace_digits = 0;
  int beta_valuation = -1;     // in units of the level-2 field
  bool beta_ok = false;
  bool conjugates_consistent = false;  // two routes to sigma(beta)
  std::vector<std::string> representatives;
  std::vector<Thm4Candidate> candidates;
  bool pass = false;
};
// Throws HypothesisViolated unless v(a_{q-1}) = v(pi) and pi = pi' mod pi^3.
Thm4Report thm4_check(const LubinTate& lt, const LubinTate& ltQ, const Tower& T, int D, int threshold_digits);

}  // namespace ltlab

#pragma once

// Flat representation of finite extensions of Q_p.
//
// A ring is O_K or an Eisenstein extension O_L = O_K[w]/(m).  Elements are
// stored as p^{-s} * sum_k z_k b_k over a fixed Z_p-basis b_k (products of
// t^l, u^i, w^j) together with an absolute precision A and the valuation v,
// both counted in units of the ring's own uniformizer.

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "ltlab/errors.hpp"
#include "ltlab/padic/residue_field.hpp"
#include "ltlab/rational.hpp"

namespace ltlab {

inline constexpr int kInfPrec = 1 << 28;

using Digits = boost::container::small_vector<mpz_class, 2>;

// One stage of a tower of monic extensions over Z.  sub == nullptr means the
// coefficients are plain integers.
struct RawLevel {
  int deg = 1;
  int sub_dim = 1;
  std::shared_ptr<const RawLevel> sub;
  std::vector<mpz_class> modulus;  // deg * sub_dim entries, leading 1 implicit
  int dim() const { return deg * sub_dim; }
};

// out = a * b in the level, reduced mod *mod when mod != nullptr.
// L == nullptr multiplies plain integers.  out must not alias a or b.
void raw_mul(const RawLevel* L, const mpz_class* a, const mpz_class* b, mpz_class* out, const mpz_class* mod);

class LocalElem;

class LocalRing {
 public:
  // O_K with residue degree f (modulus g, f+1 coefficients low..high, monic)
  // and ramification e (Eisenstein modulus flattened as e blocks of f
  // integers, monic leading term omitted).  N is the relative precision cap
  // in p-adic digits.
  static std::shared_ptr<const LocalRing> make_base(int p, int f, std::vector<mpz_class> g, int e,
                                                    std::vector<mpz_class> eis, int N);
  // O_L = O_K[w]/(m), m monic Eisenstein of degree d with exact coefficients
  // (d blocks of base.dim() integers, leading term omitted).
  static std::shared_ptr<const LocalRing> make_extension(std::shared_ptr<const LocalRing> base,
                                                         std::vector<mpz_class> m, int d);

  int p() const { return p_; }
  int f() const { return f_; }
  // v(p) in uniformizer units: absolute ramification index.
  int ram() const { return ram_; }
  // degree over the base ring (1 for a base ring).
  int rel_degree() const { return d_; }
  int dim() const { return dim_; }
  int groups() const { return dim_ / f_; }
  int N() const { return N_; }
  int cap() const { return N_ * ram_; }
  const LocalRing* base() const { return base_.get(); }
  std::shared_ptr<const LocalRing> base_shared() const { return base_; }
  bool is_extension() const { return base_ != nullptr; }
  int weight(int group) const { return weight_[group]; }
  const RawLevel* level() const { return level_.get(); }
  const std::vector<mpz_class>& unram_modulus() const { return g_; }
  const std::vector<mpz_class>& eis_modulus() const { return eis_; }

  const mpz_class& ppow(int k) const;

  // raw multiplication of two full vectors
  void mul(const mpz_class* a, const mpz_class* b, mpz_class* out, const mpz_class* mod) const;
  // a in this ring, s in the base ring
  void mul_base_scalar(const mpz_class* a, const mpz_class* s, mpz_class* out, const mpz_class* mod) const;
  // multiply by the generator w of the top level (extension rings only)
  void mul_gen(const mpz_class* a, mpz_class* out, const mpz_class* mod) const;

  const ResidueField& residue_field() const { return fq_; }

  // (basis element of the group)^{-1}
  const LocalElem& group_inverse(int group) const;

  std::string describe() const;

 private:
  LocalRing() = default;
  void init_weights();

  int p_ = 2, f_ = 1, e_ = 1, d_ = 1, ram_ = 1, dim_ = 1, N_ = 20;
  std::vector<mpz_class> g_, eis_, ext_mod_;
  std::shared_ptr<const LocalRing> base_;
  std::shared_ptr<const RawLevel> level_;
  std::shared_ptr<const RawLevel> unram_level_;
  std::vector<int> weight_;
  ResidueField fq_;
  mutable std::deque<mpz_class> ppow_;
  mutable std::vector<std::unique_ptr<LocalElem>> ginv_;
};

class LocalElem {
 public:
  LocalElem() = default;

  static LocalElem exact_zero(const LocalRing& R);
  static LocalElem zero_at(const LocalRing& R, int abs_prec);
  static LocalElem one(const LocalRing& R) { return from_int(R, 1); }
  static LocalElem from_int(const LocalRing& R, const mpz_class& n);
  static LocalElem from_int(const LocalRing& R, long n) { return from_int(R, mpz_class(n)); }
  static LocalElem from_rational(const LocalRing& R, const mpq_class& x);
  // normalizes; abs_prec == kInfPrec is only legal for the zero vector
  static LocalElem from_digits(const LocalRing& R, Digits z, int shift, int abs_prec);
  // basis element b_k, exact up to the cap
  static LocalElem basis(const LocalRing& R, int k);
  // generator of the top level: w for an extension, u (or p when e = 1) otherwise
  static LocalElem gen(const LocalRing& R);
  static LocalElem embed(const LocalElem& x, const LocalRing& ext);
  static LocalElem from_coeffs(const LocalRing& ext, const std::vector<LocalElem>& cs);

  bool valid() const { return R_ != nullptr; }
  const LocalRing& ring() const { return *R_; }
  const LocalRing* ring_ptr() const { return R_; }

  bool is_exact_zero() const { return A_ >= kInfPrec; }
  bool is_zero() const { return v_ >= A_; }
  int valuation() const { return v_; }
  int abs_prec() const { return A_; }
  int rel_prec() const { return is_zero() ? 0 : A_ - v_; }
  Rational vp() const { return Rational(v_, R_->ram()); }
  bool is_unit() const { return !is_zero() && v_ == 0; }
  const Digits& digits() const { return z_; }
  int shift() const { return s_; }

  LocalElem lift_exact() const;
  LocalElem with_abs_prec(int A) const;
  LocalElem coeff(int j) const;
  std::vector<LocalElem> coeffs() const;
  std::vector<int> residue() const;

  LocalElem operator-() const;
  LocalElem inverse() const;
  LocalElem pow(std::uint64_t n) const;
  LocalElem mul_gen_power(int j) const;
  // exact multiplication by p^k (k may be negative)
  LocalElem mul_p_power(int k) const;

  friend LocalElem operator+(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator-(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator*(const LocalElem& a, const LocalElem& b);
  friend LocalElem operator/(const LocalElem& a, const LocalElem& b);
  LocalElem& operator+=(const LocalElem& b) { return *this = *this + b; }
  LocalElem& operator-=(const LocalElem& b) { return *this = *this - b; }
  LocalElem& operator*=(const LocalElem& b) { return *this = *this * b; }

  // difference indistinguishable from zero at the joint precision
  bool equals(const LocalElem& o) const;
  // same canonical representation (digits, shift, precision)
  bool identical(const LocalElem& o) const;
  std::string str() const;

 private:
  friend class LocalRing;
  void finish();
  static LocalElem unit_inverse(const LocalElem& y);

  const LocalRing* R_ = nullptr;
  Digits z_;
  int s_ = 0;
  int A_ = kInfPrec;
  int v_ = kInfPrec;
};

// Ring of a + b: equal rings, or the extension when one is the other's base.
const LocalRing& common_ring(const LocalElem& a, const LocalElem& b);

// p-adic valuation of z capped at bound (bound returned for z == 0).
int vp_bounded(const mpz_class& z, int p, int bound);

}  // namespace ltlab

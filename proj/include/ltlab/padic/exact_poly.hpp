#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ltlab/padic/polynomial.hpp"

namespace ltlab {

// Polynomial over O_K whose coefficients have exact integer coordinates in
// the flat basis of the ring.  Arithmetic is exact (no p-adic truncation).
class ExactPoly {
 public:
  using Coeff = std::vector<mpz_class>;  // R.dim() coordinates

  ExactPoly() = default;
  explicit ExactPoly(const LocalRing& R) : R_(&R) {}
  // integer coefficients, low..high
  static ExactPoly from_ints(const LocalRing& R, const std::vector<long>& c);
  static ExactPoly from_coords(const LocalRing& R, std::vector<Coeff> c);
  // exact coordinates of an element with shift 0; throws if not integral
  static Coeff coords_of(const LocalElem& x);

  const LocalRing& ring() const { return *R_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Coeff& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  LocalElem coeff_elem(int i) const;
  Poly to_poly() const;

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }
  // f(g)
  friend ExactPoly compose(const ExactPoly& f, const ExactPoly& g);
  // division by a monic polynomial
  friend std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b);

  std::string str() const;

 private:
  void trim();
  Coeff zero() const { return Coeff(static_cast<std::size_t>(R_->dim()), 0); }
  const LocalRing* R_ = nullptr;
  std::vector<Coeff> c_;
};

}  // namespace ltlab

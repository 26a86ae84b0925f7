#pragma once

#include <cstdint>
#include <vector>

namespace ltlab {

// Polynomials over F_p as coefficient vectors (low..high), p small.
namespace fp_poly {

using Poly = std::vector<std::int64_t>;

void trim(Poly& a);
Poly mod(Poly a, const Poly& m, std::int64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p);
Poly powmod(Poly a, std::uint64_t e, const Poly& m, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
// Rabin's test; m need not be monic but must have nonzero leading coefficient mod p.
bool is_irreducible(const Poly& m, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

}  // namespace fp_poly

// F_q = F_p[t]/(g) with elements stored as f residues in [0, p).
class ResidueField {
 public:
  using Elem = std::vector<int>;

  ResidueField() = default;
  ResidueField(int p, std::vector<std::int64_t> g_monic);

  int p() const { return p_; }
  int f() const { return f_; }
  std::uint64_t q() const { return q_; }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  Elem from_int(std::int64_t n) const;
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(const Elem& a) const;
  // all q elements in a fixed order: index i <-> base-p digits of i
  std::vector<Elem> elements() const;
  Elem from_index(std::uint64_t i) const;

 private:
  int p_ = 2;
  int f_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::int64_t> g_;
};

}  // namespace ltlab

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltlab/padic/local_ring.hpp"
#include "ltlab/padic/residue_field.hpp"

namespace ltlab {

// Sparse polynomial over O_K in a fixed number of variables.  Terms whose
// coefficient is zero at its precision are dropped.
class MultiPoly {
 public:
  using Mono = std::vector<std::uint16_t>;

  MultiPoly() = default;
  MultiPoly(const LocalRing& R, int nvars);
  static MultiPoly var(const LocalRing& R, int nvars, int i);
  static MultiPoly constant(const LocalElem& c, int nvars);

  const LocalRing& ring() const { return *R_; }
  int nvars() const { return nvars_; }
  const std::map<Mono, LocalElem>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;
  // coefficient of a monomial (exact zero when absent)
  LocalElem coeff(const Mono& m) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const LocalElem& c, const MultiPoly& a);
  MultiPoly pow(std::uint64_t n) const;
  // coefficientwise multiplication by c, nullopt when a coefficient leaves O_K
  std::optional<MultiPoly> scale_integral(const LocalElem& c) const;
  bool equals(const MultiPoly& o) const;

  LocalElem eval(const std::vector<LocalElem>& x) const;
  // evaluation after reduction of the coefficients to the residue field
  ResidueField::Elem eval_residue(const std::vector<ResidueField::Elem>& x) const;

  // names[i] is used for variable i
  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Mono& m, const LocalElem& c);
  const LocalRing* R_ = nullptr;
  int nvars_ = 0;
  std::map<Mono, LocalElem> t_;
};

}  // namespace ltlab

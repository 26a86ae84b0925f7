#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ltlab/padic/local_ring.hpp"
#include "ltlab/padic/polynomial.hpp"
#include "ltlab/padic/residue_field.hpp"

namespace ltlab {

// Eisenstein modulus over Z_q: coefficients low..high, each a vector of f
// integers in the t-basis.
using EisensteinSpec = std::vector<std::vector<long>>;

class Context {
 public:
  int p() const { return p_; }
  int f() const { return f_; }
  int e() const { return e_; }
  int N() const { return N_; }
  std::uint64_t q() const { return q_; }
  const mpz_class& q_mpz() const { return qz_; }

  const LocalRing& ring() const { return *ring_; }
  std::shared_ptr<const LocalRing> ring_shared() const { return ring_; }
  const ResidueField& fq() const { return ring_->residue_field(); }

  LocalElem pi() const;
  LocalElem zero() const { return LocalElem::exact_zero(*ring_); }
  LocalElem one() const { return LocalElem::one(*ring_); }
  LocalElem from_int(long n) const { return LocalElem::from_int(*ring_, n); }
  LocalElem from_int(const mpz_class& n) const { return LocalElem::from_int(*ring_, n); }
  LocalElem from_rational(const mpq_class& x) const { return LocalElem::from_rational(*ring_, x); }
  // exact lift of a residue to Z_q (digits in [0, p))
  LocalElem lift_residue(const std::vector<int>& r) const;

  // Teichmuller representative of a residue class
  LocalElem teichmuller(const std::vector<int>& r) const;
  // Teichmuller representatives of F_q^x, in ResidueField::elements() order
  std::vector<LocalElem> roots_of_unity() const;

  const std::vector<long>& unram_modulus() const { return g_; }
  const EisensteinSpec& eisenstein_modulus() const { return eis_; }

  std::shared_ptr<const Context> with_precision(int N) const;

 private:
  friend std::shared_ptr<const Context> make_context(int, int, const std::optional<EisensteinSpec>&, int,
                                                     const std::optional<std::vector<long>>&);
  int p_ = 2, f_ = 1, e_ = 1, N_ = 20;
  std::uint64_t q_ = 2;
  mpz_class qz_ = 2;
  std::vector<long> g_;
  EisensteinSpec eis_;
  std::shared_ptr<const LocalRing> ring_;
};

using ContextPtr = std::shared_ptr<const Context>;

// Throws NotPrime, ReducibleModulus, NotEisenstein, ConfigError.
// With f > 1 and no modulus the lexicographically first monic irreducible
// polynomial over F_p is used.
ContextPtr make_context(int p, int f, const std::optional<EisensteinSpec>& eis, int N,
                        const std::optional<std::vector<long>>& unram_modulus = std::nullopt);

bool is_prime(long n);

// Root of g near x0 by Newton iteration.  Requires v(g(x0)) > 2 v(g'(x0)).
LocalElem hensel_lift(const Poly& g, const LocalElem& x0);

}  // namespace ltlab

#include "ltlab/padic/polynomial.hpp"

namespace ltlab {

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[i].is_exact_zero()) return i;
  return -1;
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back().is_exact_zero()) a.pop_back();
}

LocalElem poly_eval(const Poly& a, const LocalElem& x) {
  if (a.empty()) return LocalElem::exact_zero(x.ring());
  LocalElem acc = a.back();
  for (int i = static_cast<int>(a.size()) - 2; i >= 0; --i) acc = acc * x + a[i];
  if (acc.ring_ptr() != &x.ring() && x.ring().base() == acc.ring_ptr()) acc = LocalElem::embed(acc, x.ring());
  return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size())
      r[i] = a[i] + b[i];
    else
      r[i] = i < a.size() ? a[i] : b[i];
  }
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
  return poly_add(a, nb);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const LocalRing& R = common_ring(a[0], b[0]);
  Poly r(a.size() + b.size() - 1, LocalElem::exact_zero(R));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_exact_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly& a, const LocalElem& c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  poly_trim(r);
  return r;
}

Poly poly_derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * LocalElem::from_int(a[i].ring(), static_cast<long>(i));
  poly_trim(r);
  return r;
}

Poly poly_compose(const Poly& f, const Poly& g) {
  if (f.empty()) return {};
  Poly acc{f.back()};
  for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i) {
    acc = poly_mul(acc, g);
    if (acc.empty()) acc.push_back(f[i]);
    else acc[0] = acc[0] + f[i];
  }
  poly_trim(acc);
  return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  const int db = poly_degree(b);
  if (db < 0) fail(ErrorKind::DivisionByIndistinguishableZero, "division by the zero polynomial");
  if (!b[db].equals(LocalElem::one(b[db].ring())))
    fail(ErrorKind::RingMismatch, "poly_divmod expects a monic divisor");
  Poly r = a;
  poly_trim(r);
  const int da = poly_degree(r);
  if (da < db) return {{}, r};
  Poly q(da - db + 1, LocalElem::exact_zero(a[0].ring()));
  for (int k = da; k >= db; --k) {
    const LocalElem c = r[k];
    q[k - db] = c;
    if (c.is_exact_zero()) continue;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
    r[k] = LocalElem::exact_zero(r[k].ring());
  }
  r.resize(db);
  poly_trim(r);
  poly_trim(q);
  return {q, r};
}

Poly poly_from_ints(const LocalRing& R, const std::vector<long>& c) {
  Poly r;
  for (long x : c) r.push_back(LocalElem::from_int(R, x));
  poly_trim(r);
  return r;
}

}  // namespace ltlab

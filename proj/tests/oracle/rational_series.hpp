#pragma once

// Exact rational power series used as independent oracles in tests.

#include <vector>

#include <gmpxx.h>

#include "ltlab/series/power_series.hpp"

namespace oracle {

using QSeries = std::vector<mpq_class>;  // c_0..c_D

inline QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  QSeries r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline QSeries add(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QSeries scale(const QSeries& a, const mpq_class& c) {
  QSeries r = a;
  for (auto& x : r) x *= c;
  return r;
}

// exp(g) for g(0) = 0 via sum g^k / k!
inline QSeries exp_of(const QSeries& g) {
  const std::size_t n = g.size();
  QSeries r(n, 0), pk(n, 0);
  r[0] = 1;
  pk[0] = 1;
  mpq_class fact = 1;
  for (std::size_t k = 1; k < n; ++k) {
    pk = mul(pk, g);
    fact *= static_cast<unsigned long>(k);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (pk[i] == 0) continue;
      any = true;
      r[i] += pk[i] / fact;
    }
    if (!any) break;
  }
  return r;
}

// exp(X) - 1
inline QSeries expm1(int D) {
  QSeries r(D + 1, 0);
  mpq_class f = 1;
  for (int k = 1; k <= D; ++k) {
    f /= k;
    r[k] = f;
  }
  return r;
}

// log(1 + X)
inline QSeries log1p(int D) {
  QSeries r(D + 1, 0);
  for (int k = 1; k <= D; ++k) r[k] = mpq_class((k % 2) ? 1 : -1, k);
  return r;
}

// (1 + X)^a - 1 for an integer a (negative allowed)
inline QSeries binomial_minus_one(long a, int D) {
  QSeries r(D + 1, 0);
  mpq_class c = 1;
  for (int k = 1; k <= D; ++k) {
    c = c * mpq_class(a - (k - 1)) / k;
    r[k] = c;
  }
  return r;
}

// Artin-Hasse exponential exp(sum X^{p^i}/p^i)
inline QSeries artin_hasse(int p, int D) {
  QSeries g(D + 1, 0);
  long pk = 1;
  mpq_class den = 1;
  while (pk <= D) {
    g[pk] = 1 / den;
    pk *= p;
    den *= p;
  }
  return exp_of(g);
}

inline ltlab::PowerSeries to_series(const ltlab::LocalRing& R, const QSeries& a) {
  ltlab::PowerSeries s(R, static_cast<int>(a.size()) - 1);
  for (std::size_t i = 0; i < a.size(); ++i) s[static_cast<int>(i)] = ltlab::LocalElem::from_rational(R, a[i]);
  return s;
}

}  // namespace oracle

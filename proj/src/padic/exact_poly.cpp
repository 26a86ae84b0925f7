#include "ltlab/padic/exact_poly.hpp"

#include <sstream>

namespace ltlab {

namespace {

bool coeff_is_zero(const ExactPoly::Coeff& c) {
  for (auto& z : c)
    if (z != 0) return false;
  return true;
}

}  // namespace

ExactPoly ExactPoly::from_ints(const LocalRing& R, const std::vector<long>& c) {
  ExactPoly r(R);
  for (long x : c) {
    Coeff k = r.zero();
    k[0] = x;
    r.c_.push_back(std::move(k));
  }
  r.trim();
  return r;
}

ExactPoly ExactPoly::from_coords(const LocalRing& R, std::vector<Coeff> c) {
  ExactPoly r(R);
  for (auto& k : c) k.resize(static_cast<std::size_t>(R.dim()));
  r.c_ = std::move(c);
  r.trim();
  return r;
}

ExactPoly::Coeff ExactPoly::coords_of(const LocalElem& x) {
  Coeff c(static_cast<std::size_t>(x.ring().dim()), 0);
  if (x.is_zero()) return c;
  if (x.shift() != 0) fail(ErrorKind::IntegralityViolation, "exact coordinates need an element without denominator");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.digits()[i];
  return c;
}

void ExactPoly::trim() {
  while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
}

bool ExactPoly::is_monic() const {
  if (c_.empty()) return false;
  const Coeff& l = c_.back();
  if (l[0] != 1) return false;
  for (std::size_t i = 1; i < l.size(); ++i)
    if (l[i] != 0) return false;
  return true;
}

LocalElem ExactPoly::coeff_elem(int i) const {
  if (i < 0 || i > degree() || coeff_is_zero(c_[static_cast<std::size_t>(i)])) return LocalElem::exact_zero(*R_);
  const Coeff& c = c_[static_cast<std::size_t>(i)];
  return LocalElem::from_digits(*R_, Digits(c.begin(), c.end()), 0, kInfPrec);
}

Poly ExactPoly::to_poly() const {
  Poly p;
  for (int i = 0; i <= degree(); ++i) p.push_back(coeff_elem(i));
  return p;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r = a.c_.size() >= b.c_.size() ? a : b;
  const ExactPoly& s = a.c_.size() >= b.c_.size() ? b : a;
  for (std::size_t i = 0; i < s.c_.size(); ++i)
    for (std::size_t t = 0; t < s.c_[i].size(); ++t) r.c_[i][t] += s.c_[i][t];
  r.trim();
  return r;
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r = a;
  if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), r.zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    for (std::size_t t = 0; t < b.c_[i].size(); ++t) r.c_[i][t] -= b.c_[i][t];
  r.trim();
  return r;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly r(*a.R_);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, r.zero());
  ExactPoly::Coeff tmp = r.zero();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (coeff_is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (coeff_is_zero(b.c_[j])) continue;
      a.R_->mul(a.c_[i].data(), b.c_[j].data(), tmp.data(), nullptr);
      for (std::size_t t = 0; t < tmp.size(); ++t) r.c_[i + j][t] += tmp[t];
    }
  }
  r.trim();
  return r;
}

ExactPoly compose(const ExactPoly& f, const ExactPoly& g) {
  ExactPoly r(*f.R_);
  for (int i = f.degree(); i >= 0; --i) {
    r = r * g;
    ExactPoly c(*f.R_);
    c.c_.push_back(f.c_[static_cast<std::size_t>(i)]);
    c.trim();
    r = r + c;
  }
  return r;
}

std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b) {
  if (!b.is_monic()) fail(ErrorKind::ConfigError, "exact division needs a monic divisor");
  ExactPoly rem = a, quo(*a.R_);
  const int db = b.degree();
  if (rem.degree() < db) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(rem.degree() - db + 1), quo.zero());
  ExactPoly::Coeff tmp = quo.zero();
  for (int i = rem.degree(); i >= db; --i) {
    const ExactPoly::Coeff lead = rem.c_[static_cast<std::size_t>(i)];
    if (coeff_is_zero(lead)) continue;
    quo.c_[static_cast<std::size_t>(i - db)] = lead;
    for (int j = 0; j <= db; ++j) {
      if (coeff_is_zero(b.c_[static_cast<std::size_t>(j)])) continue;
      a.R_->mul(lead.data(), b.c_[static_cast<std::size_t>(j)].data(), tmp.data(), nullptr);
      auto& dst = rem.c_[static_cast<std::size_t>(i - db + j)];
      for (std::size_t t = 0; t < tmp.size(); ++t) dst[t] -= tmp[t];
    }
  }
  quo.trim();
  rem.trim();
  return {quo, rem};
}

std::string ExactPoly::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    if (c_[i].size() == 1) {
      os << c_[i][0].get_str();
      continue;
    }
    os << '(';
    for (std::size_t t = 0; t < c_[i].size(); ++t) os << (t ? " " : "") << c_[i][t].get_str();
    os << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace ltlab

#include "ltlab/witt/multi_poly.hpp"

#include <sstream>

namespace ltlab {

MultiPoly::MultiPoly(const LocalRing& R, int nvars) : R_(&R), nvars_(nvars) {}

MultiPoly MultiPoly::var(const LocalRing& R, int nvars, int i) {
  MultiPoly m(R, nvars);
  Mono e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  m.t_.emplace(std::move(e), LocalElem::one(R));
  return m;
}

MultiPoly MultiPoly::constant(const LocalElem& c, int nvars) {
  MultiPoly m(c.ring(), nvars);
  m.add_term(Mono(static_cast<std::size_t>(nvars), 0), c);
  return m;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (auto& [m, c] : t_) {
    int s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

LocalElem MultiPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? LocalElem::exact_zero(*R_) : it->second;
}

void MultiPoly::add_term(const Mono& m, const LocalElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*R_, nvars_);
  for (auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(*a.R_, a.nvars_);
  MultiPoly::Mono e(static_cast<std::size_t>(a.nvars_));
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(const LocalElem& c, const MultiPoly& a) {
  MultiPoly r(*a.R_, a.nvars_);
  for (auto& [m, x] : a.t_) r.add_term(m, c * x);
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t n) const {
  MultiPoly r = constant(LocalElem::one(*R_), nvars_), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::scale_integral(const LocalElem& c) const {
  MultiPoly r(*R_, nvars_);
  for (auto& [m, x] : t_) {
    LocalElem y = c * x;
    if (y.is_zero()) {
      if (y.abs_prec() < 0) fail(ErrorKind::PrecisionExhausted, "coefficient lost all precision");
      continue;
    }
    if (y.valuation() < 0) return std::nullopt;
    r.t_.emplace(m, y);
  }
  return r;
}

bool MultiPoly::equals(const MultiPoly& o) const { return (*this - o).is_zero(); }

LocalElem MultiPoly::eval(const std::vector<LocalElem>& x) const {
  const LocalRing* R = R_;
  for (auto& v : x) R = &common_ring(LocalElem::exact_zero(*R), v);
  LocalElem acc = LocalElem::exact_zero(*R);
  for (auto& [m, c] : t_) {
    LocalElem t = LocalElem::embed(c, *R);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= x[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

ResidueField::Elem MultiPoly::eval_residue(const std::vector<ResidueField::Elem>& x) const {
  const ResidueField& F = R_->residue_field();
  ResidueField::Elem acc = F.zero();
  for (auto& [m, c] : t_) {
    ResidueField::Elem t = c.valuation() > 0 ? F.zero() : ResidueField::Elem(c.residue());
    for (std::size_t i = 0; i < m.size() && !F.is_zero(t); ++i)
      if (m[i]) t = F.mul(t, F.pow(x[i], m[i]));
    acc = F.add(acc, t);
  }
  return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      os << '*' << names[i];
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

}  // namespace ltlab

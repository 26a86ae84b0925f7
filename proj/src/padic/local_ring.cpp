#include "ltlab/padic/local_ring.hpp"

#include <algorithm>
#include <sstream>

namespace ltlab {

namespace {

inline void reduce(mpz_class& x, const mpz_class* mod) {
  if (mod) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod->get_mpz_t());
}

int sat_add(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s >= kInfPrec) return kInfPrec;
  if (s <= -kInfPrec) return -kInfPrec;
  return static_cast<int>(s);
}

}  // namespace

void raw_mul(const RawLevel* L, const mpz_class* a, const mpz_class* b, mpz_class* out, const mpz_class* mod) {
  if (!L) {
    mpz_mul(out->get_mpz_t(), a->get_mpz_t(), b->get_mpz_t());
    reduce(*out, mod);
    return;
  }
  const int d = L->deg;
  const mpz_class* m = L->modulus.data();
  if (!L->sub) {
    thread_local std::vector<mpz_class> tmp;
    if (static_cast<int>(tmp.size()) < 2 * d - 1) tmp.resize(2 * d - 1);
    for (int k = 0; k < 2 * d - 1; ++k) tmp[k] = 0;
    for (int i = 0; i < d; ++i) {
      if (mpz_sgn(a[i].get_mpz_t()) == 0) continue;
      for (int j = 0; j < d; ++j) mpz_addmul(tmp[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (int k = 2 * d - 2; k >= d; --k) {
      reduce(tmp[k], mod);
      if (mpz_sgn(tmp[k].get_mpz_t()) == 0) continue;
      for (int i = 0; i < d; ++i) mpz_submul(tmp[k - d + i].get_mpz_t(), tmp[k].get_mpz_t(), m[i].get_mpz_t());
    }
    for (int i = 0; i < d; ++i) {
      reduce(tmp[i], mod);
      out[i] = tmp[i];
    }
    return;
  }
  const int sd = L->sub_dim;
  std::vector<mpz_class> tmp(static_cast<std::size_t>((2 * d - 1) * sd));
  std::vector<mpz_class> prod(static_cast<std::size_t>(sd));
  for (int i = 0; i < d; ++i) {
    bool zero = true;
    for (int t = 0; t < sd && zero; ++t) zero = mpz_sgn(a[i * sd + t].get_mpz_t()) == 0;
    if (zero) continue;
    for (int j = 0; j < d; ++j) {
      raw_mul(L->sub.get(), a + i * sd, b + j * sd, prod.data(), mod);
      for (int t = 0; t < sd; ++t) tmp[(i + j) * sd + t] += prod[t];
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    bool zero = true;
    for (int t = 0; t < sd; ++t) {
      reduce(tmp[k * sd + t], mod);
      zero = zero && mpz_sgn(tmp[k * sd + t].get_mpz_t()) == 0;
    }
    if (zero) continue;
    for (int i = 0; i < d; ++i) {
      raw_mul(L->sub.get(), &tmp[k * sd], m + i * sd, prod.data(), mod);
      for (int t = 0; t < sd; ++t) tmp[(k - d + i) * sd + t] -= prod[t];
    }
  }
  for (int i = 0; i < d * sd; ++i) {
    reduce(tmp[i], mod);
    out[i] = tmp[i];
  }
}

// ---------------------------------------------------------------- LocalRing

std::shared_ptr<const LocalRing> LocalRing::make_base(int p, int f, std::vector<mpz_class> g, int e,
                                                      std::vector<mpz_class> eis, int N) {
  std::shared_ptr<LocalRing> R(new LocalRing());
  R->p_ = p;
  R->f_ = f;
  R->e_ = e;
  R->d_ = 1;
  R->ram_ = e;
  R->dim_ = e * f;
  R->N_ = N;
  R->g_ = std::move(g);
  R->eis_ = std::move(eis);
  std::shared_ptr<const RawLevel> U;
  if (f > 1) {
    auto L = std::make_shared<RawLevel>();
    L->deg = f;
    L->sub_dim = 1;
    L->modulus.assign(R->g_.begin(), R->g_.begin() + f);
    U = L;
  }
  R->unram_level_ = U;
  if (e > 1) {
    auto L = std::make_shared<RawLevel>();
    L->deg = e;
    L->sub_dim = f;
    L->sub = U;
    L->modulus = R->eis_;
    R->level_ = L;
  } else {
    R->level_ = U;
  }
  std::vector<std::int64_t> gm;
  if (f > 1)
    for (auto& c : R->g_) gm.push_back(mpz_class(c % p + p).get_si() % p);
  else
    gm = {0, 1};
  R->fq_ = ResidueField(p, gm);
  R->init_weights();
  return R;
}

std::shared_ptr<const LocalRing> LocalRing::make_extension(std::shared_ptr<const LocalRing> base,
                                                           std::vector<mpz_class> m, int d) {
  std::shared_ptr<LocalRing> R(new LocalRing());
  R->p_ = base->p_;
  R->f_ = base->f_;
  R->e_ = base->e_;
  R->d_ = d;
  R->ram_ = base->ram_ * d;
  R->dim_ = base->dim_ * d;
  R->N_ = base->N_;
  R->g_ = base->g_;
  R->eis_ = base->eis_;
  R->ext_mod_ = std::move(m);
  R->fq_ = base->fq_;
  R->unram_level_ = base->unram_level_;
  auto L = std::make_shared<RawLevel>();
  L->deg = d;
  L->sub_dim = base->dim_;
  L->sub = base->level_;
  L->modulus = R->ext_mod_;
  R->level_ = L;
  R->base_ = std::move(base);
  R->init_weights();
  return R;
}

void LocalRing::init_weights() {
  const int G = dim_ / f_;
  weight_.assign(G, 0);
  if (!base_) {
    for (int i = 0; i < G; ++i) weight_[i] = i;
  } else {
    const int bg = base_->groups();
    for (int g = 0; g < G; ++g) weight_[g] = d_ * base_->weight(g % bg) + g / bg;
  }
  ginv_.resize(G);
}

const mpz_class& LocalRing::ppow(int k) const {
  if (k < 0) throw std::logic_error("negative power of p requested");
  if (ppow_.empty()) ppow_.emplace_back(1);
  while (static_cast<int>(ppow_.size()) <= k) ppow_.push_back(ppow_.back() * p_);
  return ppow_[k];
}

void LocalRing::mul(const mpz_class* a, const mpz_class* b, mpz_class* out, const mpz_class* mod) const {
  raw_mul(level_.get(), a, b, out, mod);
}

void LocalRing::mul_base_scalar(const mpz_class* a, const mpz_class* s, mpz_class* out, const mpz_class* mod) const {
  const int bd = base_->dim_;
  const RawLevel* BL = base_->level_.get();
  for (int j = 0; j < d_; ++j) raw_mul(BL, a + j * bd, s, out + j * bd, mod);
}

void LocalRing::mul_gen(const mpz_class* a, mpz_class* out, const mpz_class* mod) const {
  if (!base_ && e_ == 1) {
    for (int k = 0; k < dim_; ++k) {
      out[k] = a[k] * p_;
      reduce(out[k], mod);
    }
    return;
  }
  const RawLevel& L = *level_;
  const int d = L.deg, sd = L.sub_dim;
  const mpz_class* top = a + (d - 1) * sd;
  for (int j = d - 1; j >= 1; --j)
    for (int t = 0; t < sd; ++t) out[j * sd + t] = a[(j - 1) * sd + t];
  for (int t = 0; t < sd; ++t) out[t] = 0;
  bool zero = true;
  for (int t = 0; t < sd && zero; ++t) zero = mpz_sgn(top[t].get_mpz_t()) == 0;
  if (!zero) {
    std::vector<mpz_class> prod(sd);
    for (int i = 0; i < d; ++i) {
      raw_mul(L.sub.get(), top, L.modulus.data() + i * sd, prod.data(), mod);
      for (int t = 0; t < sd; ++t) out[i * sd + t] -= prod[t];
    }
  }
  for (int k = 0; k < dim_; ++k) reduce(out[k], mod);
}

const LocalElem& LocalRing::group_inverse(int group) const {
  auto& slot = ginv_[group];
  if (slot) return *slot;
  LocalElem r;
  if (group == 0) {
    r = LocalElem::one(*this);
  } else if (!base_) {
    // u^{-1} = -(u^{e-1} + E_{e-1} u^{e-2} + ... + E_1) / E_0
    auto& u_inv_slot = ginv_[1];
    if (!u_inv_slot) {
      Digits num(dim_);
      for (int k = 1; k < e_; ++k)
        for (int l = 0; l < f_; ++l) num[(k - 1) * f_ + l] = eis_[k * f_ + l];
      num[(e_ - 1) * f_] += 1;
      LocalElem numer = LocalElem::from_digits(*this, num, 0, kInfPrec);
      Digits c0(dim_);
      for (int l = 0; l < f_; ++l) c0[l] = eis_[l] / p_;
      LocalElem eps = LocalElem::from_digits(*this, c0, 0, kInfPrec);
      LocalElem e0inv = LocalElem::unit_inverse(eps).mul_p_power(-1);
      u_inv_slot = std::make_unique<LocalElem>(-(numer * e0inv));
    }
    r = u_inv_slot->pow(static_cast<std::uint64_t>(group));
    if (group == 1) return *u_inv_slot;
  } else {
    const int bg = base_->groups();
    const int i = group % bg, j = group / bg;
    LocalElem w_inv;
    if (j > 0) {
      auto& w_slot = ginv_[bg];
      if (!w_slot) {
        const int bd = base_->dim_;
        Digits num(dim_);
        for (int k = 1; k < d_; ++k)
          for (int t = 0; t < bd; ++t) num[(k - 1) * bd + t] = ext_mod_[k * bd + t];
        num[(d_ - 1) * bd] += 1;
        LocalElem numer = LocalElem::from_digits(*this, num, 0, kInfPrec);
        Digits c0(bd);
        for (int t = 0; t < bd; ++t) c0[t] = ext_mod_[t];
        LocalElem m0 = LocalElem::from_digits(*base_, c0, 0, kInfPrec);
        w_slot = std::make_unique<LocalElem>(-(numer * m0.inverse()));
      }
      w_inv = *w_slot;
      if (group == bg) return *w_slot;
    }
    r = LocalElem::embed(base_->group_inverse(i), *this);
    if (j > 0) r = r * w_inv.pow(static_cast<std::uint64_t>(j));
  }
  slot = std::make_unique<LocalElem>(std::move(r));
  return *slot;
}

std::string LocalRing::describe() const {
  std::ostringstream os;
  os << "p=" << p_ << " f=" << f_ << " e=" << e_;
  if (base_) os << " d=" << d_;
  os << " N=" << N_;
  return os.str();
}

// ---------------------------------------------------------------- helpers

int vp_bounded(const mpz_class& z, int p, int bound) {
  if (mpz_sgn(z.get_mpz_t()) == 0) return bound;
  if (p == 2) return static_cast<int>(std::min<mp_bitcnt_t>(mpz_scan1(z.get_mpz_t(), 0), static_cast<mp_bitcnt_t>(std::max(bound, 0))));
  if (!mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p))) return 0;
  mpz_class t, pp(p);
  auto c = mpz_remove(t.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  return static_cast<int>(std::min<long>(static_cast<long>(c), bound));
}

const LocalRing& common_ring(const LocalElem& a, const LocalElem& b) {
  if (a.ring_ptr() == b.ring_ptr()) return a.ring();
  if (b.ring().base() == a.ring_ptr()) return b.ring();
  if (a.ring().base() == b.ring_ptr()) return a.ring();
  fail(ErrorKind::RingMismatch, "operands live in unrelated rings");
}

// ---------------------------------------------------------------- LocalElem

void LocalElem::finish() {
  const LocalRing& R = *R_;
  const int E = R.ram(), f = R.f(), G = R.groups(), p = R.p();
  const bool inf = A_ >= kInfPrec;
  auto reduce_all = [&](int A) {
    for (int g = 0; g < G; ++g) {
      const long long m = ceil_div(static_cast<long long>(A) - R.weight(g), E) + s_;
      for (int l = 0; l < f; ++l) {
        mpz_class& z = z_[g * f + l];
        if (m <= 0)
          z = 0;
        else
          mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), R.ppow(static_cast<int>(m)).get_mpz_t());
      }
    }
  };
  if (!inf) reduce_all(A_);
  int best = kInfPrec;
  int vmin = kInfPrec;
  for (int g = 0; g < G; ++g) {
    int bound = s_;
    if (best < kInfPrec) bound = std::max<int>(bound, static_cast<int>(ceil_div(static_cast<long long>(best) - R.weight(g), E)) + s_);
    else bound = kInfPrec;
    int vg = kInfPrec;
    for (int l = 0; l < f; ++l) {
      const mpz_class& z = z_[g * f + l];
      if (mpz_sgn(z.get_mpz_t()) == 0) continue;
      vg = std::min(vg, vp_bounded(z, p, std::min(bound, vg)));
    }
    if (vg >= kInfPrec) continue;
    vmin = std::min(vmin, vg);
    const long long val = static_cast<long long>(E) * (vg - s_) + R.weight(g);
    if (vg < bound && val < best) best = static_cast<int>(val);
  }
  v_ = best;
  if (v_ >= A_) {
    for (auto& z : z_) z = 0;
    s_ = 0;
    v_ = A_;
    return;
  }
  if (inf || A_ - v_ > R.cap()) {
    A_ = v_ + R.cap();
    reduce_all(A_);
  }
  const int t = std::min(s_, vmin);
  if (t > 0) {
    const mpz_class& pt = R.ppow(t);
    for (auto& z : z_) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), pt.get_mpz_t());
    s_ -= t;
  }
}

LocalElem LocalElem::exact_zero(const LocalRing& R) {
  LocalElem r;
  r.R_ = &R;
  r.z_.resize(R.dim());
  return r;
}

LocalElem LocalElem::zero_at(const LocalRing& R, int abs_prec) {
  LocalElem r = exact_zero(R);
  r.A_ = abs_prec;
  r.v_ = abs_prec;
  return r;
}

LocalElem LocalElem::from_digits(const LocalRing& R, Digits z, int shift, int abs_prec) {
  LocalElem r;
  r.R_ = &R;
  r.z_ = std::move(z);
  r.z_.resize(R.dim());
  r.s_ = shift;
  if (r.s_ < 0) {
    const mpz_class& pk = R.ppow(-r.s_);
    for (auto& c : r.z_) c *= pk;
    r.s_ = 0;
  }
  r.A_ = abs_prec;
  r.v_ = kInfPrec;
  r.finish();
  return r;
}

LocalElem LocalElem::from_int(const LocalRing& R, const mpz_class& n) {
  if (n == 0) return exact_zero(R);
  Digits z(R.dim());
  z[0] = n;
  return from_digits(R, std::move(z), 0, kInfPrec);
}

LocalElem LocalElem::from_rational(const LocalRing& R, const mpq_class& x) {
  if (x == 0) return exact_zero(R);
  const int p = R.p();
  mpz_class num = x.get_num(), den = x.get_den(), pp(p), t;
  long a = static_cast<long>(mpz_remove(t.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()));
  den = t;
  long b = static_cast<long>(mpz_remove(t.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t()));
  num = t;
  const int digits = R.N() + 2;
  const mpz_class& M = R.ppow(digits);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t());
  mpz_class u = num * inv;
  mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), M.get_mpz_t());
  const long k = b - a;
  Digits z(R.dim());
  z[0] = u;
  // value = p^k * u with u a unit known to `digits` p-adic digits
  int A = static_cast<int>(k * R.ram()) + R.cap();
  if (k >= 0) {
    z[0] *= R.ppow(static_cast<int>(k));
    return from_digits(R, std::move(z), 0, A);
  }
  return from_digits(R, std::move(z), static_cast<int>(-k), A);
}

LocalElem LocalElem::basis(const LocalRing& R, int k) {
  Digits z(R.dim());
  z[k] = 1;
  return from_digits(R, std::move(z), 0, kInfPrec);
}

LocalElem LocalElem::gen(const LocalRing& R) {
  if (!R.is_extension() && R.ram() == 1) return from_int(R, R.p());
  const int idx = R.is_extension() ? R.base()->dim() : R.f();
  return basis(R, idx);
}

LocalElem LocalElem::embed(const LocalElem& x, const LocalRing& ext) {
  if (x.R_ == &ext) return x;
  if (ext.base() != x.R_) fail(ErrorKind::RingMismatch, "embed: not the base ring");
  LocalElem r;
  r.R_ = &ext;
  r.z_.resize(ext.dim());
  for (int k = 0; k < x.R_->dim(); ++k) r.z_[k] = x.z_[k];
  r.s_ = x.s_;
  const int d = ext.rel_degree();
  r.A_ = x.A_ >= kInfPrec ? kInfPrec : x.A_ * d;
  r.v_ = x.v_ >= kInfPrec ? kInfPrec : x.v_ * d;
  if (r.A_ < kInfPrec && r.A_ - r.v_ > ext.cap()) r.finish();
  return r;
}

LocalElem LocalElem::from_coeffs(const LocalRing& ext, const std::vector<LocalElem>& cs) {
  const int d = ext.rel_degree(), bd = ext.base()->dim();
  if (static_cast<int>(cs.size()) > d) fail(ErrorKind::RingMismatch, "too many coefficients");
  int s = 0;
  int A = kInfPrec;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].R_ != ext.base()) fail(ErrorKind::RingMismatch, "coefficient not in base ring");
    s = std::max(s, cs[j].s_);
    if (cs[j].A_ < kInfPrec) A = std::min<int>(A, cs[j].A_ * d + static_cast<int>(j));
  }
  Digits z(ext.dim());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const mpz_class& sh = ext.ppow(s - cs[j].s_);
    for (int t = 0; t < bd; ++t) z[j * bd + t] = cs[j].z_[t] * sh;
  }
  if (A >= kInfPrec) {
    bool allzero = true;
    for (auto& c : z) allzero = allzero && c == 0;
    if (allzero) return exact_zero(ext);
  }
  return from_digits(ext, std::move(z), s, A);
}

LocalElem LocalElem::lift_exact() const {
  if (is_zero()) return exact_zero(*R_);
  LocalElem r = *this;
  r.A_ = v_ + R_->cap();
  return r;
}

LocalElem LocalElem::with_abs_prec(int A) const {
  if (A >= A_) return *this;
  LocalElem r = *this;
  r.A_ = A;
  r.finish();
  return r;
}

LocalElem LocalElem::coeff(int j) const {
  const LocalRing& B = *R_->base();
  const int d = R_->rel_degree(), bd = B.dim();
  Digits z(bd);
  for (int t = 0; t < bd; ++t) z[t] = z_[j * bd + t];
  if (A_ >= kInfPrec) return exact_zero(B);
  const int A = static_cast<int>(ceil_div(static_cast<long long>(A_) - j, d));
  return from_digits(B, std::move(z), s_, A);
}

std::vector<LocalElem> LocalElem::coeffs() const {
  std::vector<LocalElem> out;
  for (int j = 0; j < R_->rel_degree(); ++j) out.push_back(coeff(j));
  return out;
}

std::vector<int> LocalElem::residue() const {
  const int f = R_->f(), p = R_->p();
  std::vector<int> r(f, 0);
  if (is_zero() && A_ <= 0) fail(ErrorKind::PrecisionExhausted, "residue of an element known below precision 1");
  if (is_zero() || v_ > 0) return r;
  if (v_ < 0) fail(ErrorKind::IntegralityViolation, "residue of a non-integral element");
  for (int l = 0; l < f; ++l) r[l] = static_cast<int>(mpz_fdiv_ui(z_[l].get_mpz_t(), static_cast<unsigned long>(p)));
  return r;
}

LocalElem LocalElem::operator-() const {
  LocalElem r = *this;
  for (auto& z : r.z_) z = -z;
  if (A_ < kInfPrec) r.finish();
  return r;
}

LocalElem operator+(const LocalElem& a, const LocalElem& b) {
  if (a.R_ != b.R_) {
    const LocalRing& R = common_ring(a, b);
    return LocalElem::embed(a, R) + LocalElem::embed(b, R);
  }
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const int A = std::min(a.A_, b.A_);
  if (a.v_ >= A) return b.with_abs_prec(A);
  if (b.v_ >= A) return a.with_abs_prec(A);
  LocalElem r;
  r.R_ = a.R_;
  r.A_ = A;
  r.s_ = std::max(a.s_, b.s_);
  const int n = a.R_->dim();
  r.z_.resize(n);
  const int da = r.s_ - a.s_, db = r.s_ - b.s_;
  for (int k = 0; k < n; ++k) {
    if (da == 0 && db == 0) {
      mpz_add(r.z_[k].get_mpz_t(), a.z_[k].get_mpz_t(), b.z_[k].get_mpz_t());
    } else if (da == 0) {
      r.z_[k] = a.z_[k];
      mpz_addmul(r.z_[k].get_mpz_t(), b.z_[k].get_mpz_t(), a.R_->ppow(db).get_mpz_t());
    } else {
      r.z_[k] = b.z_[k];
      mpz_addmul(r.z_[k].get_mpz_t(), a.z_[k].get_mpz_t(), a.R_->ppow(da).get_mpz_t());
    }
  }
  r.finish();
  return r;
}

LocalElem operator-(const LocalElem& a, const LocalElem& b) { return a + (-b); }

LocalElem operator*(const LocalElem& a, const LocalElem& b) {
  const LocalRing* RA = a.R_;
  const LocalRing* RB = b.R_;
  if (RA != RB) {
    const LocalRing& R = common_ring(a, b);
    const LocalElem& big = (RA == &R) ? a : b;
    const LocalElem& small = (RA == &R) ? b : a;
    if (big.is_exact_zero() || small.is_exact_zero()) return LocalElem::exact_zero(R);
    const int d = R.rel_degree();
    const int sv = small.v_ * d, sA = small.A_ * d;
    int A = std::min(sat_add(big.A_, sv), sat_add(sA, big.v_));
    if (big.is_zero() || small.is_zero()) return LocalElem::zero_at(R, A);
    A = std::min(A, big.v_ + sv + R.cap());
    LocalElem r;
    r.R_ = &R;
    r.A_ = A;
    r.s_ = big.s_ + small.s_;
    const long long M = ceil_div(A, R.ram()) + r.s_;
    if (M <= 0) return LocalElem::zero_at(R, A);
    r.z_.resize(R.dim());
    R.mul_base_scalar(big.z_.data(), small.z_.data(), r.z_.data(), &R.ppow(static_cast<int>(M)));
    r.finish();
    return r;
  }
  const LocalRing& R = *RA;
  if (a.is_exact_zero() || b.is_exact_zero()) return LocalElem::exact_zero(R);
  int A = std::min(sat_add(a.A_, b.v_), sat_add(b.A_, a.v_));
  if (a.is_zero() || b.is_zero()) return LocalElem::zero_at(R, A);
  A = std::min(A, a.v_ + b.v_ + R.cap());
  LocalElem r;
  r.R_ = &R;
  r.A_ = A;
  r.s_ = a.s_ + b.s_;
  const long long M = ceil_div(A, R.ram()) + r.s_;
  if (M <= 0) return LocalElem::zero_at(R, A);
  r.z_.resize(R.dim());
  R.mul(a.z_.data(), b.z_.data(), r.z_.data(), &R.ppow(static_cast<int>(M)));
  r.finish();
  return r;
}

LocalElem operator/(const LocalElem& a, const LocalElem& b) { return a * b.inverse(); }

LocalElem LocalElem::unit_inverse(const LocalElem& y) {
  const LocalRing& R = *y.R_;
  const ResidueField& F = R.residue_field();
  std::vector<int> r = F.inv(y.residue());
  Digits z(R.dim());
  for (int l = 0; l < R.f(); ++l) z[l] = r[l];
  LocalElem x = from_digits(R, std::move(z), 0, kInfPrec);
  const LocalElem ye = y.lift_exact();
  const LocalElem one = LocalElem::one(R);
  for (int it = 0; it < 64; ++it) {
    LocalElem err = one - ye * x;
    if (err.is_zero()) break;
    x = x + x * err;
  }
  return x.with_abs_prec(y.rel_prec());
}

LocalElem LocalElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByIndistinguishableZero, "inverse of an element indistinguishable from 0");
  const LocalRing& R = *R_;
  if (v_ == 0) return unit_inverse(*this);
  const int E = R.ram(), f = R.f(), G = R.groups(), p = R.p();
  int gstar = -1, k = 0;
  for (int g = 0; g < G && gstar < 0; ++g) {
    int vg = kInfPrec;
    for (int l = 0; l < f; ++l) {
      const mpz_class& z = z_[g * f + l];
      if (mpz_sgn(z.get_mpz_t()) != 0) vg = std::min(vg, vp_bounded(z, p, kInfPrec));
    }
    if (vg < kInfPrec && E * (vg - s_) + R.weight(g) == v_) {
      gstar = g;
      k = vg - s_;
    }
  }
  const LocalElem& binv = R.group_inverse(gstar);
  LocalElem unit = (lift_exact() * binv).mul_p_power(-k);
  LocalElem w = unit_inverse(unit.lift_exact());
  LocalElem res = (w * binv).mul_p_power(-k);
  return res.with_abs_prec(-v_ + rel_prec());
}

LocalElem LocalElem::pow(std::uint64_t n) const {
  LocalElem r = one(*R_);
  LocalElem b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

LocalElem LocalElem::mul_gen_power(int j) const {
  if (j == 0 || is_exact_zero()) return *this;
  if (j < 0) return *this * R_->group_inverse(R_->is_extension() ? R_->base()->groups() : 1).pow(static_cast<std::uint64_t>(-j));
  const LocalRing& R = *R_;
  if (is_zero()) return zero_at(R, A_ + j);
  LocalElem r = *this;
  r.A_ = A_ + j;
  const long long M = ceil_div(r.A_, R.ram()) + s_;
  const mpz_class& mod = R.ppow(static_cast<int>(std::max<long long>(M, 1)));
  Digits tmp(R.dim());
  for (int i = 0; i < j; ++i) {
    R.mul_gen(r.z_.data(), tmp.data(), &mod);
    std::swap(r.z_, tmp);
  }
  r.finish();
  return r;
}

LocalElem LocalElem::mul_p_power(int k) const {
  if (k == 0 || is_exact_zero()) return *this;
  const LocalRing& R = *R_;
  const int E = R.ram();
  if (is_zero()) return zero_at(R, A_ + k * E);
  LocalElem r = *this;
  r.A_ = A_ + k * E;
  r.v_ = v_ + k * E;
  if (k < 0) {
    r.s_ += -k;
  } else if (r.s_ >= k) {
    r.s_ -= k;
  } else {
    const mpz_class& pk = R.ppow(k - r.s_);
    for (auto& z : r.z_) z *= pk;
    r.s_ = 0;
  }
  r.finish();
  return r;
}

bool LocalElem::equals(const LocalElem& o) const { return (*this - o).is_zero(); }

bool LocalElem::identical(const LocalElem& o) const {
  if (R_ != o.R_ || s_ != o.s_ || A_ != o.A_ || v_ != o.v_) return false;
  for (std::size_t k = 0; k < z_.size(); ++k)
    if (z_[k] != o.z_[k]) return false;
  return true;
}

std::string LocalElem::str() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0";
  if (is_zero()) {
    os << "O(" << A_ << ")";
    return os.str();
  }
  os << "[";
  for (std::size_t k = 0; k < z_.size(); ++k) os << (k ? "," : "") << z_[k].get_str();
  os << "]";
  if (s_) os << "/p^" << s_;
  os << " v=" << v_ << " +O(" << A_ << ")";
  return os.str();
}

}  // namespace ltlab

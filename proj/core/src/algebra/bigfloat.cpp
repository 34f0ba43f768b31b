#include "graphoid/algebra/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "graphoid/error.hpp"

namespace graphoid {
namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// Scratch value at radius precision.
struct Tmp {
  mpfr_t v;
  explicit Tmp(mpfr_prec_t p = kRadPrec) { mpfr_init2(v, p); mpfr_set_zero(v, 1); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
};

void abs_up(mpfr_ptr out, mpfr_srcptr x) { mpfr_abs(out, x, MPFR_RNDU); }

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(val_, std::max(precision_bits, 2));
  mpfr_init2(err_, kRadPrec);
  mpfr_set_zero(val_, 1);
  mpfr_set_zero(err_, 1);
}

BigFloat::BigFloat(const Rat& q, int precision_bits) : BigFloat(precision_bits) {
  account_rounding(mpfr_set_q(val_, q.get_mpq_t(), MPFR_RNDN));
}

BigFloat::BigFloat(const Rat& mid, const Rat& radius, int precision_bits)
    : BigFloat(mid, precision_bits) {
  widen(radius);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(val_, mpfr_get_prec(other.val_));
  mpfr_init2(err_, kRadPrec);
  mpfr_set(val_, other.val_, MPFR_RNDN);
  mpfr_set(err_, other.err_, MPFR_RNDU);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(static_cast<int>(mpfr_get_prec(other.val_))) {
  mpfr_swap(val_, other.val_);
  mpfr_swap(err_, other.err_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(val_, mpfr_get_prec(other.val_));
    mpfr_set(val_, other.val_, MPFR_RNDN);
    mpfr_set(err_, other.err_, MPFR_RNDU);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(val_, other.val_);
  mpfr_swap(err_, other.err_);
  return *this;
}

BigFloat::~BigFloat() {
  mpfr_clear(val_);
  mpfr_clear(err_);
}

BigFloat BigFloat::from_double(double v, double radius, int precision_bits) {
  BigFloat r(std::max(precision_bits, 53));
  mpfr_set_d(r.val_, v, MPFR_RNDN);
  mpfr_set_d(r.err_, radius < 0 ? -radius : radius, MPFR_RNDU);
  return r;
}

int BigFloat::precision() const { return static_cast<int>(mpfr_get_prec(val_)); }

double BigFloat::to_double() const { return mpfr_get_d(val_, MPFR_RNDN); }

double BigFloat::error_double() const { return mpfr_get_d(err_, MPFR_RNDU); }

Rat BigFloat::mid_rat() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), val_);
  return q;
}

Rat BigFloat::err_rat() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), err_);
  return q;
}

bool BigFloat::certainly_positive() const {
  if (mpfr_sgn(val_) <= 0) return false;
  return mpfr_cmp(val_, err_) > 0;
}

bool BigFloat::certainly_negative() const {
  if (mpfr_sgn(val_) >= 0) return false;
  return mpfr_cmpabs(val_, err_) > 0;
}

bool BigFloat::contains(const Rat& q) const {
  Rat d = q - mid_rat();
  if (d < 0) d = -d;
  return d <= err_rat();
}

int BigFloat::sign() const {
  if (certainly_positive()) return 1;
  if (certainly_negative()) return -1;
  return 0;
}

BigFloat BigFloat::abs() const {
  BigFloat r(*this);
  mpfr_abs(r.val_, r.val_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.val_, r.val_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  Tmp lo(mpfr_get_prec(val_));
  mpfr_sub(lo.v, val_, err_, MPFR_RNDD);
  if (mpfr_sgn(lo.v) > 0) {
    r.account_rounding(mpfr_sqrt(r.val_, val_, MPFR_RNDN));
    Tmp s;
    mpfr_sqrt(s.v, lo.v, MPFR_RNDD);
    Tmp e;
    mpfr_div(e.v, err_, s.v, MPFR_RNDU);
    mpfr_add(r.err_, r.err_, e.v, MPFR_RNDU);
    return r;
  }
  Tmp hi(mpfr_get_prec(val_));
  mpfr_add(hi.v, val_, err_, MPFR_RNDU);
  if (mpfr_sgn(hi.v) < 0) throw Error(Errc::PrecisionLoss, "square root of a negative ball");
  Tmp s(mpfr_get_prec(val_));
  mpfr_sqrt(s.v, hi.v, MPFR_RNDU);
  mpfr_div_2ui(r.val_, s.v, 1, MPFR_RNDN);
  mpfr_set(r.err_, r.val_, MPFR_RNDU);
  r.account_rounding(1);
  return r;
}

void BigFloat::widen(const Rat& extra) {
  Tmp e;
  mpfr_set_q(e.v, extra.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(e.v, e.v, MPFR_RNDU);
  mpfr_add(err_, err_, e.v, MPFR_RNDU);
}

void BigFloat::account_rounding(int inexact) {
  if (inexact == 0) return;
  if (mpfr_zero_p(val_)) return;
  Tmp ulp;
  mpfr_set_ui_2exp(ulp.v, 1, mpfr_get_exp(val_) - mpfr_get_prec(val_), MPFR_RNDU);
  mpfr_add(err_, err_, ulp.v, MPFR_RNDU);
}

std::string BigFloat::to_decimal(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), val_);
  std::string out(buf ? buf : "");
  mpfr_free_str(buf);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  int inex = mpfr_add(r.val_, a.val_, b.val_, MPFR_RNDN);
  mpfr_add(r.err_, a.err_, b.err_, MPFR_RNDU);
  r.account_rounding(inex);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  int inex = mpfr_sub(r.val_, a.val_, b.val_, MPFR_RNDN);
  mpfr_add(r.err_, a.err_, b.err_, MPFR_RNDU);
  r.account_rounding(inex);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  int inex = mpfr_mul(r.val_, a.val_, b.val_, MPFR_RNDN);
  // |a|eb + |b|ea + ea*eb
  Tmp aa, bb, t;
  abs_up(aa.v, a.val_);
  abs_up(bb.v, b.val_);
  mpfr_mul(t.v, aa.v, b.err_, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, t.v, MPFR_RNDU);
  mpfr_mul(t.v, bb.v, a.err_, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, t.v, MPFR_RNDU);
  mpfr_mul(t.v, a.err_, b.err_, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, t.v, MPFR_RNDU);
  r.account_rounding(inex);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (!b.certainly_nonzero()) throw Error(Errc::PrecisionLoss, "division by a ball containing zero");
  BigFloat r(std::max(a.precision(), b.precision()));
  int inex = mpfr_div(r.val_, a.val_, b.val_, MPFR_RNDN);
  // (ea + |a/b| eb) / (|b| - eb)
  Tmp q, num, den, t;
  mpfr_div(q.v, a.val_, b.val_, MPFR_RNDU);
  mpfr_abs(q.v, q.v, MPFR_RNDU);
  Tmp qlo;
  mpfr_div(qlo.v, a.val_, b.val_, MPFR_RNDD);
  mpfr_abs(qlo.v, qlo.v, MPFR_RNDU);
  if (mpfr_cmp(qlo.v, q.v) > 0) mpfr_swap(qlo.v, q.v);
  mpfr_mul(num.v, q.v, b.err_, MPFR_RNDU);
  mpfr_add(num.v, num.v, a.err_, MPFR_RNDU);
  mpfr_abs(den.v, b.val_, MPFR_RNDD);
  mpfr_sub(den.v, den.v, b.err_, MPFR_RNDD);
  mpfr_div(t.v, num.v, den.v, MPFR_RNDU);
  mpfr_add(r.err_, r.err_, t.v, MPFR_RNDU);
  r.account_rounding(inex);
  return r;
}

}  // namespace graphoid

#include "zg/ball.hpp"

#include <algorithm>
#include <cstdlib>

#include "zg/error.hpp"

namespace zg {

// ---------------------------------------------------------------------------
// Float

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_->_mpfr_d = nullptr;
}

Float& Float::operator=(const Float& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, other.prec());
  } else {
    mpfr_set_prec(value_, other.prec());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  if (this != &other) {
    release();
    value_[0] = other.value_[0];
    other.value_->_mpfr_d = nullptr;
  }
  return *this;
}

Float::~Float() { release(); }

void Float::release() {
  if (value_->_mpfr_d != nullptr) {
    mpfr_clear(value_);
    value_->_mpfr_d = nullptr;
  }
}

Float Float::from_double(double v, mpfr_prec_t prec) {
  Float f(prec);
  mpfr_set_d(f.get(), v, MPFR_RNDN);
  return f;
}

Float Float::infinity(mpfr_prec_t prec) {
  Float f(prec);
  mpfr_set_inf(f.get(), 1);
  return f;
}

mpq_class Float::to_rational() const {
  if (!is_finite()) throw DomainError("cannot convert a non-finite float to a rational");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

int compare(const Float& a, const Float& b) { return mpfr_cmp(a.get(), b.get()); }

// ---------------------------------------------------------------------------
// Radius helpers

class BallAccess {
 public:
  static Float& mid(RealBall& b) { return b.mid_; }
  static Float& rad(RealBall& b) { return b.rad_; }
};

namespace {

// Add the bound on |exact - mid| implied by an MPFR ternary value.
void add_rounding(Float& rad, const Float& mid, int ternary) {
  if (ternary == 0) return;
  Float ulp(kRadiusBits);
  if (mid.is_zero() || !mid.is_finite()) {
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_emin(), MPFR_RNDU);
  } else {
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid.get()) - mid.prec(), MPFR_RNDU);
  }
  mpfr_add(rad.get(), rad.get(), ulp.get(), MPFR_RNDU);
}

Float abs_up(const Float& x) {
  Float r(kRadiusBits);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

// max(|mid| - rad, 0), rounded down.
Float mag_lower(const RealBall& x) {
  Float r(kRadiusBits);
  Float a(x.mid().prec());
  mpfr_abs(a.get(), x.mid().get(), MPFR_RNDN);
  mpfr_sub(r.get(), a.get(), x.rad().get(), MPFR_RNDD);
  if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

// |mid| + rad, rounded up.
Float mag_upper(const RealBall& x) {
  Float r(kRadiusBits);
  Float a(x.mid().prec());
  mpfr_abs(a.get(), x.mid().get(), MPFR_RNDN);
  mpfr_add(r.get(), a.get(), x.rad().get(), MPFR_RNDU);
  return r;
}

RealBall make(Float mid, Float rad) {
  RealBall out(mid.prec());
  if (!mid.is_finite() || !rad.is_finite()) return RealBall::full_line(mid.prec());
  BallAccess::mid(out) = std::move(mid);
  BallAccess::rad(out) = std::move(rad);
  return out;
}

mpfr_prec_t max_prec(const RealBall& a, const RealBall& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

// ---------------------------------------------------------------------------
// RealBall construction

RealBall::RealBall(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusBits) {}

RealBall::RealBall(long value, mpfr_prec_t prec) : mid_(prec), rad_(kRadiusBits) {
  int t = mpfr_set_si(mid_.get(), value, MPFR_RNDN);
  add_rounding(rad_, mid_, t);
}

RealBall RealBall::from_double(double value, mpfr_prec_t prec) {
  RealBall b(prec);
  int t = mpfr_set_d(b.mid_.get(), value, MPFR_RNDN);
  add_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_rational(const mpq_class& value, mpfr_prec_t prec) {
  RealBall b(prec);
  int t = mpfr_set_q(b.mid_.get(), value.get_mpq_t(), MPFR_RNDN);
  add_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_float(const Float& value, mpfr_prec_t prec) {
  if (!value.is_finite()) return full_line(prec);
  RealBall b(prec);
  int t = mpfr_set(b.mid_.get(), value.get(), MPFR_RNDN);
  add_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::from_mid_rad(const Float& mid, const Float& rad, mpfr_prec_t prec) {
  if (!mid.is_finite() || !rad.is_finite()) return full_line(prec);
  RealBall b = from_float(mid, prec);
  Float r(kRadiusBits);
  mpfr_abs(r.get(), rad.get(), MPFR_RNDU);
  mpfr_add(b.rad_.get(), b.rad_.get(), r.get(), MPFR_RNDU);
  return b;
}

RealBall RealBall::from_interval(const Float& lo, const Float& hi, mpfr_prec_t prec) {
  if (!lo.is_finite() || !hi.is_finite()) return full_line(prec);
  Float mid(prec);
  mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  Float r1(kRadiusBits), r2(kRadiusBits);
  mpfr_sub(r1.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(r2.get(), mid.get(), lo.get(), MPFR_RNDU);
  if (mpfr_cmp(r2.get(), r1.get()) > 0) r1 = std::move(r2);
  if (mpfr_sgn(r1.get()) < 0) mpfr_set_zero(r1.get(), 1);
  return make(std::move(mid), std::move(r1));
}

RealBall RealBall::full_line(mpfr_prec_t prec) {
  RealBall b(prec);
  mpfr_set_inf(b.rad_.get(), 1);
  return b;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
  RealBall b(prec);
  int t = mpfr_const_pi(b.mid_.get(), MPFR_RNDN);
  add_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::log2(mpfr_prec_t prec) {
  RealBall b(prec);
  int t = mpfr_const_log2(b.mid_.get(), MPFR_RNDN);
  add_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::pow2(long exponent, mpfr_prec_t prec) {
  RealBall b(prec);
  mpfr_set_ui_2exp(b.mid_.get(), 1, exponent, MPFR_RNDN);
  return b;
}

// ---------------------------------------------------------------------------
// RealBall queries

Float RealBall::lower() const {
  Float l(prec());
  if (!is_finite()) {
    mpfr_set_inf(l.get(), -1);
    return l;
  }
  mpfr_sub(l.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return l;
}

Float RealBall::upper() const {
  Float u(prec());
  if (!is_finite()) {
    mpfr_set_inf(u.get(), 1);
    return u;
  }
  mpfr_add(u.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return u;
}

double RealBall::lower_d() const { return lower().to_double(MPFR_RNDD); }
double RealBall::upper_d() const { return upper().to_double(MPFR_RNDU); }

bool RealBall::contains(const mpq_class& x) const {
  if (!is_finite()) return true;
  mpq_class d = x - mid_.to_rational();
  return abs(d) <= rad_.to_rational();
}

bool RealBall::contains(const RealBall& other) const {
  if (!is_finite()) return true;
  if (!other.is_finite()) return false;
  mpq_class m = mid_.to_rational(), r = rad_.to_rational();
  mpq_class om = other.mid_.to_rational(), orad = other.rad_.to_rational();
  return om - orad >= m - r && om + orad <= m + r;
}

bool RealBall::contains_zero() const {
  if (!is_finite()) return true;
  return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

bool RealBall::overlaps(const RealBall& other) const {
  if (!is_finite() || !other.is_finite()) return true;
  mpq_class d = mid_.to_rational() - other.mid_.to_rational();
  return abs(d) <= rad_.to_rational() + other.rad_.to_rational();
}

bool RealBall::is_positive() const {
  return is_finite() && mpfr_sgn(mid_.get()) > 0 && mpfr_cmp(mid_.get(), rad_.get()) > 0;
}

bool RealBall::is_negative() const {
  return is_finite() && mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool RealBall::is_nonnegative() const {
  return is_finite() && mpfr_cmp(mid_.get(), rad_.get()) >= 0;
}

bool RealBall::is_nonpositive() const {
  return is_finite() && (mpfr_sgn(mid_.get()) <= 0) && mpfr_cmpabs(mid_.get(), rad_.get()) >= 0;
}

RealBall RealBall::with_prec(mpfr_prec_t p) const {
  if (!is_finite()) return full_line(p);
  RealBall b(p);
  int t = mpfr_set(b.mid_.get(), mid_.get(), MPFR_RNDN);
  b.rad_ = rad_;
  add_rounding(b.rad_, b.mid_, t);
  return b;
}

RealBall RealBall::inflated(const Float& extra) const {
  RealBall b = *this;
  Float e = abs_up(extra);
  mpfr_add(b.rad_.get(), b.rad_.get(), e.get(), MPFR_RNDU);
  if (!b.rad_.is_finite()) return full_line(prec());
  return b;
}

RealBall RealBall::inflated(const RealBall& magnitude_bound) const {
  return inflated(mag_upper(magnitude_bound));
}

std::string RealBall::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re +/- %.3Re", digits, mid_.get(), rad_.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---------------------------------------------------------------------------
// RealBall arithmetic

RealBall RealBall::operator-() const {
  RealBall b = *this;
  mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return b;
}

RealBall& RealBall::operator+=(const RealBall& o) { return *this = *this + o; }
RealBall& RealBall::operator-=(const RealBall& o) { return *this = *this - o; }
RealBall& RealBall::operator*=(const RealBall& o) { return *this = *this * o; }
RealBall& RealBall::operator/=(const RealBall& o) { return *this = *this / o; }

RealBall operator+(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_add(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  mpfr_add(rad.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_sub(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  mpfr_add(rad.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_mul(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    Float tmp(kRadiusBits);
    Float am = abs_up(a.mid_), bm = abs_up(b.mid_);
    mpfr_mul(rad.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), tmp.get(), MPFR_RNDU);
  }
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite() || b.contains_zero()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_div(mid.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad_.is_zero() || !b.rad_.is_zero()) {
    // |a/b - q| <= (ra + |q| rb) / (|mb| - rb), q = ma/mb.
    Float q = abs_up(mid);
    Float ulp(kRadiusBits);
    if (!mid.is_zero()) {
      mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid.get()) - mid.prec(), MPFR_RNDU);
      mpfr_add(q.get(), q.get(), ulp.get(), MPFR_RNDU);
    }
    Float num(kRadiusBits), den = mag_lower(b);
    mpfr_mul(num.get(), q.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_div(rad.get(), num.get(), den.get(), MPFR_RNDU);
  }
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall operator+(const RealBall& a, long b) { return a + RealBall(b, a.prec()); }
RealBall operator-(const RealBall& a, long b) { return a - RealBall(b, a.prec()); }
RealBall operator-(long a, const RealBall& b) { return RealBall(a, b.prec()) - b; }
RealBall operator*(const RealBall& a, long b) { return a * RealBall(b, a.prec()); }
RealBall operator/(const RealBall& a, long b) { return a / RealBall(b, a.prec()); }
RealBall operator/(long a, const RealBall& b) { return RealBall(a, b.prec()) / b; }

bool certainly_lt(const RealBall& a, const RealBall& b) {
  if (!a.is_finite() || !b.is_finite()) return false;
  return mpfr_cmp(a.upper().get(), b.lower().get()) < 0;
}

bool certainly_le(const RealBall& a, const RealBall& b) {
  if (!a.is_finite() || !b.is_finite()) return false;
  return mpfr_cmp(a.upper().get(), b.lower().get()) <= 0;
}

// ---------------------------------------------------------------------------
// Elementary functions

RealBall abs(const RealBall& x) {
  if (!x.contains_zero()) {
    return x.mid().sign() < 0 ? -x : x;
  }
  if (!x.is_finite()) return RealBall::full_line(x.prec());
  Float hi(x.prec());
  Float a(x.prec());
  mpfr_abs(a.get(), x.mid().get(), MPFR_RNDN);
  mpfr_add(hi.get(), a.get(), x.rad().get(), MPFR_RNDU);
  return RealBall::from_interval(Float(x.prec()), hi, x.prec());
}

RealBall sqr(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_finite()) return RealBall::full_line(p);
  if (x.contains_zero()) {
    Float hi(p), a(p);
    mpfr_abs(a.get(), x.mid().get(), MPFR_RNDN);
    mpfr_add(hi.get(), a.get(), x.rad().get(), MPFR_RNDU);
    mpfr_sqr(hi.get(), hi.get(), MPFR_RNDU);
    return RealBall::from_interval(Float(p), hi, p);
  }
  Float mid(p);
  int t = mpfr_sqr(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!x.rad().is_zero()) {
    Float m = abs_up(x.mid()), tmp(kRadiusBits);
    mpfr_mul(rad.get(), m.get(), x.rad().get(), MPFR_RNDU);
    mpfr_mul_2ui(rad.get(), rad.get(), 1, MPFR_RNDU);
    mpfr_sqr(tmp.get(), x.rad().get(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), tmp.get(), MPFR_RNDU);
  }
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall sqrt(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_finite()) return RealBall::full_line(p);
  if (x.is_negative()) throw DomainError("sqrt of a negative ball");
  if (x.rad().is_zero()) {
    Float mid(p);
    int t = mpfr_sqrt(mid.get(), x.mid().get(), MPFR_RNDN);
    Float rad(kRadiusBits);
    add_rounding(rad, mid, t);
    return make(std::move(mid), std::move(rad));
  }
  // Monotone: map the endpoints.
  Float lo = x.lower(), hi = x.upper();
  if (lo.sign() < 0) mpfr_set_zero(lo.get(), 1);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return RealBall::from_interval(lo, hi, p);
}

RealBall exp(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_finite()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_exp(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!x.rad().is_zero()) {
    Float e(kRadiusBits), m(kRadiusBits);
    mpfr_exp(e.get(), x.mid().get(), MPFR_RNDU);
    mpfr_expm1(m.get(), x.rad().get(), MPFR_RNDU);
    mpfr_mul(rad.get(), e.get(), m.get(), MPFR_RNDU);
  }
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall log(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_positive()) throw DomainError("log of a ball that is not certainly positive");
  Float mid(p);
  int t = mpfr_log(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!x.rad().is_zero()) {
    Float den = mag_lower(x);
    mpfr_div(rad.get(), x.rad().get(), den.get(), MPFR_RNDU);
  }
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

std::pair<RealBall, RealBall> sin_cos(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_finite()) {
    return {RealBall::from_interval(Float::from_double(-1), Float::from_double(1), p),
            RealBall::from_interval(Float::from_double(-1), Float::from_double(1), p)};
  }
  Float s(p), c(p);
  int t = mpfr_sin_cos(s.get(), c.get(), x.mid().get(), MPFR_RNDN);
  Float rs(kRadiusBits), rc(kRadiusBits);
  if (!x.rad().is_zero()) {
    mpfr_min(rs.get(), x.rad().get(), Float::from_double(2.0, kRadiusBits).get(), MPFR_RNDU);
    rc = rs;
  }
  add_rounding(rs, s, t);
  add_rounding(rc, c, t);
  return {make(std::move(s), std::move(rs)), make(std::move(c), std::move(rc))};
}

RealBall sin(const RealBall& x) { return sin_cos(x).first; }
RealBall cos(const RealBall& x) { return sin_cos(x).second; }

namespace {

// r * cosh(|m| + r), the Lipschitz bound for sinh and cosh on the ball.
Float hyperbolic_radius(const RealBall& x) {
  Float rad(kRadiusBits);
  if (x.rad().is_zero()) return rad;
  Float top = mag_upper(x);
  mpfr_cosh(top.get(), top.get(), MPFR_RNDU);
  mpfr_mul(rad.get(), top.get(), x.rad().get(), MPFR_RNDU);
  return rad;
}

}  // namespace

RealBall sinh(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_finite()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_sinh(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad = hyperbolic_radius(x);
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall cosh(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  if (!x.is_finite()) return RealBall::full_line(p);
  Float mid(p);
  int t = mpfr_cosh(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad = hyperbolic_radius(x);
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall atan(const RealBall& x) {
  mpfr_prec_t p = x.prec();
  Float mid(p);
  if (!x.is_finite()) {
    return RealBall::from_interval(Float::from_double(-2), Float::from_double(2), p);
  }
  int t = mpfr_atan(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad = x.rad();
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall atan2(const RealBall& y, const RealBall& x) {
  mpfr_prec_t p = max_prec(x, y);
  RealBall whole = RealBall::from_interval(Float::from_double(-4), Float::from_double(4), p);
  if (!x.is_finite() || !y.is_finite()) return whole;
  if (!x.is_positive() && y.contains_zero()) return whole;
  Float mid(p);
  int t = mpfr_atan2(mid.get(), y.mid().get(), x.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!x.rad().is_zero() || !y.rad().is_zero()) {
    Float lx = mag_lower(x), ly = mag_lower(y);
    Float den(kRadiusBits);
    mpfr_sqr(lx.get(), lx.get(), MPFR_RNDD);
    mpfr_sqr(ly.get(), ly.get(), MPFR_RNDD);
    mpfr_add(den.get(), lx.get(), ly.get(), MPFR_RNDD);
    mpfr_sqrt(den.get(), den.get(), MPFR_RNDD);
    if (den.is_zero()) return whole;
    mpfr_add(rad.get(), x.rad().get(), y.rad().get(), MPFR_RNDU);
    mpfr_div(rad.get(), rad.get(), den.get(), MPFR_RNDU);
  }
  add_rounding(rad, mid, t);
  return make(std::move(mid), std::move(rad));
}

RealBall pow(const RealBall& x, const RealBall& y) { return exp(y * log(x)); }

RealBall pow(const RealBall& x, long n) {
  if (n == 0) return RealBall(1, x.prec());
  if (n < 0) return 1 / pow(x, -n);
  RealBall result(1, x.prec());
  RealBall base = x;
  bool first = true;
  while (n > 0) {
    if (n & 1) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1;
    if (n > 0) base = sqr(base);
  }
  return result;
}

RealBall mul_2si(const RealBall& x, long k) {
  if (!x.is_finite()) return x;
  RealBall b = x;
  mpfr_mul_2si(BallAccess::mid(b).get(), x.mid().get(), k, MPFR_RNDN);
  mpfr_mul_2si(BallAccess::rad(b).get(), x.rad().get(), k, MPFR_RNDU);
  return b;
}

RealBall hull(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite()) return RealBall::full_line(p);
  Float lo = a.lower(), hi = a.upper();
  Float blo = b.lower(), bhi = b.upper();
  if (compare(blo, lo) < 0) lo = blo;
  if (compare(bhi, hi) > 0) hi = bhi;
  return RealBall::from_interval(lo, hi, p);
}

RealBall min_ball(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite()) return RealBall::full_line(p);
  Float lo = a.lower(), hi = a.upper();
  Float blo = b.lower(), bhi = b.upper();
  if (compare(blo, lo) < 0) lo = blo;
  if (compare(bhi, hi) < 0) hi = bhi;
  return RealBall::from_interval(lo, hi, p);
}

RealBall max_ball(const RealBall& a, const RealBall& b) {
  mpfr_prec_t p = max_prec(a, b);
  if (!a.is_finite() || !b.is_finite()) return RealBall::full_line(p);
  Float lo = a.lower(), hi = a.upper();
  Float blo = b.lower(), bhi = b.upper();
  if (compare(blo, lo) > 0) lo = blo;
  if (compare(bhi, hi) > 0) hi = bhi;
  return RealBall::from_interval(lo, hi, p);
}

RealBall zero_ball(const Float& radius, mpfr_prec_t prec) {
  return RealBall(prec).inflated(radius);
}

// ---------------------------------------------------------------------------
// ComplexBall

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec) {}
ComplexBall::ComplexBall(RealBall re) : re_(std::move(re)), im_(re_.prec()) {}
ComplexBall::ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
ComplexBall::ComplexBall(long re, long im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

bool ComplexBall::contains(const ComplexBall& other) const {
  return re_.contains(other.re_) && im_.contains(other.im_);
}

bool ComplexBall::contains(const mpq_class& re, const mpq_class& im) const {
  return re_.contains(re) && im_.contains(im);
}

bool ComplexBall::overlaps(const ComplexBall& other) const {
  return re_.overlaps(other.re_) && im_.overlaps(other.im_);
}

Float ComplexBall::max_rad() const {
  if (!is_finite()) return Float::infinity(kRadiusBits);
  return compare(re_.rad(), im_.rad()) >= 0 ? re_.rad() : im_.rad();
}

ComplexBall ComplexBall::with_prec(mpfr_prec_t p) const {
  return ComplexBall(re_.with_prec(p), im_.with_prec(p));
}

ComplexBall ComplexBall::operator-() const { return ComplexBall(-re_, -im_); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  if (b.is_real()) return ComplexBall(a.re_ * b.re_, a.im_ * b.re_);
  if (a.is_real()) return ComplexBall(b.re_ * a.re_, b.im_ * a.re_);
  return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  if (b.is_real()) return ComplexBall(a.re_ / b.re_, a.im_ / b.re_);
  RealBall den = sqr(b.re_) + sqr(b.im_);
  RealBall nre = a.re_ * b.re_ + a.im_ * b.im_;
  RealBall nim = a.im_ * b.re_ - a.re_ * b.im_;
  return ComplexBall(nre / den, nim / den);
}

ComplexBall operator+(const ComplexBall& a, const RealBall& b) { return ComplexBall(a.re_ + b, a.im_); }
ComplexBall operator-(const ComplexBall& a, const RealBall& b) { return ComplexBall(a.re_ - b, a.im_); }
ComplexBall operator*(const ComplexBall& a, const RealBall& b) {
  return ComplexBall(a.re_ * b, a.im_ * b);
}
ComplexBall operator/(const ComplexBall& a, const RealBall& b) {
  return ComplexBall(a.re_ / b, a.im_ / b);
}
ComplexBall operator+(const ComplexBall& a, long b) { return ComplexBall(a.re_ + b, a.im_); }
ComplexBall operator-(const ComplexBall& a, long b) { return ComplexBall(a.re_ - b, a.im_); }
ComplexBall operator-(long a, const ComplexBall& b) { return ComplexBall(a - b.re_, -b.im_); }
ComplexBall operator*(const ComplexBall& a, long b) { return ComplexBall(a.re_ * b, a.im_ * b); }
ComplexBall operator/(const ComplexBall& a, long b) { return ComplexBall(a.re_ / b, a.im_ / b); }

std::string ComplexBall::to_string(int digits) const {
  return "(" + re_.to_string(digits) + ") + i(" + im_.to_string(digits) + ")";
}

ComplexBall conj(const ComplexBall& z) { return ComplexBall(z.re(), -z.im()); }
ComplexBall mul_i(const ComplexBall& z) { return ComplexBall(-z.im(), z.re()); }

namespace {

// Smallest and largest |x| over the ball, rounded outward.
std::pair<Float, Float> abs_range(const RealBall& x) {
  Float lo = x.lower(), hi = x.upper();
  mpfr_abs(lo.get(), lo.get(), MPFR_RNDN);
  mpfr_abs(hi.get(), hi.get(), MPFR_RNDN);
  Float big = compare(lo, hi) > 0 ? lo : hi;
  Float small = compare(lo, hi) > 0 ? hi : lo;
  if (x.contains_zero()) mpfr_set_zero(small.get(), 1);
  return {small, big};
}

}  // namespace

RealBall abs(const ComplexBall& z) {
  if (z.is_real()) return abs(z.re());
  mpfr_prec_t p = z.prec();
  if (!z.is_finite()) return RealBall::full_line(p);
  auto [a_lo, a_hi] = abs_range(z.re());
  auto [b_lo, b_hi] = abs_range(z.im());
  Float lo(p), hi(p), tmp(p);
  mpfr_sqr(lo.get(), a_lo.get(), MPFR_RNDD);
  mpfr_sqr(tmp.get(), b_lo.get(), MPFR_RNDD);
  mpfr_add(lo.get(), lo.get(), tmp.get(), MPFR_RNDD);
  mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), a_hi.get(), MPFR_RNDU);
  mpfr_sqr(tmp.get(), b_hi.get(), MPFR_RNDU);
  mpfr_add(hi.get(), hi.get(), tmp.get(), MPFR_RNDU);
  mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
  return RealBall::from_interval(lo, hi, p);
}

RealBall arg(const ComplexBall& z) {
  if (!z.re().is_positive() && z.im().contains_zero()) {
    throw DomainError("argument of a ball touching the cut (-inf, 0]");
  }
  return atan2(z.im(), z.re());
}

ComplexBall sqr(const ComplexBall& z) {
  if (z.is_real()) return ComplexBall(sqr(z.re()));
  return ComplexBall(sqr(z.re()) - sqr(z.im()), mul_2si(z.re() * z.im(), 1));
}

ComplexBall mul_2si(const ComplexBall& z, long k) {
  return ComplexBall(mul_2si(z.re(), k), mul_2si(z.im(), k));
}

ComplexBall exp(const ComplexBall& z) {
  if (z.is_real()) return ComplexBall(exp(z.re()));
  RealBall e = exp(z.re());
  auto [s, c] = sin_cos(z.im());
  return ComplexBall(e * c, e * s);
}

ComplexBall log(const ComplexBall& z) {
  RealBall a = arg(z);
  if (z.is_real()) return ComplexBall(log(z.re()), a);
  RealBall m2 = sqr(z.re()) + sqr(z.im());
  return ComplexBall(mul_2si(log(m2), -1), a);
}

ComplexBall sin(const ComplexBall& z) {
  if (z.is_real()) return ComplexBall(sin(z.re()));
  auto [s, c] = sin_cos(z.re());
  return ComplexBall(s * cosh(z.im()), c * sinh(z.im()));
}

ComplexBall cos(const ComplexBall& z) {
  if (z.is_real()) return ComplexBall(cos(z.re()));
  auto [s, c] = sin_cos(z.re());
  return ComplexBall(c * cosh(z.im()), -(s * sinh(z.im())));
}

ComplexBall pow(const ComplexBall& z, const ComplexBall& w) { return exp(w * log(z)); }

ComplexBall pow_neg(unsigned long n, const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  if (n == 1) return ComplexBall(RealBall(1, p));
  RealBall ln = log(RealBall(static_cast<long>(n), p));
  RealBall mag = exp(-(s.re() * ln));
  if (s.is_real()) return ComplexBall(mag);
  auto [sn, cs] = sin_cos(s.im() * ln);
  return ComplexBall(mag * cs, -(mag * sn));
}

ComplexBall hull(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(hull(a.re(), b.re()), hull(a.im(), b.im()));
}

ComplexBall inflated(const ComplexBall& z, const Float& r) {
  return ComplexBall(z.re().inflated(r), z.im().inflated(r));
}

}  // namespace zg

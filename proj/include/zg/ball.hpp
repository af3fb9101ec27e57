#pragma once

// Midpoint-radius ball arithmetic on top of MPFR.
//
// A RealBall represents the closed interval [mid - rad, mid + rad]. Every
// operation returns a ball that contains the exact image of its operand
// sets: midpoints are computed with correctly rounded MPFR calls and the
// radius absorbs both the propagated input radius and the rounding error.
// Radii are kept at kRadiusBits of precision and always rounded upward.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace zg {

inline constexpr mpfr_prec_t kRadiusBits = 30;

/// Owning wrapper around mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = 53);
  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  static Float from_double(double v, mpfr_prec_t prec = 53);
  static Float infinity(mpfr_prec_t prec = 53);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  mpq_class to_rational() const;

 private:
  void release();
  mpfr_t value_;
};

int compare(const Float& a, const Float& b);

class RealBall {
 public:
  /// Exact zero at the given midpoint precision.
  explicit RealBall(mpfr_prec_t prec = 64);
  RealBall(long value, mpfr_prec_t prec);

  static RealBall from_double(double value, mpfr_prec_t prec);
  static RealBall from_rational(const mpq_class& value, mpfr_prec_t prec);
  static RealBall from_float(const Float& value, mpfr_prec_t prec);
  static RealBall from_mid_rad(const Float& mid, const Float& rad, mpfr_prec_t prec);
  /// Smallest ball (up to rounding) containing [lo, hi].
  static RealBall from_interval(const Float& lo, const Float& hi, mpfr_prec_t prec);
  static RealBall full_line(mpfr_prec_t prec);
  static RealBall pi(mpfr_prec_t prec);
  static RealBall log2(mpfr_prec_t prec);
  /// 2^exponent, exact.
  static RealBall pow2(long exponent, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mid_.prec(); }
  const Float& mid() const { return mid_; }
  const Float& rad() const { return rad_; }

  bool is_finite() const { return mid_.is_finite() && rad_.is_finite(); }
  bool is_exact() const { return rad_.is_zero(); }

  /// Outward-rounded endpoints at midpoint precision.
  Float lower() const;
  Float upper() const;
  double mid_d() const { return mid_.to_double(); }
  double lower_d() const;
  double upper_d() const;

  bool contains(const mpq_class& x) const;
  bool contains(const RealBall& other) const;
  bool contains_zero() const;
  bool overlaps(const RealBall& other) const;
  bool is_positive() const;
  bool is_negative() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;

  RealBall with_prec(mpfr_prec_t prec) const;
  /// Widen the radius by a nonnegative amount.
  RealBall inflated(const Float& extra) const;
  RealBall inflated(const RealBall& magnitude_bound) const;

  RealBall operator-() const;
  RealBall& operator+=(const RealBall& o);
  RealBall& operator-=(const RealBall& o);
  RealBall& operator*=(const RealBall& o);
  RealBall& operator/=(const RealBall& o);

  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  friend RealBall operator+(const RealBall& a, long b);
  friend RealBall operator-(const RealBall& a, long b);
  friend RealBall operator-(long a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, long b);
  friend RealBall operator/(const RealBall& a, long b);
  friend RealBall operator/(long a, const RealBall& b);
  friend RealBall operator+(long a, const RealBall& b) { return b + a; }
  friend RealBall operator*(long a, const RealBall& b) { return b * a; }

  std::string to_string(int digits = 17) const;

 private:
  friend class BallAccess;
  Float mid_;
  Float rad_;
};

// True when every point of a is below (resp. at most) every point of b.
bool certainly_lt(const RealBall& a, const RealBall& b);
bool certainly_le(const RealBall& a, const RealBall& b);

RealBall abs(const RealBall& x);
RealBall sqr(const RealBall& x);
RealBall sqrt(const RealBall& x);
RealBall exp(const RealBall& x);
RealBall log(const RealBall& x);
RealBall sin(const RealBall& x);
RealBall cos(const RealBall& x);
std::pair<RealBall, RealBall> sin_cos(const RealBall& x);
RealBall sinh(const RealBall& x);
RealBall cosh(const RealBall& x);
RealBall atan(const RealBall& x);
/// Principal atan2; the caller guarantees the box avoids the cut x <= 0, y = 0
/// (otherwise the result is widened to [-pi, pi]).
RealBall atan2(const RealBall& y, const RealBall& x);
/// x^y for x > 0.
RealBall pow(const RealBall& x, const RealBall& y);
RealBall pow(const RealBall& x, long n);
RealBall mul_2si(const RealBall& x, long k);
RealBall hull(const RealBall& a, const RealBall& b);
RealBall min_ball(const RealBall& a, const RealBall& b);
RealBall max_ball(const RealBall& a, const RealBall& b);
/// Ball centred at zero with the given radius.
RealBall zero_ball(const Float& radius, mpfr_prec_t prec);

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 64);
  explicit ComplexBall(RealBall re);
  ComplexBall(RealBall re, RealBall im);
  ComplexBall(long re, long im, mpfr_prec_t prec);

  const RealBall& re() const { return re_; }
  const RealBall& im() const { return im_; }
  mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool is_real() const { return im_.is_exact() && im_.mid().is_zero(); }
  bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
  bool contains(const ComplexBall& other) const;
  bool contains(const mpq_class& re, const mpq_class& im) const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool overlaps(const ComplexBall& other) const;
  /// Largest coordinate radius, rounded up.
  Float max_rad() const;

  ComplexBall with_prec(mpfr_prec_t prec) const;
  ComplexBall operator-() const;

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator+(const ComplexBall& a, const RealBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const RealBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const RealBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const RealBall& b);
  friend ComplexBall operator+(const ComplexBall& a, long b);
  friend ComplexBall operator-(const ComplexBall& a, long b);
  friend ComplexBall operator-(long a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, long b);
  friend ComplexBall operator/(const ComplexBall& a, long b);
  friend ComplexBall operator*(const RealBall& a, const ComplexBall& b) { return b * a; }
  friend ComplexBall operator+(const RealBall& a, const ComplexBall& b) { return b + a; }
  friend ComplexBall operator*(long a, const ComplexBall& b) { return b * a; }
  friend ComplexBall operator+(long a, const ComplexBall& b) { return b + a; }

  ComplexBall& operator+=(const ComplexBall& o) { return *this = *this + o; }
  ComplexBall& operator-=(const ComplexBall& o) { return *this = *this - o; }
  ComplexBall& operator*=(const ComplexBall& o) { return *this = *this * o; }

  std::string to_string(int digits = 17) const;

 private:
  RealBall re_;
  RealBall im_;
};

ComplexBall conj(const ComplexBall& z);
/// Multiply by i.
ComplexBall mul_i(const ComplexBall& z);
RealBall abs(const ComplexBall& z);
/// Principal argument in (-pi, pi]; throws DomainError if the ball touches
/// the negative real axis or the origin.
RealBall arg(const ComplexBall& z);
ComplexBall sqr(const ComplexBall& z);
ComplexBall mul_2si(const ComplexBall& z, long k);
ComplexBall exp(const ComplexBall& z);
/// Principal logarithm; throws DomainError if the ball touches (-inf, 0].
ComplexBall log(const ComplexBall& z);
ComplexBall sin(const ComplexBall& z);
ComplexBall cos(const ComplexBall& z);
/// z^w = exp(w log z) with the principal logarithm.
ComplexBall pow(const ComplexBall& z, const ComplexBall& w);
/// n^(-s) for a positive integer n.
ComplexBall pow_neg(unsigned long n, const ComplexBall& s);
ComplexBall hull(const ComplexBall& a, const ComplexBall& b);
/// Add [-r, r] to both coordinates.
ComplexBall inflated(const ComplexBall& z, const Float& r);

}  // namespace zg

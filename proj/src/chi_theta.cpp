#include "zg/chi_theta.hpp"

#include <cmath>

#include "zg/error.hpp"
#include "zg/gamma.hpp"

namespace zg {

namespace {

RealBall half(mpfr_prec_t p) { return mul_2si(RealBall(1, p), -1); }

RealBall two_pi(mpfr_prec_t p) { return mul_2si(RealBall::pi(p), 1); }

// x^y for x > 0.
RealBall rpow(const RealBall& x, const RealBall& y) { return exp(y * log(x)); }

// log chi(s) for s off the cuts, using the upper half-plane form of log cos(pi s / 2).
ComplexBall log_chi_upper(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  RealBall pi = RealBall::pi(p);
  ComplexBall ipis = mul_i(s * pi);
  ComplexBall log_one_plus = log(exp(ipis) + 1);
  return s * log(two_pi(p)) + mul_2si(ipis, -1) - log_one_plus - log_gamma(s);
}

void require_off_cuts(const ComplexBall& s) {
  if (!s.im().contains_zero()) return;
  RealBall one(1, s.prec());
  if (s.re().is_positive() && certainly_lt(s.re(), one)) return;
  throw DomainError("s touches the cuts (-inf, 0] or [1, inf) of log chi");
}

}  // namespace

ComplexBall chi_value(const ComplexBall& s) {
  mpfr_prec_t p = s.prec() + 16;
  ComplexBall z = s.with_prec(p);
  RealBall pi = RealBall::pi(p);
  ComplexBall out(p);
  if (z.re().mid().sign() >= 0 && mpfr_cmp_d(z.re().mid().get(), 0.5) >= 0) {
    ComplexBall num = exp(z * log(two_pi(p)) - log_gamma(z));
    ComplexBall den = cos(mul_2si(z * pi, -1)) * 2;
    out = num / den;
  } else {
    ComplexBall one_minus = 1 - z;
    ComplexBall scale = exp(z * RealBall::log2(p) + (z - 1) * log(pi) + log_gamma(one_minus));
    out = scale * sin(mul_2si(z * pi, -1));
  }
  return out.with_prec(s.prec());
}

ComplexBall log_chi(const ComplexBall& s) {
  require_off_cuts(s);
  mpfr_prec_t p = s.prec() + 16;
  ComplexBall z = s.with_prec(p);
  ComplexBall out = z.im().is_negative() ? conj(log_chi_upper(conj(z))) : log_chi_upper(z);
  return out.with_prec(s.prec());
}

ChiValue chi(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  if (!s.is_finite()) throw DomainError("chi argument is not finite");
  RealBall margin = s.max_rad().is_zero() ? RealBall::pow2(-10, p)
                                          : RealBall::pow2(-10, p).inflated(s.max_rad()).inflated(s.max_rad());
  RealBall margin_hi = RealBall::from_float(margin.upper(), p);
  long centre = std::lround(s.re().mid_d());
  for (long n = centre - 1; n <= centre + 1; ++n) {
    bool pole = n >= 1 && (n % 2 != 0);
    bool zero = n <= 0 && (n % 2 == 0);
    if (!pole && !zero) continue;
    RealBall d = abs(s - ComplexBall(n, 0, p));
    if (!certainly_le(margin_hi, d)) {
      throw DomainError(std::string("s is too close to the ") + (pole ? "pole" : "zero") +
                        " of chi at " + std::to_string(n));
    }
  }
  ChiValue out{chi_value(s), std::nullopt};
  try {
    out.log_branch = log_chi(s);
  } catch (const DomainError&) {
  }
  return out;
}

RealBall chi_bound_sigma_pos(const RealBall& sigma, const RealBall& t) {
  mpfr_prec_t p = std::max(sigma.prec(), t.prec());
  RealBall two_pi_e = two_pi(p) * exp(RealBall(1, p));
  RealBall m2 = sqr(sigma) + sqr(t);
  return rpow(two_pi_e, sigma) * exp((half(p) - sigma) * mul_2si(log(m2), -1));
}

RealBall chi_bound_large_modulus(const RealBall& sigma, const RealBall& t) {
  RealBall m2 = sqr(sigma) + sqr(t);
  return exp(mul_2si(log(m2), -2));
}

RealBall chi_bound_alt_form(const RealBall& sigma, const RealBall& t) {
  mpfr_prec_t p = std::max(sigma.prec(), t.prec());
  RealBall m2 = sqr(sigma) + sqr(t);
  RealBall c = sqr(two_pi(p)) * exp(RealBall(2, p));
  return exp(mul_2si(log(m2), -2)) * rpow(c / m2, mul_2si(sigma, -1));
}

RealBall chi_bound_left(const RealBall& sigma, const RealBall& t) {
  mpfr_prec_t p = std::max(sigma.prec(), t.prec());
  RealBall one_minus = 1 - sigma;
  RealBall q = sqr(one_minus) + sqr(t);
  RealBall e = mul_2si(RealBall(1, p), -2) - mul_2si(sigma, -1);
  return RealBall(6, p) / rpow(two_pi(p), one_minus) * rpow(q, e);
}

TaggedBound chi_upper_bound(const ComplexBall& s) {
  const RealBall& sigma = s.re();
  const RealBall& t = s.im();
  mpfr_prec_t p = s.prec();
  RealBall h = half(p);
  if (sigma.is_positive() && certainly_lt(h, t)) {
    TaggedBound best{chi_bound_sigma_pos(sigma, t), "prop2.3-chi-sigma-pos"};
    RealBall two_pi_e = two_pi(p) * exp(RealBall(1, p));
    if (certainly_le(two_pi_e, abs(s))) {
      RealBall alt = chi_bound_large_modulus(sigma, t);
      if (compare(alt.upper(), best.value.upper()) < 0) best = {alt, "prop2.3-chi-large-modulus"};
    }
    return best;
  }
  if (sigma.is_nonpositive() && certainly_le(h, t)) {
    return {chi_bound_left(sigma, t), "prop2.4-chi-left"};
  }
  throw DomainError("no chi bound applies: need sigma > 0, t > 1/2 or sigma <= 0, t >= 1/2");
}

ComplexBall theta_asymptotic(const ComplexBall& t) {
  mpfr_prec_t p = t.prec();
  RealBall one(1, p);
  if (!certainly_le(one, t.re()) || !certainly_lt(t.im(), half(p))) {
    throw DomainError("asymptotic theta needs Re t >= 1 and Im t < 1/2");
  }
  RealBall pi = RealBall::pi(p);
  ComplexBall s = mul_i(t) + half(p);
  ComplexBall main = mul_2si(t * log(s / two_pi(p)), -1);
  main = main - s * mul_2si(pi, -2) + mul_i(s) * half(p);
  RealBall err = RealBall::from_double(0.15, p) / t.re();
  return inflated(main, err.upper());
}

ComplexBall theta(const ComplexBall& t) {
  mpfr_prec_t p = t.prec();
  if (t.re().contains_zero() && !(certainly_lt(-half(p), t.im()) && certainly_lt(t.im(), half(p)))) {
    throw DomainError("theta argument touches the cuts +/- i[1/2, inf)");
  }
  ComplexBall s = mul_i(t) + half(p);
  ComplexBall value = mul_i(log_chi(s)) * half(p);
  RealBall one(1, p);
  if (certainly_le(one, t.re()) && certainly_lt(t.im(), half(p))) {
    RealBall err = RealBall::from_double(0.15, p) / t.re();
    if (compare(value.max_rad(), err.upper()) > 0) {
      ComplexBall asym = theta_asymptotic(t);
      if (compare(asym.max_rad(), value.max_rad()) < 0) value = asym;
    }
  }
  if (t.is_real() && value.im().contains_zero()) return ComplexBall(value.re());
  return value;
}

ComplexBall theta(const RealBall& t) { return theta(ComplexBall(t)); }

RealBall theta_growth_bound(const ComplexBall& t) {
  mpfr_prec_t p = t.prec();
  RealBall m = abs(t);
  if (!certainly_le(RealBall(4, p), m) || !certainly_le(RealBall(1, p), abs(t.re()))) {
    throw DomainError("theta growth bound needs |t| >= 4 and |Re t| >= 1");
  }
  return mul_2si(m * log(m), 1);
}

}  // namespace zg

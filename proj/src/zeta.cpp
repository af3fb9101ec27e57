#include "zg/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "zg/error.hpp"
#include "zg/gamma.hpp"
#include "zg/rs.hpp"

namespace zg {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

mpfr_prec_t guard_bits(unsigned long terms) {
  return 8 + static_cast<mpfr_prec_t>(std::ceil(std::log2(static_cast<double>(terms) + 2)));
}

RealBall rpow(const RealBall& x, const RealBall& y) { return exp(y * log(x)); }

double ball_upper_abs(const ComplexBall& z) {
  return std::hypot(std::max(std::fabs(z.re().lower_d()), std::fabs(z.re().upper_d())),
                    std::max(std::fabs(z.im().lower_d()), std::fabs(z.im().upper_d())));
}

// Smallest integer x with x^(1-sigma)/(sigma-1) (1 + (sigma-1)/x) <= eps, or 0 if above cap.
unsigned long series_cutoff(double sigma, double log_eps, unsigned long cap) {
  auto log_bound = [&](double x) {
    return (1 - sigma) * std::log(x) - std::log(sigma - 1) + std::log1p((sigma - 1) / x);
  };
  double guess = std::exp((log_eps + std::log(sigma - 1)) / (1 - sigma));
  if (!(guess < static_cast<double>(cap))) return 0;
  unsigned long x = std::max<unsigned long>(1, static_cast<unsigned long>(guess * 0.9));
  while (log_bound(static_cast<double>(x)) > log_eps) {
    if (++x > cap) return 0;
  }
  return x;
}

}  // namespace

ComplexBall partial_sum_range(const ComplexBall& s, unsigned long first, unsigned long last) {
  mpfr_prec_t out = s.prec();
  if (first < 1) first = 1;
  if (last < first) return ComplexBall(out);
  ComplexBall z = s.with_prec(out + guard_bits(last - first + 1));
  ComplexBall sum(z.prec());
  for (unsigned long n = first; n <= last; ++n) sum += pow_neg(n, z);
  return sum.with_prec(out);
}

ComplexBall partial_sum_n(const ComplexBall& s, unsigned long count) {
  return partial_sum_range(s, 1, count);
}

ComplexBall partial_sum(const ComplexBall& s, const mpq_class& x) {
  if (x < 1) return ComplexBall(s.prec());
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (!f.fits_ulong_p()) throw DomainError("partial sum cutoff too large");
  return partial_sum_n(s, f.get_ui());
}

const char* to_string(TailBranch b) {
  return b == TailBranch::seven_s_bound ? "seven_s_bound" : "sigma_gt1_bound";
}

RealBall tail_bound_seven_s(const ComplexBall& s, const mpq_class& x) {
  mpfr_prec_t p = s.prec();
  RealBall xb = RealBall::from_rational(x, p);
  RealBall abs_s = abs(s);
  if (!s.re().is_nonnegative()) throw DomainError("7|s| tail bound needs sigma >= 0");
  if (!certainly_le(RealBall(2, p), abs(s - 1))) throw DomainError("7|s| tail bound needs |s - 1| >= 2");
  if (x <= 0 || !certainly_le(xb, abs_s)) throw DomainError("7|s| tail bound needs 0 < x <= |s|");
  return abs_s * 7 * exp(-(s.re() * log(xb)));
}

RealBall tail_bound_sigma_gt1(const ComplexBall& s, const mpq_class& x) {
  mpfr_prec_t p = s.prec();
  if (!certainly_lt(RealBall(1, p), s.re())) throw DomainError("tail bound needs sigma > 1");
  if (x <= 0) throw DomainError("tail bound needs x > 0");
  RealBall xb = RealBall::from_rational(x, p);
  RealBall sm1 = s.re() - 1;
  return exp(-(sm1 * log(xb))) / sm1 * (1 + sm1 / xb);
}

ZetaTail zeta_tail_bound(const ComplexBall& s, const mpq_class& x) {
  std::optional<ZetaTail> best;
  try {
    best = ZetaTail{x, tail_bound_seven_s(s, x), TailBranch::seven_s_bound};
  } catch (const DomainError&) {
  }
  try {
    RealBall b = tail_bound_sigma_gt1(s, x);
    if (!best || compare(b.upper(), best->bound.upper()) < 0) {
      best = ZetaTail{x, b, TailBranch::sigma_gt1_bound};
    }
  } catch (const DomainError&) {
  }
  if (!best) throw DomainError("no tail bound applies: need sigma > 1, or sigma >= 0, |s-1| >= 2, 0 < x <= |s|");
  return *best;
}

EulerMaclaurinPlan plan_euler_maclaurin(double sigma, double t, unsigned long m, double target_log2) {
  const double log_target = target_log2 * kLn2;
  const double log_2pi = std::log(2 * M_PI);
  EulerMaclaurinPlan best;
  double best_cost = 1e300;
  double n_real = static_cast<double>(m + 1);
  for (int step = 0; step < 200 && n_real < 5e6; ++step) {
    unsigned long N = static_cast<unsigned long>(std::ceil(n_real));
    double logN = std::log(static_cast<double>(N));
    double poch = 0;
    double prev = 1e300;
    for (unsigned long M = 1; M <= 600; ++M) {
      double j0 = static_cast<double>(2 * M - 2), j1 = j0 + 1;
      poch += 0.5 * std::log((sigma + j0) * (sigma + j0) + t * t);
      poch += 0.5 * std::log((sigma + j1) * (sigma + j1) + t * t);
      double denom = sigma + 2.0 * static_cast<double>(M) - 1;
      if (denom <= 0.5) continue;
      double logE = std::log(4.0) + poch - 2.0 * static_cast<double>(M) * log_2pi +
                    (1 - sigma - 2.0 * static_cast<double>(M)) * logN - std::log(denom);
      if (logE <= log_target) {
        double cost = static_cast<double>(N - m - 1) + 4.0 * static_cast<double>(M);
        if (cost < best_cost) {
          best_cost = cost;
          best = {N, M, true};
        }
        break;
      }
      if (logE > prev + 1.0) break;
      prev = std::min(prev, logE);
    }
    n_real = std::max(n_real + 1, n_real * 1.05);
    if (best.feasible && static_cast<double>(N - m - 1) > best_cost) break;
  }
  if (!best.feasible) best = {static_cast<unsigned long>(std::ceil(n_real)), 600, false};
  return best;
}

ComplexBall zeta_tail_value(const ComplexBall& s, unsigned long m, double target_log2) {
  mpfr_prec_t out = s.prec();
  EulerMaclaurinPlan plan = plan_euler_maclaurin(s.re().mid_d(), s.im().mid_d(), m, target_log2);
  const unsigned long N = plan.N, M = plan.M;
  mpfr_prec_t p = out + guard_bits(N + M);
  ComplexBall z = s.with_prec(p);
  ComplexBall direct = partial_sum_range(z, m + 1, N - 1);
  ComplexBall Ns = pow_neg(N, z);
  RealBall Nb(static_cast<long>(N), p);
  ComplexBall value = direct + Ns * Nb / (z - 1) + mul_2si(Ns, -1);
  ComplexBall q = z * Ns / Nb;
  RealBall N2 = sqr(Nb);
  mpq_class factorial = 1;
  for (unsigned long k = 1; k <= M; ++k) {
    factorial *= mpq_class((2 * k - 1) * (2 * k));
    RealBall c = RealBall::from_rational(bernoulli(static_cast<long>(2 * k)) / factorial, p);
    value += q * c;
    if (k < M) q = q * ((z + static_cast<long>(2 * k - 1)) * (z + static_cast<long>(2 * k))) / N2;
  }
  RealBall poch(1, p);
  for (unsigned long j = 0; j < 2 * M; ++j) poch *= abs(z + static_cast<long>(j));
  RealBall denom = z.re() + static_cast<long>(2 * M - 1);
  if (!denom.is_positive()) return ComplexBall(RealBall::full_line(out), RealBall::full_line(out));
  RealBall two_pi = mul_2si(RealBall::pi(p), 1);
  RealBall rem = poch * 4 / pow(two_pi, static_cast<long>(2 * M)) *
                 exp((1 - z.re() - static_cast<long>(2 * M)) * log(Nb)) / denom;
  return inflated(value, rem.upper()).with_prec(out);
}

const char* to_string(ZetaRoute r) {
  switch (r) {
    case ZetaRoute::series: return "series";
    case ZetaRoute::functional_equation: return "functional_equation";
    case ZetaRoute::riemann_siegel: return "riemann_siegel";
    default: return "euler_maclaurin";
  }
}

ComplexBall zeta_via_R(const ComplexBall& s, const Precision& prec) {
  mpfr_prec_t p = s.prec();
  if (!s.re().is_positive() || !certainly_lt(s.re(), RealBall(1, p))) {
    throw DomainError("R identity route needs 0 < sigma < 1");
  }
  if (s.im().is_negative()) return conj(zeta_via_R(conj(s), prec));
  ComplexBall w = 1 - conj(s);
  ComplexBall r = R_eval(s, prec);
  ComplexBall rw = (compare(w.re().mid(), s.re().mid()) == 0 && w.re().is_exact() && s.re().is_exact()) ? r : R_eval(w, prec);
  return r + chi_value(s) * conj(rw);
}

namespace {

ZetaResult zeta_eval_at(const ComplexBall& z, const Precision& prec, int depth) {
  mpfr_prec_t p = z.prec();
  const double target_log2 = static_cast<double>(prec.target_log2());
  auto meets = [&](const ComplexBall& v) { return compare(v.max_rad(), prec.target_abs_error) <= 0; };
  const double sig_lo = z.re().lower_d(), sig_hi = z.re().upper_d();
  const double t_mid = z.im().mid_d();

  EulerMaclaurinPlan em = plan_euler_maclaurin(z.re().mid_d(), t_mid, 0, target_log2 - 2);

  if (sig_lo >= 1.1) {
    double em_cost = static_cast<double>(em.N) + 4.0 * static_cast<double>(em.M);
    unsigned long x = series_cutoff(sig_lo, (target_log2 - 1) * kLn2,
                                    static_cast<unsigned long>(std::min(2e4, em_cost + 1)));
    if (x > 0) {
      mpq_class xq(static_cast<long>(x));
      ComplexBall value = inflated(partial_sum(z, xq), tail_bound_sigma_gt1(z, xq).upper());
      return {value, ZetaRoute::series, meets(value), false};
    }
  }
  if (sig_hi <= 0 && depth == 0 && certainly_le(mul_2si(RealBall(1, p), -1), abs(z))) {
    ComplexBall c = chi_value(z);
    long scale_log2 = std::max(0L, static_cast<long>(std::ceil(std::log2(ball_upper_abs(c)))));
    Float inner_target(64);
    mpfr_set_ui_2exp(inner_target.get(), 1, prec.target_log2() - 1 - scale_log2, MPFR_RNDN);
    Precision inner(static_cast<long>(p) + scale_log2, inner_target);
    ZetaResult r = zeta_eval_at((1 - z).with_prec(inner.working_bits), inner, depth + 1);
    ComplexBall value = c * r.value;
    return {value, ZetaRoute::functional_equation, meets(value), r.outside_catalogue};
  }
  if (sig_lo > 0 && sig_hi < 1 && std::fabs(z.im().lower_d()) >= 16 * M_PI &&
      !z.im().contains_zero()) {
    try {
      ComplexBall value = zeta_via_R(z, prec);
      if (meets(value)) return {value, ZetaRoute::riemann_siegel, true, false};
    } catch (const DomainError&) {
    }
  }
  ComplexBall value = zeta_tail_value(z, 0, target_log2 - 1);
  return {value, ZetaRoute::euler_maclaurin, meets(value), true};
}

}  // namespace

ZetaResult zeta_eval(const ComplexBall& s, const Precision& prec) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(s.prec(), prec.working_bits);
  ComplexBall z = s.with_prec(p);
  RealBall margin = RealBall::pow2(-20, p).inflated(z.max_rad());
  if (!certainly_le(margin, abs(z - 1))) throw PoleError("s is within 2^-20 + rad of the pole at 1");
  ZetaResult r = zeta_eval_at(z, prec, 0);
  for (int attempt = 0; attempt < 2 && !r.meets_target; ++attempt) {
    p *= 2;
    ZetaResult retry = zeta_eval_at(s.with_prec(p), prec.with_bits(p), 0);
    if (compare(retry.value.max_rad(), r.value.max_rad()) < 0) r = retry;
  }
  return r;
}

ComplexBall zeta(const ComplexBall& s, const Precision& prec) { return zeta_eval(s, prec).value; }

ComplexBall zeta(const ComplexBall& s) {
  long bits = static_cast<long>(s.prec());
  Float target(64);
  mpfr_set_ui_2exp(target.get(), 1, -(bits - 8), MPFR_RNDN);
  return zeta_eval(s, Precision(bits, target)).value;
}

RealBall zeta_bound_right(const ComplexBall& s) {
  if (!certainly_le(RealBall(2, s.prec()), s.re())) throw DomainError("bound needs sigma >= 2");
  return RealBall(2, s.prec());
}

RealBall zeta_bound_left(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  const RealBall& sigma = s.re();
  if (!certainly_le(sigma, RealBall(-1, p))) throw DomainError("bound needs sigma <= -1");
  if (!certainly_le(mul_2si(RealBall(1, p), -1), abs(s.im()))) throw DomainError("bound needs |t| >= 1/2");
  RealBall two_pi = mul_2si(RealBall::pi(p), 1);
  RealBall q = sqr(1 - sigma) + sqr(s.im());
  RealBall e = mul_2si(RealBall(1, p), -2) - mul_2si(sigma, -1);
  return rpow(two_pi, sigma) * rpow(q, e) * 2;
}

RealBall zeta_bound_strip(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  const RealBall& sigma = s.re();
  if (!sigma.is_positive() || !certainly_le(sigma, RealBall(2, p))) throw DomainError("bound needs 0 < sigma <= 2");
  if (!certainly_le(RealBall(2, p), s.im())) throw DomainError("bound needs t >= 2");
  return 1 + s.im() / sigma;
}

RealBall zeta_bound_three_t(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  if (!certainly_le(mul_2si(RealBall(1, p), -1), s.re())) throw DomainError("bound needs sigma >= 1/2");
  if (!certainly_le(RealBall(2, p), s.im())) throw DomainError("bound needs t >= 2");
  return s.im() * 3;
}

TaggedBound zeta_region_bound(const ComplexBall& s) {
  std::optional<TaggedBound> best;
  auto consider = [&](RealBall (*f)(const ComplexBall&), const char* tag) {
    try {
      RealBall b = f(s);
      if (!best || compare(b.upper(), best->value.upper()) < 0) best = TaggedBound{b, tag};
    } catch (const DomainError&) {
    }
  };
  consider(zeta_bound_right, "prop4.1-right-halfplane");
  consider(zeta_bound_left, "prop4.2-left-halfplane");
  consider(zeta_bound_strip, "prop4.3-critical-strip");
  consider(zeta_bound_three_t, "prop4.4-sigma-half");
  if (!best) throw DomainError("no zeta region bound applies at s");
  return *best;
}

}  // namespace zg

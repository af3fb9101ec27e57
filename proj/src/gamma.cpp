#include "zg/gamma.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "zg/error.hpp"

namespace zg {

namespace {

std::shared_mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_table{mpq_class(1)};

void extend_bernoulli(long n) {
  std::vector<mpq_class>& b = bernoulli_table;
  for (long m = static_cast<long>(b.size()); m <= n; ++m) {
    // sum_{k=0}^{m} binom(m+1, k) B_k = 0
    mpq_class acc = 0;
    mpz_class binom = 1;
    for (long k = 0; k < m; ++k) {
      acc += mpq_class(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class bm = -acc / mpq_class(m + 1);
    bm.canonicalize();
    b.push_back(bm);
  }
}

double log_abs_bernoulli(long n) {
  mpq_class b = abs(bernoulli(n));
  Float f(64);
  mpfr_set_q(f.get(), b.get_mpq_t(), MPFR_RNDN);
  mpfr_log(f.get(), f.get(), MPFR_RNDN);
  return f.to_double();
}

// log of the remainder bound as a double, for planning only.
double log_remainder_estimate(double abs_z, long K) {
  double k = static_cast<double>(K);
  return log_abs_bernoulli(2 * K + 2) - std::log((2 * k - 1) * (2 * k + 2)) -
         (2 * k + 1) * std::log(abs_z) + std::log1p((2 * k + 1) / 2 * std::sqrt(M_PI / k));
}

// sum_{k<m} Log(z + k), computed as one logarithm of the product plus a
// winding term 2 pi i n fixed from double-precision arguments.
ComplexBall shift_log_sum(const ComplexBall& z, long m) {
  ComplexBall prod = z;
  double arg_sum = std::atan2(z.im().mid_d(), z.re().mid_d());
  for (long k = 1; k < m; ++k) {
    ComplexBall f = z + k;
    prod *= f;
    arg_sum += std::atan2(f.im().mid_d(), f.re().mid_d());
  }
  bool fallback = !prod.is_finite() || (prod.im().contains_zero() && !prod.re().is_positive());
  if (!fallback) {
    ComplexBall lp = log(prod);
    double turns = (arg_sum - lp.im().mid_d()) / (2 * M_PI);
    long n = std::lround(turns);
    if (std::fabs(turns - static_cast<double>(n)) < 0.25) {
      RealBall wind = mul_2si(RealBall::pi(z.prec()), 1) * n;
      return ComplexBall(lp.re(), lp.im() + wind);
    }
  }
  ComplexBall sum = log(z);
  for (long k = 1; k < m; ++k) sum += log(z + k);
  return sum;
}

}  // namespace

mpq_class bernoulli(long n) {
  if (n < 2 || n % 2 != 0) throw DomainError("Bernoulli index must be even and at least 2");
  {
    std::shared_lock lock(bernoulli_mutex);
    if (static_cast<long>(bernoulli_table.size()) > n) return bernoulli_table[n];
  }
  std::unique_lock lock(bernoulli_mutex);
  extend_bernoulli(n);
  return bernoulli_table[n];
}

RealBall stirling_remainder_bound(const RealBall& abs_z_lower, long K) {
  if (K < 1) throw DomainError("Stirling series needs K >= 1");
  mpfr_prec_t p = abs_z_lower.prec();
  RealBall zl = RealBall::from_float(abs_z_lower.lower(), p);
  if (!zl.is_positive()) throw DomainError("|z| lower bound must be positive");
  RealBall b = RealBall::from_rational(abs(bernoulli(2 * K + 2)), p);
  RealBall den = RealBall((2 * K - 1) * (2 * K + 2), p) * pow(zl, 2 * K + 1);
  RealBall factor = 1 + RealBall(2 * K + 1, p) / 2 * sqrt(RealBall::pi(p) / K);
  RealBall r = b / den * factor;
  return RealBall::from_float(r.upper(), p);
}

ComplexBall stirling_series(const ComplexBall& z, long K) {
  mpfr_prec_t p = z.prec();
  ComplexBall w = ComplexBall(RealBall(1, p)) / z;
  ComplexBall w2 = sqr(w);
  ComplexBall sum(p);
  ComplexBall wp = w;
  for (long n = 1; n <= K; ++n) {
    RealBall c = RealBall::from_rational(bernoulli(2 * n), p) / ((2 * n - 1) * (2 * n));
    sum += wp * c;
    if (n < K) wp *= w2;
  }
  return sum;
}

MuResult stirling_mu(const ComplexBall& z, long K) {
  if (!z.re().is_positive()) throw DomainError("Stirling series needs Re z > 0");
  RealBall rk = stirling_remainder_bound(abs(z), K);
  return {inflated(stirling_series(z, K), rk.upper()), rk};
}

StirlingPlan plan_log_gamma(const ComplexBall& z, long target_bits) {
  double re_lo = z.re().lower_d();
  double im_abs_lo = z.im().contains_zero()
                         ? 0.0
                         : std::min(std::fabs(z.im().lower_d()), std::fabs(z.im().upper_d()));
  double log_target = -static_cast<double>(target_bits) * std::log(2.0);
  long m = re_lo > 0 ? 0 : static_cast<long>(std::floor(-re_lo)) + 1;
  for (;; ++m) {
    double re = re_lo + static_cast<double>(m);
    double w = re > 0 ? std::hypot(re, im_abs_lo) : im_abs_lo;
    if (re <= 0 || w < 10) continue;
    long kmax = std::min<long>(40, std::max<long>(1, std::lround(M_PI * w)));
    for (long K = 1; K <= kmax; ++K) {
      if (w < static_cast<double>(K)) break;
      if (log_remainder_estimate(w, K) <= log_target) return {m, K};
    }
  }
}

ComplexBall log_gamma(const ComplexBall& z) {
  if (!z.re().is_positive() && z.im().contains_zero()) {
    throw DomainError("log Gamma argument touches the cut (-inf, 0]");
  }
  mpfr_prec_t out = z.prec();
  mpfr_prec_t p = out + 16;
  ComplexBall zz = z.with_prec(p);
  StirlingPlan plan = plan_log_gamma(zz, static_cast<long>(out) + 4);
  ComplexBall w = zz + plan.shift;
  RealBall half = mul_2si(RealBall(1, p), -1);
  RealBall log_sqrt_2pi = mul_2si(log(mul_2si(RealBall::pi(p), 1)), -1);
  ComplexBall result = (w - half) * log(w) - w + log_sqrt_2pi + stirling_mu(w, plan.K).mu;
  if (plan.shift > 0) result -= shift_log_sum(zz, plan.shift);
  return result.with_prec(out);
}

GammaBounds gamma_magnitude_bounds(const RealBall& sigma, const RealBall& t) {
  mpfr_prec_t p = std::max(sigma.prec(), t.prec());
  if (!sigma.is_positive()) throw DomainError("Gamma bound needs sigma > 0");
  RealBall m2 = sqr(sigma) + sqr(t);
  if (!certainly_le(RealBall(1, p), m2)) throw DomainError("Gamma bound needs |s| >= 1");
  RealBall pi = RealBall::pi(p);
  RealBall decay = exp(-(pi * abs(t)) / 2);
  RealBall growth = exp((sigma / 2 - mul_2si(RealBall(1, p), -2)) * log(m2));
  RealBall common = decay * growth;
  return {common * exp(-sigma) * 2, common * 3};
}

}  // namespace zg

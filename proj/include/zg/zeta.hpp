#pragma once

#include <gmpxx.h>

#include <string>

#include "zg/ball.hpp"
#include "zg/chi_theta.hpp"
#include "zg/region.hpp"

namespace zg {

/// sum_{n=1}^{floor(x)} n^(-s); the empty sum is exactly 0.
ComplexBall partial_sum(const ComplexBall& s, const mpq_class& x);
ComplexBall partial_sum_n(const ComplexBall& s, unsigned long count);
/// sum_{n=first}^{last} n^(-s).
ComplexBall partial_sum_range(const ComplexBall& s, unsigned long first, unsigned long last);

enum class TailBranch { seven_s_bound, sigma_gt1_bound };

const char* to_string(TailBranch b);

struct ZetaTail {
  mpq_class x;
  RealBall bound;
  TailBranch branch_used;
};

/// 7 |s| x^(-sigma); needs sigma >= 0, |s - 1| >= 2, 0 < x <= |s|.
RealBall tail_bound_seven_s(const ComplexBall& s, const mpq_class& x);
/// x^(1 - sigma) / (sigma - 1) (1 + (sigma - 1) / x); needs sigma > 1, x > 0.
RealBall tail_bound_sigma_gt1(const ComplexBall& s, const mpq_class& x);

/// Smaller of the applicable tail bounds.
ZetaTail zeta_tail_bound(const ComplexBall& s, const mpq_class& x);

struct EulerMaclaurinPlan {
  unsigned long N = 1;
  unsigned long M = 1;
  bool feasible = false;
};

/// Choose N > m and M so the Euler-Maclaurin remainder is below 2^target_log2.
EulerMaclaurinPlan plan_euler_maclaurin(double sigma, double t, unsigned long m, double target_log2);

/// zeta(s) - sum_{n<=m} n^(-s) by Euler-Maclaurin summation with a rigorous remainder.
ComplexBall zeta_tail_value(const ComplexBall& s, unsigned long m, double target_log2);

enum class ZetaRoute { series, functional_equation, riemann_siegel, euler_maclaurin };

const char* to_string(ZetaRoute r);

struct ZetaResult {
  ComplexBall value;
  ZetaRoute route;
  bool meets_target;
  /// True when no formula of the bound catalogue backs the route.
  bool outside_catalogue;
};

/// Enclosure of zeta(s). Throws PoleError when |s - 1| < 2^-20 + rad.
ZetaResult zeta_eval(const ComplexBall& s, const Precision& prec);
ComplexBall zeta(const ComplexBall& s, const Precision& prec);
ComplexBall zeta(const ComplexBall& s);

/// zeta(s) = R(s) + chi(s) conj(R(1 - conj s)) for 0 < sigma < 1, |t| >= 16 pi.
ComplexBall zeta_via_R(const ComplexBall& s, const Precision& prec);

/// |zeta| < 2 for sigma >= 2.
RealBall zeta_bound_right(const ComplexBall& s);
/// 2 (2 pi)^sigma ((1 - sigma)^2 + t^2)^(1/4 - sigma/2) for sigma <= -1, |t| >= 1/2.
RealBall zeta_bound_left(const ComplexBall& s);
/// 1 + t / sigma for 0 < sigma <= 2, t >= 2.
RealBall zeta_bound_strip(const ComplexBall& s);
/// 3 t for sigma >= 1/2, t >= 2.
RealBall zeta_bound_three_t(const ComplexBall& s);

/// Tightest applicable region bound for |zeta(s)|, tagged with the bound id.
TaggedBound zeta_region_bound(const ComplexBall& s);

}  // namespace zg

#pragma once

#include <gmpxx.h>

#include "zg/ball.hpp"

namespace zg {

/// Exact Bernoulli number B_n for even n >= 2 (cached).
mpq_class bernoulli(long n);

struct MuResult {
  ComplexBall mu;
  RealBall remainder_radius;
};

/// Upper bound for |r_K(z)| given a lower bound for |z|.
RealBall stirling_remainder_bound(const RealBall& abs_z_lower, long K);

/// sum_{n=1}^{K} B_{2n} / ((2n-1) 2n z^{2n-1}), without the remainder.
ComplexBall stirling_series(const ComplexBall& z, long K);

/// Truncated Stirling series for mu(z) = log Gamma(z) - (z - 1/2) log z + z - log sqrt(2 pi),
/// with the remainder folded into the radius. Requires Re z > 0.
MuResult stirling_mu(const ComplexBall& z, long K);

/// Plan used by log_gamma: shift m and series length K.
struct StirlingPlan {
  long shift = 0;
  long K = 1;
};

StirlingPlan plan_log_gamma(const ComplexBall& z, long target_bits);

/// log Gamma on C minus (-inf, 0], real on the positive axis.
ComplexBall log_gamma(const ComplexBall& z);

struct GammaBounds {
  RealBall lower;
  RealBall upper;
};

/// Two-sided bound for |Gamma(sigma + i t)|, valid for sigma > 0 and |s| >= 1.
GammaBounds gamma_magnitude_bounds(const RealBall& sigma, const RealBall& t);

}  // namespace zg

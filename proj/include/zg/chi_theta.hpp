#pragma once

#include <optional>
#include <string>

#include "zg/ball.hpp"

namespace zg {

struct ChiValue {
  ComplexBall value;
  /// Branch of log chi with log chi(1/2) = 0; empty when s is not certifiably
  /// off the cuts (-inf, 0] and [1, inf).
  std::optional<ComplexBall> log_branch;
};

/// chi(s) = (2 pi)^s / (2 Gamma(s) cos(pi s / 2)) without pole or zero screening.
ComplexBall chi_value(const ComplexBall& s);

/// Analytic log chi on C minus (-inf, 0] and [1, inf), zero at s = 1/2.
ComplexBall log_chi(const ComplexBall& s);

/// Throws DomainError if s is within 2 rad + 2^-10 of a pole or zero of chi.
ChiValue chi(const ComplexBall& s);

struct TaggedBound {
  RealBall value;
  std::string tag;
};

/// (2 pi e)^sigma |s|^(1/2 - sigma), for sigma > 0, t > 1/2.
RealBall chi_bound_sigma_pos(const RealBall& sigma, const RealBall& t);
/// (sigma^2 + t^2)^(1/4), for sigma > 0, t > 1/2, |s| >= 2 pi e.
RealBall chi_bound_large_modulus(const RealBall& sigma, const RealBall& t);
/// (sigma^2 + t^2)^(1/4) (4 pi^2 e^2 / (sigma^2 + t^2))^(sigma / 2), for sigma > 0, t > 1/2.
RealBall chi_bound_alt_form(const RealBall& sigma, const RealBall& t);
/// 6 / (2 pi)^(1 - sigma) ((1 - sigma)^2 + t^2)^(1/4 - sigma/2), for sigma <= 0, t >= 1/2.
RealBall chi_bound_left(const RealBall& sigma, const RealBall& t);

/// Smallest applicable upper bound for |chi(s)|, tagged with the bound id.
TaggedBound chi_upper_bound(const ComplexBall& s);

/// theta(t) = (i/2) log chi(1/2 + i t); real ball for real t.
ComplexBall theta(const ComplexBall& t);
ComplexBall theta(const RealBall& t);

/// (t/2) log(s / 2 pi) - pi s / 4 + i s / 2 +/- 0.15 / Re t with s = 1/2 + i t.
/// Requires Re t >= 1 and Im t < 1/2.
ComplexBall theta_asymptotic(const ComplexBall& t);

/// 2 |t| log |t|, for |t| >= 4 and |Re t| >= 1.
RealBall theta_growth_bound(const ComplexBall& t);

}  // namespace zg

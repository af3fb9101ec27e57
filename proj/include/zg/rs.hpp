#pragma once

#include <vector>

#include "zg/ball.hpp"
#include "zg/chi_theta.hpp"
#include "zg/region.hpp"

namespace zg {

struct FValues {
  ComplexBall F;
  ComplexBall F1;  // F'
  ComplexBall F3;  // F'''
};

/// F(p) = (e^{pi i (p^2/2 + 3/8)} - i sqrt(2) cos(pi p / 2)) / (2 cos(pi p)) and
/// its first and third derivatives. The removable singularities at p = +/-1/2
/// are handled by a Taylor model with a Cauchy-estimate remainder.
FValues rs_F(const RealBall& p);

struct RSTerms {
  RealBall a;
  unsigned long N = 0;
  RealBall p;
  ComplexBall U;
  ComplexBall C0;
  ComplexBall C1;
  RealBall RS1_radius;
};

/// Riemann-Siegel ingredients for s with sigma > 0 and t > 0. Throws
/// BoundaryError when floor(a) is ambiguous on the ball.
RSTerms rs_terms(const ComplexBall& s);
/// Same with N forced (used on either side of an integer crossing of a).
RSTerms rs_terms_with_N(const ComplexBall& s, unsigned long N);

/// 1/(6 pi) + |sigma - 1/2| / (2 pi).
RealBall rs_C1_cap(const RealBall& sigma);
/// (1/7) 2^{3 sigma / 2} (1.1 / a)^2.
RealBall rs_RS1_cap(const RealBall& sigma, const RealBall& a);

/// sum_{n <= N} n^-s + (-1)^{N-1} U a^-sigma (C0 + C1/a + RS1 ball), for sigma > 0, t > 0.
/// An integer crossing of a is handled by evaluating both sides and taking the hull.
/// With with_remainder = false the RS1 ball is left out.
ComplexBall rs_expansion(const ComplexBall& s, bool with_remainder = true);

/// sum_{n <= sqrt(t / 2 pi)} n^-s, hulled over both choices when floor(a) is ambiguous.
ComplexBall rs_main_sum(const ComplexBall& s);

/// R(s) for sigma > 0, t >= 16 pi.
ComplexBall R_eval(const ComplexBall& s, const Precision& prec);

/// R(s) for sigma <= 0, t >= 16 pi through R(s) = conj((zeta(w) - R(w)) / chi(w)), w = 1 - conj(s).
ComplexBall R_eval_reflected(const ComplexBall& s, const Precision& prec);

/// 2 sqrt(t / 2 pi) for sigma > 0, t > 16 pi.
RealBall R_bound_right(const ComplexBall& s);
/// 19 t / (2 pi)^(1 - sigma) ((1 - sigma)^2 + t^2)^(1/4 - sigma/2) for sigma <= 0, t >= 16 pi.
RealBall R_bound_left(const ComplexBall& s);
/// 3 / 2^sigma + (2 pi / t)^(min(sigma, 1) / 2), bound on |R - 1| for sigma >= 2, t > 16 pi.
RealBall R_minus_one_bound(const ComplexBall& s);

TaggedBound R_region_bound(const ComplexBall& s);

struct ZValue {
  RealBall value;
  RealBall im_residual;
};

/// Z(t) = Re(e^{i theta(t)} zeta(1/2 + i t)).
ZValue Z_eval(const RealBall& t, const Precision& prec);

/// Sign of Z on a ball: +1, -1 or 0 when not certified.
int certified_sign(const RealBall& x);

struct SignChangeCount {
  int changes = 0;
  int uncertain = 0;
};

/// Count certified sign changes of Z on a uniform grid of `points` points over [lo, hi].
SignChangeCount count_Z_sign_changes(const mpq_class& lo, const mpq_class& hi, int points,
                                     const Precision& prec);

/// Bisect a sign change of Z in [lo, hi] down to width <= tol. Throws DomainError
/// when the signs at the ends are not certified to differ.
RealBall bisect_Z_zero(const mpq_class& lo, const mpq_class& hi, const mpq_class& tol,
                       const Precision& prec);

}  // namespace zg

#pragma once

#include "doctest.h"
#include "zg/ball.hpp"
#include "zg/decimal.hpp"

namespace zgtest {

inline zg::RealBall dec(const char* s, mpfr_prec_t prec = 256) {
  return zg::real_ball_from_text(s, prec);
}

inline zg::ComplexBall cdec(const char* s, mpfr_prec_t prec = 256) {
  return zg::complex_ball_from_text(s, prec);
}

/// True when x overlaps the reference value widened by tol.
inline bool near(const zg::RealBall& x, const char* ref, double tol) {
  return x.overlaps(dec(ref).inflated(zg::Float::from_double(tol)));
}

inline bool near(const zg::ComplexBall& z, const char* re, const char* im, double tol) {
  return near(z.re(), re, tol) && near(z.im(), im, tol);
}

inline double rad(const zg::RealBall& x) { return x.rad().to_double(MPFR_RNDU); }
inline double rad(const zg::ComplexBall& z) { return z.max_rad().to_double(MPFR_RNDU); }

}  // namespace zgtest

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "zg/ball.hpp"

namespace zg {

/// Parse an exact decimal such as "-12.5e-3". Throws ParseError.
mpq_class parse_decimal(const std::string& text);

/// Parse "<re>[+|-]<im>i", "<re>" or "<im>i". Throws ParseError.
std::pair<mpq_class, mpq_class> parse_complex(const std::string& text);

ComplexBall complex_ball_from_text(const std::string& text, mpfr_prec_t prec);
RealBall real_ball_from_text(const std::string& text, mpfr_prec_t prec);

/// Decimal rendering of a ball. The radius absorbs the error of rounding the
/// midpoint, so parse(mid) +/- parse(rad) contains the ball.
struct DecimalBall {
  std::string mid;
  std::string rad;
};

DecimalBall format_ball(const RealBall& x, int digits);
int digits_for_bits(long bits);

}  // namespace zg

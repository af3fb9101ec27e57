#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "zg/ball.hpp"

namespace zg {

/// One side of a Region. An empty value means the side is at infinity.
struct Edge {
  std::optional<mpq_class> value;
  bool closed = true;

  static Edge at(const mpq_class& v, bool closed = true) { return Edge{v, closed}; }
  static Edge open(const mpq_class& v) { return Edge{v, false}; }
  static Edge infinite() { return Edge{std::nullopt, false}; }
  bool is_finite() const { return value.has_value(); }
};

/// Rectangle [sigma_lo, sigma_hi] x [t_lo, t_hi] in the s-plane.
struct Region {
  Edge sigma_lo = Edge::infinite();
  Edge sigma_hi = Edge::infinite();
  Edge t_lo = Edge::infinite();
  Edge t_hi = Edge::infinite();

  /// Throws DomainError when an edge pair is inverted or the region is empty.
  void validate() const;
  bool is_empty() const;
  std::string describe(const char* x = "sigma", const char* y = "t") const;
};

enum class Containment { inside, outside, uncertain };

const char* to_string(Containment c);

Containment region_contains(const Region& r, const ComplexBall& s);

/// Containment of a real ball in the interval [lo, hi] with the given edge flags.
Containment interval_contains(const Edge& lo, const Edge& hi, const RealBall& x);

struct Precision {
  long working_bits = 64;
  Float target_abs_error = Float::from_double(0x1p-53);

  Precision() = default;
  Precision(long bits, const Float& target);
  Precision(long bits, double target);

  Precision with_bits(long bits) const;
  /// log2 of the target, rounded toward -inf.
  long target_log2() const;
};

}  // namespace zg

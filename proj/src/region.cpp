#include "zg/region.hpp"

#include <sstream>

#include "zg/error.hpp"

namespace zg {

namespace {

bool edges_inverted(const Edge& lo, const Edge& hi) {
  return lo.is_finite() && hi.is_finite() && *lo.value > *hi.value;
}

bool edges_empty(const Edge& lo, const Edge& hi) {
  if (!lo.is_finite() || !hi.is_finite()) return false;
  if (*lo.value > *hi.value) return true;
  return *lo.value == *hi.value && !(lo.closed && hi.closed);
}

std::string edge_text(const Edge& e, bool lower) {
  if (!e.is_finite()) return lower ? "(-inf" : "+inf)";
  std::ostringstream os;
  double v = e.value->get_d();
  if (lower) os << (e.closed ? "[" : "(") << v;
  else os << v << (e.closed ? "]" : ")");
  return os.str();
}

// Compare the exact set [lo_x, hi_x] against a lower edge.
// Returns inside when every point satisfies the edge, outside when none does.
Containment against_lower(const Edge& e, const mpq_class& lo_x, const mpq_class& hi_x) {
  if (!e.is_finite()) return Containment::inside;
  const mpq_class& v = *e.value;
  bool all = e.closed ? lo_x >= v : lo_x > v;
  if (all) return Containment::inside;
  bool none = e.closed ? hi_x < v : hi_x <= v;
  return none ? Containment::outside : Containment::uncertain;
}

Containment against_upper(const Edge& e, const mpq_class& lo_x, const mpq_class& hi_x) {
  if (!e.is_finite()) return Containment::inside;
  const mpq_class& v = *e.value;
  bool all = e.closed ? hi_x <= v : hi_x < v;
  if (all) return Containment::inside;
  bool none = e.closed ? lo_x > v : lo_x >= v;
  return none ? Containment::outside : Containment::uncertain;
}

Containment combine(Containment a, Containment b) {
  if (a == Containment::outside || b == Containment::outside) return Containment::outside;
  if (a == Containment::uncertain || b == Containment::uncertain) return Containment::uncertain;
  return Containment::inside;
}

}  // namespace

void Region::validate() const {
  if (edges_inverted(sigma_lo, sigma_hi) || edges_inverted(t_lo, t_hi)) {
    throw DomainError("region edges are inverted");
  }
}

bool Region::is_empty() const { return edges_empty(sigma_lo, sigma_hi) || edges_empty(t_lo, t_hi); }

std::string Region::describe(const char* x, const char* y) const {
  return std::string(x) + " in " + edge_text(sigma_lo, true) + ", " + edge_text(sigma_hi, false) +
         "; " + y + " in " + edge_text(t_lo, true) + ", " + edge_text(t_hi, false);
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::inside: return "inside";
    case Containment::outside: return "outside";
    default: return "boundary-uncertain";
  }
}

Containment interval_contains(const Edge& lo, const Edge& hi, const RealBall& x) {
  if (!x.is_finite()) {
    return (lo.is_finite() || hi.is_finite()) ? Containment::uncertain : Containment::inside;
  }
  mpq_class m = x.mid().to_rational(), r = x.rad().to_rational();
  mpq_class a = m - r, b = m + r;
  return combine(against_lower(lo, a, b), against_upper(hi, a, b));
}

Containment region_contains(const Region& r, const ComplexBall& s) {
  return combine(interval_contains(r.sigma_lo, r.sigma_hi, s.re()),
                 interval_contains(r.t_lo, r.t_hi, s.im()));
}

Precision::Precision(long bits, const Float& target) : working_bits(bits), target_abs_error(target) {
  if (bits < 8) throw DomainError("working precision must be at least 8 bits");
  if (!target.is_finite() || target.sign() <= 0) throw DomainError("target error must be positive");
}

Precision::Precision(long bits, double target) : Precision(bits, Float::from_double(target)) {}

Precision Precision::with_bits(long bits) const { return Precision(bits, target_abs_error); }

long Precision::target_log2() const { return mpfr_get_exp(target_abs_error.get()) - 1; }

}  // namespace zg

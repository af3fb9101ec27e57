#include <random>

#include "doctest.h"
#include "zg/ball.hpp"
#include "zg/decimal.hpp"
#include "zg/error.hpp"
#include "zg/region.hpp"

using namespace zg;

namespace {

RealBall ball(double mid, double rad, mpfr_prec_t prec = 64) {
  return RealBall::from_mid_rad(Float::from_double(mid), Float::from_double(rad), prec);
}

RealBall dec(const char* s, mpfr_prec_t prec = 200) { return real_ball_from_text(s, prec); }

}  // namespace

TEST_CASE("ball_contains examples") {
  CHECK(ball(1.0, 0.5).contains(mpq_class(5, 4)));
  CHECK(ball(1.0, 0.0).contains(mpq_class(1)));
  CHECK_FALSE(ball(0.0, 0.1).contains(mpq_class(1, 5)));
  CHECK(ball(1.0, 0.5).contains(mpq_class(3, 2)));
  CHECK_FALSE(ball(1.0, 0.5).contains(mpq_class(3, 2) + mpq_class(1, 1000000)));
}

TEST_CASE("region_contains examples") {
  Region strip;
  strip.sigma_lo = Edge::at(0);
  strip.sigma_hi = Edge::at(1);
  auto s = [](double re, double rad_re, double im) {
    return ComplexBall(ball(re, rad_re), ball(im, 0));
  };
  CHECK(region_contains(strip, s(0.5, 0, 10)) == Containment::inside);
  CHECK(region_contains(strip, s(2, 0, 10)) == Containment::outside);
  CHECK(region_contains(strip, s(1.0, 0.1, 10)) == Containment::uncertain);
  CHECK(region_contains(strip, s(1.0, 0, 10)) == Containment::inside);
  strip.sigma_hi = Edge::open(1);
  CHECK(region_contains(strip, s(1.0, 0, 10)) == Containment::outside);
}

TEST_CASE("region validation") {
  Region r;
  r.sigma_lo = Edge::at(2);
  r.sigma_hi = Edge::at(1);
  CHECK_THROWS_AS(r.validate(), DomainError);
  CHECK(r.is_empty());
}

TEST_CASE("precision invariants") {
  CHECK_THROWS_AS(Precision(7, 1e-10), DomainError);
  CHECK_THROWS_AS(Precision(64, 0.0), DomainError);
  CHECK(Precision(64, 0x1p-53).target_log2() == -53);
}

TEST_CASE("exact rational containment over random trials") {
  std::mt19937_64 rng(20240101);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    mpq_class x(num(rng), den(rng)), y(num(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    mpfr_prec_t prec = 24 + static_cast<mpfr_prec_t>(trial % 5) * 20;
    RealBall bx = RealBall::from_rational(x, prec), by = RealBall::from_rational(y, prec);
    if (!(bx + by).contains(mpq_class(x + y))) ++failures;
    if (!(bx - by).contains(mpq_class(x - y))) ++failures;
    if (!(bx * by).contains(mpq_class(x * y))) ++failures;
    if (y != 0 && !(bx / by).contains(mpq_class(x / y))) ++failures;
    if (!sqr(bx).contains(mpq_class(x * x))) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("inclusion monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5, 5), r(0, 0.5);
  for (int i = 0; i < 500; ++i) {
    double a = u(rng), b = u(rng), ra = r(rng), rb = r(rng);
    RealBall A = ball(a, ra * 0.5), Ap = ball(a, ra);
    RealBall B = ball(b, rb * 0.5), Bp = ball(b, rb);
    CHECK((Ap + Bp).contains(A + B));
    CHECK((Ap * Bp).contains(A * B));
    CHECK(exp(Ap).contains(exp(A)));
    CHECK(sin(Ap).contains(sin(A)));
    if (!Bp.contains_zero()) CHECK((Ap / Bp).contains(A / B));
  }
}

TEST_CASE("elementary functions enclose reference values") {
  CHECK(exp(dec("1") / 3).overlaps(dec("1.395612425086089528628125").inflated(Float::from_double(1e-24))));
  CHECK(log(dec("1.4")).overlaps(dec("0.3364722366212129305045934").inflated(Float::from_double(1e-24))));
  CHECK(sin(dec("10")).overlaps(dec("-0.5440211108893698134047477").inflated(Float::from_double(1e-24))));
  CHECK(atan2(dec("-1"), dec("-3")).overlaps(dec("-2.819842099193151045061239").inflated(Float::from_double(1e-24))));
  CHECK(sqrt(dec("2")).overlaps(dec("1.414213562373095048801689").inflated(Float::from_double(1e-24))));
  CHECK(exp(dec("1") / 3).rad().to_double() < 1e-55);
}

TEST_CASE("24-bit enclosures contain 256-bit enclosures") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.1, 20);
  for (int i = 0; i < 300; ++i) {
    mpq_class x(u(rng)), y(u(rng));
    auto check = [](const RealBall& lo, const RealBall& hi) {
      CHECK(lo.overlaps(hi));
      CHECK(lo.inflated(hi.rad()).contains(hi));
    };
    RealBall x24 = RealBall::from_rational(x, 24), x256 = RealBall::from_rational(x, 256);
    RealBall y24 = RealBall::from_rational(y, 24), y256 = RealBall::from_rational(y, 256);
    check(exp(x24) * log(y24), exp(x256) * log(y256));
    check(sin(x24) + cos(y24), sin(x256) + cos(y256));
    check(atan(x24) / sqrt(y24), atan(x256) / sqrt(y256));
    check(pow(x24, y24), pow(x256, y256));
    check(sinh(x24) - cosh(y24), sinh(x256) - cosh(y256));
    ComplexBall z24(x24, y24), z256(x256, y256);
    ComplexBall l24 = log(z24), l256 = log(z256);
    check(l24.re(), l256.re());
    check(l24.im(), l256.im());
  }
}

TEST_CASE("domain handling") {
  CHECK_THROWS_AS(log(ball(0.0, 0.1)), DomainError);
  CHECK_THROWS_AS(sqrt(ball(-1.0, 0.1)), DomainError);
  CHECK(sqrt(ball(0.0, 0.25)).contains(mpq_class(1, 2)));
  CHECK_FALSE((ball(1, 0) / ball(0, 0.1)).is_finite());
  CHECK_THROWS_AS(log(ComplexBall(ball(-1, 0), ball(0, 0.1))), DomainError);
  RealBall huge = exp(RealBall::from_double(1e30, 64));
  CHECK_FALSE(huge.is_finite());
  CHECK(huge.contains(mpq_class(12345)));
}

TEST_CASE("complex arithmetic") {
  ComplexBall z(dec("0.3"), dec("5"));
  ComplexBall w = exp(log(z));
  CHECK(w.overlaps(z));
  CHECK((z / z).contains(mpq_class(1), mpq_class(0)));
  ComplexBall p = pow_neg(3, ComplexBall(dec("2"), RealBall(200)));
  CHECK(p.contains(mpq_class(1, 9), mpq_class(0)));
  ComplexBall s = sin(z), c = cos(z);
  CHECK((sqr(s) + sqr(c)).contains(mpq_class(1), mpq_class(0)));
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("12.5e-3") == mpq_class(1, 80));
  CHECK(parse_decimal("-3") == mpq_class(-3));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  auto [re, im] = parse_complex("0.5+100i");
  CHECK(re == mpq_class(1, 2));
  CHECK(im == 100);
  auto [re2, im2] = parse_complex("-2-1e1i");
  CHECK(re2 == -2);
  CHECK(im2 == -10);
  auto [re3, im3] = parse_complex("3i");
  CHECK(re3 == 0);
  CHECK(im3 == 3);
  CHECK_THROWS_AS(parse_complex("3+i+"), ParseError);
}

TEST_CASE("formatted balls re-parse to supersets") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 200; ++i) {
    RealBall x = exp(RealBall::from_double(u(rng) / 10, 96)) * RealBall::from_double(u(rng), 96);
    DecimalBall d = format_ball(x, 12);
    mpq_class mid = parse_decimal(d.mid), rad = parse_decimal(d.rad);
    mpq_class xm = x.mid().to_rational(), xr = x.rad().to_rational();
    CHECK(xm - xr >= mid - rad);
    CHECK(xm + xr <= mid + rad);
  }
}

#include <cmath>
#include <random>

#include "support.hpp"
#include "zg/error.hpp"
#include "zg/zeta.hpp"

using namespace zg;
using zgtest::cdec;
using zgtest::dec;
using zgtest::near;
using zgtest::rad;

namespace {

Precision tight(long bits = 128) {
  Float t(64);
  mpfr_set_ui_2exp(t.get(), 1, -(bits - 10), MPFR_RNDN);
  return Precision(bits, t);
}

ComplexBall cb(double re, double im, mpfr_prec_t p = 128) {
  return ComplexBall(RealBall::from_double(re, p), RealBall::from_double(im, p));
}

}  // namespace

TEST_CASE("partial sums") {
  CHECK(partial_sum(cdec("2"), mpq_class(1, 2)).contains(mpq_class(0), mpq_class(0)));
  CHECK(partial_sum(cdec("2"), mpq_class(3)).contains(mpq_class(49, 36), mpq_class(0)));
  CHECK(partial_sum(cdec("2"), mpq_class(7, 2)).contains(mpq_class(49, 36), mpq_class(0)));
  ComplexBall s = cdec("0.5+3i");
  ComplexBall split = partial_sum_n(s, 4) + partial_sum_range(s, 5, 9);
  CHECK(split.overlaps(partial_sum_n(s, 9)));
}

TEST_CASE("zeta reference values") {
  Precision p = tight();
  CHECK(near(zeta(cdec("2", 128), p), "1.644934066848226436472415166646025189219", "0", 1e-33));
  CHECK(near(zeta(cdec("3", 128), p), "1.202056903159594285399738161511449990765", "0", 1e-33));
  CHECK(zeta(cdec("0", 128), p).contains(mpq_class(-1, 2), mpq_class(0)));
  CHECK(near(zeta(cdec("0.5", 128), p), "-1.460354508809586812889499152515298012467", "0", 1e-33));
  CHECK(zeta(cdec("-3", 128), p).contains(mpq_class(1, 120), mpq_class(0)));
  CHECK(near(zeta(cdec("0.7+23i", 128), p), "1.286118581376114168188249698998466107873",
             "0.1278323967321707719961876853164478012839", 1e-33));
  CHECK(near(zeta(cdec("0.3+5i", 128), p), "0.6756489981160232999321679719883304514591",
             "0.2541447865546774402969486847444393674226", 1e-33));
  CHECK(near(zeta(cdec("-5.5+3i", 128), p), "-0.069023255587797903789294960530784371337",
             "-0.07305187163627882988358891874663255806706", 1e-33));
  CHECK(near(zeta(cdec("2+1000i", 128), p), "0.9532621843464251539191676095154326295965",
             "-0.1107231074605998142921128828863316910138", 1e-33));
  CHECK(near(zeta(cdec("-20+7i", 128), p), "659880.4131520030332084828162257373017616",
             "-410038.694041557630153917099754767757297", 1e-25));
  CHECK(near(zeta(cdec("1.05+0.5i", 128), p), "0.7800938308059189839270010809666063918043",
             "-1.943993439274479310598161282210604605732", 1e-33));
  CHECK(near(zeta(cdec("0.5+0.001i", 128), p), "-1.460346504663079608880984355309852234293",
             "-0.003922630138721610589966389905929334019954", 1e-33));
}

TEST_CASE("zeta routes and targets") {
  Precision p = tight();
  CHECK(zeta_eval(cdec("30", 128), p).route == ZetaRoute::series);
  CHECK(zeta_eval(cdec("-5.5+3i", 128), p).route == ZetaRoute::functional_equation);
  ZetaResult strip = zeta_eval(cdec("0.3+5i", 128), p);
  CHECK(strip.route == ZetaRoute::euler_maclaurin);
  CHECK(strip.outside_catalogue);
  CHECK(strip.meets_target);

  Precision loose(64, 0.05);
  ZetaResult rs = zeta_eval(cdec("0.25+100i"), loose);
  CHECK(rs.route == ZetaRoute::riemann_siegel);
  CHECK(rs.meets_target);
  CHECK(near(rs.value, "4.001851967156954188793941682525416746405",
             "0.04930282489547951312512451618384193914001", 0));

  for (const char* s : {"2", "0.5+14i", "-3+2i", "0.9+40i", "5+300i"}) {
    ZetaResult r = zeta_eval(cdec(s, 64), Precision());
    CHECK(r.meets_target);
    CHECK(rad(r.value) <= 0x1p-53);
  }
}

TEST_CASE("zeta pole handling") {
  CHECK_THROWS_AS(zeta(cdec("1")), PoleError);
  ComplexBall near_pole(RealBall::from_double(1 + 0x1p-22, 64), RealBall(64));
  CHECK_THROWS_AS(zeta(near_pole), PoleError);
  CHECK_NOTHROW(zeta(cdec("1.001")));
}

TEST_CASE("zeta conjugate symmetry") {
  ComplexBall a = zeta(cdec("0.7+23i", 128));
  ComplexBall b = zeta(cdec("0.7-23i", 128));
  CHECK(a.overlaps(conj(b)));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> sig(-6, 4), t(0.6, 300);
  for (int i = 0; i < 60; ++i) {
    double x = sig(rng), y = t(rng);
    CHECK(zeta(cb(x, y)).overlaps(conj(zeta(cb(x, -y)))));
  }
}

TEST_CASE("zeta functional equation cross-check") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> sig(0.05, 0.95), t(0.5, 200);
  for (int i = 0; i < 60; ++i) {
    ComplexBall s = cb(sig(rng), t(rng));
    ComplexBall direct = zeta(s);
    ComplexBall reflected = chi_value(s) * zeta(1 - s);
    CHECK(direct.overlaps(reflected));
  }
}

TEST_CASE("Euler-Maclaurin tail agrees with the series tail") {
  ComplexBall s = cdec("3+2i", 128);
  ComplexBall full = zeta_tail_value(s, 0, -110);
  ComplexBall shifted = partial_sum_n(s, 25) + zeta_tail_value(s, 25, -110);
  CHECK(full.overlaps(shifted));
  EulerMaclaurinPlan plan = plan_euler_maclaurin(0.5, 1000, 0, -53);
  CHECK(plan.feasible);
  CHECK(plan.N > 1);
}

TEST_CASE("zeta tail bound examples") {
  RealBall b = tail_bound_sigma_gt1(cdec("2"), mpq_class(10));
  CHECK(b.contains(mpq_class(11, 100)));
  CHECK(tail_bound_sigma_gt1(cdec("3"), mpq_class(1)).contains(mpq_class(3, 2)));
  RealBall seven = tail_bound_seven_s(cdec("0.5+10i"), mpq_class(10));
  CHECK(near(seven, "22.1635962785825892691723165339", 1e-20));
  ZetaTail t = zeta_tail_bound(cdec("0.5+10i"), mpq_class(10));
  CHECK(t.branch_used == TailBranch::seven_s_bound);
  ZetaTail u = zeta_tail_bound(cdec("2"), mpq_class(10));
  CHECK(u.branch_used == TailBranch::sigma_gt1_bound);
  CHECK_THROWS_AS(zeta_tail_bound(cdec("0.5+10i"), mpq_class(20)), DomainError);
  CHECK_THROWS_AS(zeta_tail_bound(cdec("0.5+1i"), mpq_class(1)), DomainError);
}

TEST_CASE("zeta tail bounds dominate the true tail") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> sig(0, 3), t(2, 500), frac(0.05, 1);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    ComplexBall s = cb(sig(rng), t(rng), 64);
    double mod = std::hypot(s.re().mid_d(), s.im().mid_d());
    mpq_class x(std::floor(frac(rng) * mod * 8) / 8);
    if (x <= 0) continue;
    ZetaTail bound;
    try {
      bound = zeta_tail_bound(s, x);
    } catch (const DomainError&) {
      continue;
    }
    ComplexBall tail = zeta(s) - partial_sum(s, x);
    CHECK(!certainly_lt(bound.bound, abs(tail)));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("zeta region bounds") {
  CHECK(zeta_region_bound(cdec("2.5+3i")).tag == "prop4.1-right-halfplane");
  TaggedBound left = zeta_region_bound(cdec("-2+10i"));
  CHECK(left.tag == "prop4.2-left-halfplane");
  CHECK(near(left.value, "17.8424", 1e-4));
  CHECK(near(zeta_bound_strip(cdec("0.5+10i")), "21", 1e-30));
  CHECK(near(zeta_bound_three_t(cdec("0.5+10i")), "30", 1e-30));
  CHECK(zeta_region_bound(cdec("0.5+10i")).tag == "prop4.3-critical-strip");
  CHECK(near(zeta_bound_three_t(cdec("1.5+2i")), "6", 1e-30));
  CHECK_THROWS_AS(zeta_region_bound(cdec("0.5+1i")), DomainError);

  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> sig(-8, 8), lt(std::log(0.5), std::log(2000));
  int applied = 0;
  for (int i = 0; i < 200; ++i) {
    ComplexBall s = cb(sig(rng), std::exp(lt(rng)), 64);
    TaggedBound b;
    try {
      b = zeta_region_bound(s);
    } catch (const DomainError&) {
      continue;
    }
    ++applied;
    RealBall m = abs(zeta(s));
    CHECK_MESSAGE(!certainly_lt(b.value, m), b.tag);
  }
  CHECK(applied > 100);
}

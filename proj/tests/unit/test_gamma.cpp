#include <random>

#include "support.hpp"
#include "zg/error.hpp"
#include "zg/gamma.hpp"

using namespace zg;
using zgtest::cdec;
using zgtest::dec;
using zgtest::near;

namespace {

ComplexBall mu_reference(const ComplexBall& z) {
  mpfr_prec_t p = z.prec();
  RealBall half = mul_2si(RealBall(1, p), -1);
  RealBall log_sqrt_2pi = mul_2si(log(mul_2si(RealBall::pi(p), 1)), -1);
  return log_gamma(z) - (z - half) * log(z) + z - log_sqrt_2pi;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(4) == mpq_class(-1, 30));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(8) == mpq_class(-1, 30));
  CHECK_THROWS_AS(bernoulli(3), DomainError);
  CHECK_THROWS_AS(bernoulli(0), DomainError);
  for (long n = 1; n <= 20; ++n) {
    mpq_class acc = 1;
    mpz_class binom = 1;
    std::vector<mpq_class> b{mpq_class(1), mpq_class(-1, 2)};
    for (long k = 2; k <= n; ++k) b.push_back(k % 2 ? mpq_class(0) : bernoulli(k));
    acc = 0;
    for (long k = 0; k <= n; ++k) {
      acc += mpq_class(binom) * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    CHECK(acc == 0);
  }
}

TEST_CASE("stirling mu examples") {
  for (long K = 1; K <= 5; ++K) {
    MuResult r = stirling_mu(cdec("1"), K);
    CHECK(near(r.mu, "0.0810614667953272582196702635944", "0", 0));
  }
  MuResult r10 = stirling_mu(cdec("10"), 3);
  CHECK(near(r10.remainder_radius, "3.8180362315105914247e-10", 1e-25));
  MuResult big = stirling_mu(cdec("1000000", 128), 1);
  CHECK(std::fabs(big.mu.re().mid_d() - 1.0 / 12e6) < 1e-13);
  CHECK_THROWS_AS(stirling_mu(cdec("-1+2i"), 2), DomainError);
}

TEST_CASE("log gamma reference values") {
  CHECK(log_gamma(cdec("1")).contains(mpq_class(0), mpq_class(0)));
  CHECK(near(log_gamma(cdec("5")), "3.17805383034794561964694160130", "0", 1e-28));
  CHECK(near(log_gamma(cdec("0.5")), "0.572364942924700087071713675677", "0", 1e-28));
  CHECK(near(log_gamma(cdec("0.3+5i")), "-7.25664881832182525899762417055",
             "2.73737089045382778476285173261", 1e-27));
  CHECK(near(log_gamma(cdec("-2.5+0.1i")), "-0.103149244042819197765589983054",
             "-9.31444426835983812113266977333", 1e-28));
  CHECK(near(log_gamma(cdec("-2.5-0.1i")), "-0.103149244042819197765589983054",
             "9.31444426835983812113266977333", 1e-28));
  CHECK(near(log_gamma(cdec("10+1000i")), "-1504.25357061519473143599453067",
             "5922.63276142832829497904977838", 1e-25));
  CHECK(near(log_gamma(cdec("0.001")), "6.90717888538385368251234466808", "0", 1e-28));
  CHECK(near(log_gamma(cdec("0.5-40i")), "-61.9129145385911920274725379292",
             "-107.556219869209061237222386985", 1e-27));
  CHECK(near(log_gamma(cdec("-19.75+3i")), "-48.9475444385577595476862759415",
             "-54.5815862578430528044188618985", 1e-27));
  CHECK(zgtest::rad(log_gamma(cdec("0.3+5i", 64))) < 1e-17);
  CHECK_THROWS_AS(log_gamma(cdec("-3")), DomainError);
  CHECK_THROWS_AS(log_gamma(cdec("0")), DomainError);
}

TEST_CASE("stirling remainder honesty grid") {
  const char* res[] = {"1", "2", "5", "10", "50"};
  const char* ims[] = {"0", "1", "10"};
  for (const char* re : res) {
    for (const char* im : ims) {
      std::string text = std::string(re) + "+" + im + "i";
      ComplexBall z = cdec(text.c_str(), 256);
      ComplexBall ref = mu_reference(z);
      for (long K = 1; K <= 6; ++K) {
        ComplexBall diff = ref - stirling_series(z, K);
        RealBall bound = stirling_remainder_bound(abs(z), K);
        CHECK(certainly_le(abs(diff), bound));
      }
    }
  }
}

TEST_CASE("log gamma recurrence and conjugate symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.01, 30), im(-50, 50);
  for (int i = 0; i < 100; ++i) {
    ComplexBall z(RealBall::from_double(re(rng), 96), RealBall::from_double(im(rng), 96));
    ComplexBall d = log_gamma(z + 1) - log_gamma(z);
    CHECK(d.overlaps(log(z)));
    ComplexBall c = log_gamma(conj(z));
    CHECK(c.overlaps(conj(log_gamma(z))));
  }
}

TEST_CASE("gamma magnitude bounds") {
  GammaBounds b = gamma_magnitude_bounds(dec("2"), dec("0"));
  CHECK(near(b.lower, "0.76557197208328744401933886994", 1e-15));
  CHECK(near(b.upper, "8.4852813742385702928", 1e-15));
  CHECK(certainly_lt(b.lower, RealBall(1, 64)));
  CHECK(certainly_lt(RealBall(1, 64), b.upper));

  GammaBounds h = gamma_magnitude_bounds(dec("0.5"), dec("10"));
  RealBall g = exp(log_gamma(cdec("0.5+10i")).re());
  CHECK(certainly_lt(h.lower, g));
  CHECK(certainly_lt(g, h.upper));
  RealBall e5pi = exp(-(RealBall::pi(256) * 5));
  CHECK(h.upper.overlaps(e5pi * 3));

  GammaBounds a = gamma_magnitude_bounds(dec("1"), dec("-3"));
  GammaBounds c = gamma_magnitude_bounds(dec("1"), dec("3"));
  CHECK(a.lower.overlaps(c.lower));
  CHECK(a.upper.overlaps(c.upper));
  CHECK_THROWS_AS(gamma_magnitude_bounds(dec("0.5"), dec("0.5")), DomainError);
  CHECK_THROWS_AS(gamma_magnitude_bounds(dec("-1"), dec("5")), DomainError);
}

TEST_CASE("gamma sandwich on random points") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> sig(1e-6, 30), tt(-60, 60);
  int checked = 0;
  while (checked < 500) {
    double s = sig(rng), t = tt(rng);
    if (s * s + t * t < 1) continue;
    RealBall sb = RealBall::from_double(s, 128), tb = RealBall::from_double(t, 128);
    GammaBounds b = gamma_magnitude_bounds(sb, tb);
    RealBall g = exp(log_gamma(ComplexBall(sb, tb)).re());
    CHECK(certainly_lt(b.lower, g));
    CHECK(certainly_lt(g, b.upper));
    ++checked;
  }
}

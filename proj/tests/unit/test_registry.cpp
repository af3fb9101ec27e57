#include <filesystem>
#include <set>

#include "json.hpp"
#include "support.hpp"
#include "zg/error.hpp"
#include "zg/registry.hpp"
#include "zg/zeta.hpp"

using namespace zg;
using zgtest::cdec;
using zgtest::near;

TEST_CASE("registry contents") {
  const auto& cases = registry();
  CHECK(cases.size() == 21);
  std::set<std::string> ids;
  for (const BoundCase& c : cases) {
    ids.insert(c.id);
    CHECK_NOTHROW(c.region.validate());
    CHECK(!c.region.is_empty());
    CHECK(!c.anchor.empty());
    CHECK(!c.formula.empty());
  }
  CHECK(ids.size() == cases.size());
  for (const char* id : {"prop2.2-gamma-sandwich", "prop2.3-chi-sigma-pos", "prop2.3-chi-large-modulus",
                         "prop2.3-chi-alt-form", "prop2.4-chi-left", "prop3.1-theta-growth",
                         "prop4.1-right-halfplane", "prop4.2-left-halfplane", "prop4.3-critical-strip",
                         "prop4.4-sigma-half", "thm5.1-strip", "thm5.1-right", "rs-c0-cap", "rs-c1-cap",
                         "rs-rs1-cap", "prop5.2-R-minus-one", "prop5.3-R-right", "prop5.4-R-left",
                         "tail-seven-s", "tail-sigma-gt1", "claim-zeta-half-root"}) {
    CHECK(ids.count(id) == 1);
  }
  CHECK(&registry() == &registry());
}

TEST_CASE("registry lookup") {
  const BoundCase& right = find_case("prop4.1-right-halfplane");
  CHECK(*right.region.sigma_lo.value == 2);
  CHECK(right.region.sigma_lo.closed);
  CHECK(!right.region.sigma_hi.is_finite());
  CHECK(right.rhs(cdec("3+1i"), std::nullopt).contains(mpq_class(2)));

  const BoundCase& strip = find_case("thm5.1-strip");
  CHECK(*strip.region.sigma_lo.value == 0);
  CHECK(*strip.region.sigma_hi.value == 1);
  RealBall three_pi = RealBall::pi(256) * 3;
  RealBall edge = RealBall::from_rational(*strip.region.t_lo.value, 256);
  CHECK(certainly_le(three_pi, edge));
  CHECK(certainly_lt(edge, three_pi + RealBall::from_double(1e-29, 256)));

  CHECK(find_case("prop4.4").id == "prop4.4-sigma-half");
  CHECK(near(find_case("prop4.4").rhs(cdec("0.5+100i"), std::nullopt), "300", 1e-30));
  CHECK_THROWS_AS(find_case("prop2.3"), NotFoundError);
  CHECK_THROWS_AS(find_case("nonexistent"), NotFoundError);
  CHECK_THROWS_AS(find_case(""), NotFoundError);
}

TEST_CASE("region sampling") {
  Region half{Edge::at(2), Edge::infinite(), Edge::infinite(), Edge::infinite()};
  auto a = sample_region(half, 3, 7);
  auto b = sample_region(half, 3, 7);
  REQUIRE(a.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(a[i].sigma > 2);
    CHECK(a[i].sigma == b[i].sigma);
    CHECK(a[i].t == b[i].t);
  }
  CHECK(sample_region(half, 3, 8)[0].sigma != a[0].sigma);
  CHECK_THROWS_AS(sample_region(half, 0, 7), DomainError);
  Region empty{Edge::open(1), Edge::open(1), Edge::at(0), Edge::at(1)};
  CHECK_THROWS_AS(sample_region(empty, 3, 7), DomainError);

  Region box{Edge::at(0), Edge::open(1), Edge::open(1), Edge::at(2)};
  auto pts = sample_region(box, 4000, 11);
  int near_edge = 0;
  for (const SamplePoint& p : pts) {
    CHECK(p.sigma > 0);
    CHECK(p.sigma < 1);
    CHECK(p.t > 1);
    CHECK(p.t < 2);
    mpz_class den = p.sigma.get_den();
    CHECK(mpz_popcount(den.get_mpz_t()) == 1);
    mpq_class d1 = p.sigma, d2 = 1 - p.sigma, d3 = p.t - 1, d4 = 2 - p.t;
    mpq_class tol(1, 1000);
    if (d1 <= tol || d2 <= tol || d3 <= tol || d4 <= tol) ++near_edge;
  }
  CHECK(near_edge > 4000 * 0.07);
  CHECK(near_edge < 4000 * 0.14);
}

TEST_CASE("verification examples") {
  VerificationReport r = verify_bound("prop4.1-right-halfplane", 200, 42, Precision(64, 0x1p-53));
  CHECK(r.violations == 0);
  CHECK(r.skipped == 0);
  VerificationReport s = verify_bound("thm5.1-strip", 100, 1, Precision(128, 0x1p-53));
  CHECK(s.violations == 0);
  REQUIRE(s.min_margin.has_value());
  CHECK(s.min_margin->is_positive());
  VerificationReport g = verify_bound("prop2.2-gamma-sandwich", 300, 3, Precision(64, 0x1p-53));
  CHECK(g.violations == 0);
  CHECK(g.skipped * 20 <= g.samples);
  CHECK_THROWS_AS(verify_bound("bogus", 10, 1, Precision()), NotFoundError);
}

TEST_CASE("a false bound is caught") {
  BoundCase c = find_case("prop4.1-right-halfplane");
  c.id = "false-bound";
  c.checks = [](const ComplexBall& s, const auto&, const Precision& prec) {
    return std::vector<Check>{{abs(zeta(s, prec)), RealBall(1, s.prec())}};
  };
  VerificationReport r = verify_case(c, 99, 100, 5, Precision());
  CHECK(r.violations > 0);
  CHECK(r.violations < 100);
  REQUIRE(r.min_margin.has_value());
  CHECK(r.min_margin->is_negative());
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["violations"].size() == static_cast<std::size_t>(r.violations));
}

TEST_CASE("reports are deterministic and well formed") {
  VerificationReport a = verify_bound("prop4.3-critical-strip", 40, 9, Precision(64, 0x1p-53), 1);
  VerificationReport b = verify_bound("prop4.3-critical-strip", 40, 9, Precision(64, 0x1p-53), 3);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_csv(a) == report_csv(b));

  auto j = nlohmann::json::parse(report_json(a));
  for (const char* key : {"bound_id", "anchor", "samples", "seed", "prec_bits", "min_margin", "median_margin",
                          "violations", "skipped"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["min_margin"].contains("mid"));
  CHECK(j["min_margin"].contains("rad"));
  CHECK(!j.contains("timestamp"));
  ReportOptions stamped;
  stamped.timestamp = true;
  CHECK(nlohmann::json::parse(report_json(a, stamped)).contains("timestamp"));

  std::string csv = report_csv(a);
  CHECK(csv.rfind("sigma,t,lhs_hi,rhs_lo,margin\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 41);

  auto dir = std::filesystem::temp_directory_path() / "zg_report_test";
  std::filesystem::remove_all(dir);
  write_report_files(a, dir.string());
  CHECK(std::filesystem::exists(dir / "prop4.3-critical-strip.json"));
  CHECK(std::filesystem::exists(dir / "prop4.3-critical-strip.csv"));
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("skip hygiene at 128 bits") {
  for (const BoundCase& c : registry()) {
    VerificationReport r = verify_bound(c.id, 30, 2024, Precision(128, 0x1p-53));
    CHECK_MESSAGE(r.violations == 0, c.id);
    CHECK_MESSAGE(!r.needs_escalation, c.id);
  }
}

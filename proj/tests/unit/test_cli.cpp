#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "support.hpp"
#include "zg/zeta.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ZG_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

zg::RealBall reparse(const std::string& mid, const std::string& rad) {
  zg::RealBall m = zg::real_ball_from_text(mid, 256);
  zg::RealBall r = zg::real_ball_from_text(rad, 256);
  return m.inflated(r.upper());
}

}  // namespace

TEST_CASE("cli eval") {
  Run z = run("eval zeta --s 3");
  CHECK(z.code == 0);
  CHECK(z.out.find("1.2020569") != std::string::npos);

  Run th = run("eval theta --t 0 --format json");
  CHECK(th.code == 0);
  auto j = nlohmann::json::parse(th.out);
  CHECK(std::fabs(std::stod(j["mid_re"].get<std::string>())) == 0.0);

  Run zz = run("eval Z --t 14.134725 --format json");
  CHECK(zz.code == 0);
  auto jz = nlohmann::json::parse(zz.out);
  CHECK(std::fabs(std::stod(jz["mid_re"].get<std::string>())) < 1e-6);

  Run zj = run("eval zeta --s 3 --format json");
  auto jj = nlohmann::json::parse(zj.out);
  CHECK(jj.contains("route"));
  CHECK(jj["meets_target"].get<bool>());
}

TEST_CASE("cli output re-parses to an enclosure") {
  Run r = run("eval zeta --s 0.7+23i --format json --prec-bits 64");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  zg::RealBall re = reparse(j["mid_re"], j["rad"]);
  zg::RealBall im = reparse(j["mid_im"], j["rad"]);
  zg::ComplexBall ref = zg::zeta(zgtest::cdec("0.7+23i", 256));
  CHECK(re.contains(ref.re()));
  CHECK(im.contains(ref.im()));

  Run g = run("eval loggamma --s 10 --format json --prec-bits 96");
  auto jg = nlohmann::json::parse(g.out);
  CHECK(reparse(jg["mid_re"], jg["rad"]).contains(zgtest::dec("12.801827480081469611207717874566706164")));
}

TEST_CASE("cli bounds") {
  Run a = run("bounds apply prop4.4 --s 0.5+100i --format json");
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["in_region"].get<bool>());
  CHECK(std::stod(j["rhs"]["mid"].get<std::string>()) == 300.0);

  Run o = run("bounds apply prop4.1 --s 0.5+2i --format json");
  CHECK(o.code == 0);
  auto jo = nlohmann::json::parse(o.out);
  CHECK_FALSE(jo["in_region"].get<bool>());

  Run s = run("bounds show thm5.1-strip");
  CHECK(s.code == 0);
  CHECK(s.out.find("thm5.1-strip") != std::string::npos);

  Run l = run("bounds list");
  CHECK(l.code == 0);
  CHECK(std::count(l.out.begin(), l.out.end(), '\n') == 21);
}

TEST_CASE("cli exit codes") {
  auto dir = std::filesystem::temp_directory_path() / "zg_cli_test";
  std::filesystem::remove_all(dir);
  CHECK(run("verify --bound prop3.1 --samples 100 --seed 1 --out-dir " + dir.string()).code == 0);
  CHECK(std::filesystem::exists(dir / "prop3.1-theta-growth.json"));
  CHECK(run("verify --bound bogus --out-dir " + dir.string()).code == 4);
  CHECK(run("eval zeta --s abc").code == 2);
  CHECK(run("eval zeta").code == 2);
  CHECK(run("--no-such-flag").code == 2);
  CHECK(run("eval zeta --s 1").code == 3);
  CHECK(run("bounds apply bogus --s 2").code == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli verify is deterministic") {
  auto base = std::filesystem::temp_directory_path();
  auto d1 = base / "zg_cli_det1";
  auto d2 = base / "zg_cli_det2";
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
  CHECK(run("verify --bound prop2.4 --samples 50 --seed 7 --jobs 1 --out-dir " + d1.string()).code == 0);
  CHECK(run("verify --bound prop2.4 --samples 50 --seed 7 --jobs 2 --out-dir " + d2.string()).code == 0);
  for (const auto& e : std::filesystem::directory_iterator(d1)) {
    CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
  }
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
}

// zg: evaluate zeta-related functions with rigorous enclosures, look up the
// bound catalogue and run verification sweeps.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "zg/chi_theta.hpp"
#include "zg/decimal.hpp"
#include "zg/error.hpp"
#include "zg/gamma.hpp"
#include "zg/registry.hpp"
#include "zg/rs.hpp"
#include "zg/zeta.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kViolation = 1, kParse = 2, kDomain = 3, kUnknown = 4 };

struct Config {
  long prec_bits = 64;
  std::string target_error;
  std::string format = "text";
  std::uint64_t seed = 42;
  int samples = 200;
  int jobs = 0;
  std::string out_dir = "reports";
  bool timestamp = false;
};

zg::Precision make_precision(const Config& cfg) {
  if (cfg.prec_bits < 8) throw zg::ParseError("--prec-bits must be at least 8");
  if (cfg.target_error.empty()) return zg::Precision(cfg.prec_bits, 0x1p-53);
  mpq_class e = zg::parse_decimal(cfg.target_error);
  if (e <= 0) throw zg::ParseError("--target-error must be positive");
  zg::Float f(64);
  mpfr_set_q(f.get(), e.get_mpq_t(), MPFR_RNDD);
  return zg::Precision(cfg.prec_bits, f);
}

// Larger of two decimal radii.
std::string max_rad(const std::string& a, const std::string& b) {
  zg::Float x(64), y(64);
  mpfr_set_str(x.get(), a.c_str(), 10, MPFR_RNDU);
  mpfr_set_str(y.get(), b.c_str(), 10, MPFR_RNDU);
  return zg::compare(x, y) >= 0 ? a : b;
}

void print_enclosure(const Config& cfg, const std::string& fn, const std::string& input,
                     const zg::ComplexBall& v, json extra = json::object()) {
  int digits = zg::digits_for_bits(cfg.prec_bits);
  zg::DecimalBall re = zg::format_ball(v.re(), digits);
  zg::DecimalBall im = zg::format_ball(v.im(), digits);
  std::string rad = max_rad(re.rad, im.rad);
  if (cfg.format == "json") {
    json j;
    j["function"] = fn;
    j["input"] = input;
    j["prec_bits"] = cfg.prec_bits;
    j["mid_re"] = re.mid;
    j["mid_im"] = im.mid;
    j["rad"] = rad;
    for (auto& [k, val] : extra.items()) j[k] = val;
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "function,input,mid_re,mid_im,rad\n"
              << fn << "," << input << "," << re.mid << "," << im.mid << "," << rad << "\n";
  } else {
    std::cout << fn << "(" << input << ")\n"
              << "  mid_re = " << re.mid << "\n"
              << "  mid_im = " << im.mid << "\n"
              << "  rad    = " << rad << "\n";
    for (auto& [k, val] : extra.items()) {
      std::cout << "  " << k << " = " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
  }
}

int cmd_eval(const Config& cfg, const std::string& fn, const std::string& s_text, const std::string& t_text) {
  zg::Precision prec = make_precision(cfg);
  mpfr_prec_t bits = cfg.prec_bits;
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw zg::ParseError(std::string("missing ") + flag);
    return v;
  };
  if (fn == "zeta") {
    zg::ZetaResult r = zg::zeta_eval(zg::complex_ball_from_text(need(s_text, "--s"), bits), prec);
    print_enclosure(cfg, fn, s_text, r.value,
                    {{"route", zg::to_string(r.route)}, {"meets_target", r.meets_target}, {"outside_catalogue", r.outside_catalogue}});
  } else if (fn == "theta") {
    print_enclosure(cfg, fn, t_text, zg::theta(zg::complex_ball_from_text(need(t_text, "--t"), bits)));
  } else if (fn == "chi") {
    print_enclosure(cfg, fn, s_text, zg::chi(zg::complex_ball_from_text(need(s_text, "--s"), bits)).value);
  } else if (fn == "R") {
    zg::ComplexBall s = zg::complex_ball_from_text(need(s_text, "--s"), bits);
    zg::ComplexBall v = s.re().is_positive() ? zg::R_eval(s, prec) : zg::R_eval_reflected(s, prec);
    print_enclosure(cfg, fn, s_text, v);
  } else if (fn == "Z") {
    zg::ZValue z = zg::Z_eval(zg::real_ball_from_text(need(t_text, "--t"), bits), prec);
    zg::DecimalBall res = zg::format_ball(z.im_residual, 6);
    print_enclosure(cfg, fn, t_text, zg::ComplexBall(z.value),
                    {{"im_residual", res.mid + " +/- " + res.rad}});
  } else if (fn == "loggamma") {
    std::string in = s_text.empty() ? t_text : s_text;
    print_enclosure(cfg, fn, in, zg::log_gamma(zg::complex_ball_from_text(need(in, "--s"), bits)));
  } else {
    throw zg::ParseError("unknown function '" + fn + "'; expected zeta, theta, chi, R, Z or loggamma");
  }
  return kOk;
}

int cmd_bounds(const Config& cfg, const std::string& action, const std::string& id, const std::string& s_text,
               const std::string& x_text) {
  if (action == "list") {
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& c : zg::registry()) arr.push_back({{"id", c.id}, {"anchor", c.anchor}});
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& c : zg::registry()) std::cout << c.id << "\t" << c.anchor << "\n";
    }
    return kOk;
  }
  if (id.empty()) throw zg::ParseError("bounds " + action + " needs a bound id");
  const zg::BoundCase& c = zg::find_case(id);
  if (action == "show") {
    std::string region = c.region.describe(c.id == "prop3.1-theta-growth" ? "Re t" : "sigma",
                                           c.id == "prop3.1-theta-growth" ? "Im t" : "t");
    if (cfg.format == "json") {
      json j{{"id", c.id}, {"anchor", c.anchor}, {"formula", c.formula}, {"region", region}};
      if (!c.extra_text.empty()) j["extra"] = c.extra_text;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "id:      " << c.id << "\n"
                << "anchor:  " << c.anchor << "\n"
                << "formula: " << c.formula << "\n"
                << "region:  " << region << "\n";
      if (!c.extra_text.empty()) std::cout << "also:    " << c.extra_text << "\n";
    }
    return kOk;
  }
  if (action != "apply") throw zg::ParseError("unknown bounds action '" + action + "'; expected list, show or apply");
  if (s_text.empty()) throw zg::ParseError("bounds apply needs --s");
  mpfr_prec_t bits = cfg.prec_bits;
  zg::ComplexBall s = zg::complex_ball_from_text(s_text, bits);
  std::optional<zg::RealBall> x;
  if (!x_text.empty()) x = zg::real_ball_from_text(x_text, bits);
  zg::Containment in = zg::region_contains(c.region, s);
  if (in != zg::Containment::outside && c.extra) {
    zg::Containment e = c.extra(s);
    if (e != zg::Containment::inside) in = e;
  }
  std::optional<zg::RealBall> rhs;
  std::string note;
  try {
    rhs = c.rhs(s, x);
  } catch (const zg::DomainError& e) {
    note = e.what();
  }
  int digits = zg::digits_for_bits(cfg.prec_bits);
  if (cfg.format == "json") {
    json j{{"bound_id", c.id}, {"s", s_text}, {"in_region", in == zg::Containment::inside},
           {"containment", zg::to_string(in)}};
    if (x) j["x"] = x_text;
    if (rhs) {
      zg::DecimalBall d = zg::format_ball(*rhs, digits);
      j["rhs"] = {{"mid", d.mid}, {"rad", d.rad}};
    } else {
      j["rhs"] = nullptr;
      j["note"] = note;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "bound:     " << c.id << "\n"
              << "s:         " << s_text << "\n"
              << "in-region: " << (in == zg::Containment::inside ? "true" : "false") << " ("
              << zg::to_string(in) << ")\n";
    if (rhs) {
      zg::DecimalBall d = zg::format_ball(*rhs, digits);
      std::cout << "rhs:       " << d.mid << " +/- " << d.rad << "\n";
    } else {
      std::cout << "rhs:       n/a (" << note << ")\n";
    }
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& id, bool all) {
  if (all == !id.empty()) throw zg::ParseError("verify needs exactly one of --bound or --all");
  if (cfg.samples < 1) throw zg::ParseError("--samples must be at least 1");
  zg::Precision prec = make_precision(cfg);
  std::vector<std::string> ids;
  if (all) {
    for (const auto& c : zg::registry()) ids.push_back(c.id);
  } else {
    ids.push_back(zg::find_case(id).id);
  }
  int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  zg::ReportOptions opt;
  opt.timestamp = cfg.timestamp;
  opt.target_error = cfg.target_error.empty() ? "2^-53" : cfg.target_error;
  int total_violations = 0;
  if (cfg.format == "csv") std::cout << "bound_id,samples,violations,skipped,min_margin\n";
  for (const std::string& b : ids) {
    zg::VerificationReport r = zg::verify_bound(b, cfg.samples, cfg.seed, prec, jobs);
    zg::write_report_files(r, cfg.out_dir, opt);
    total_violations += r.violations;
    std::string margin = "-";
    if (r.min_margin) margin = zg::format_ball(*r.min_margin, 6).mid;
    if (cfg.format == "csv") {
      std::cout << r.bound_id << "," << r.samples << "," << r.violations << "," << r.skipped << "," << margin << "\n";
    } else if (cfg.format == "json") {
      std::cout << json{{"bound_id", r.bound_id}, {"violations", r.violations}, {"skipped", r.skipped},
                        {"min_margin", margin}}.dump()
                << "\n";
    } else {
      std::printf("%-28s %s  samples=%d violations=%d skipped=%d min_margin=%s\n", r.bound_id.c_str(),
                  r.violations ? "FAIL" : "ok  ", r.samples, r.violations, r.skipped, margin.c_str());
    }
  }
  if (cfg.format == "text") {
    std::printf("%zu case(s), %d violation(s); reports in %s\n", ids.size(), total_violations, cfg.out_dir.c_str());
  }
  return total_violations > 0 ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("ZG_PREC_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 8) cfg.prec_bits = v;
  }

  CLI::App app{"Rigorous enclosures for zeta, theta, chi, R, Z and log Gamma, and verification of explicit bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prec-bits", cfg.prec_bits, "working precision in bits (default 64, env ZG_PREC_BITS)");
  app.add_option("--target-error", cfg.target_error, "absolute error target as a decimal (default 2^-53)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_option("--samples", cfg.samples, "samples per bound case");
  app.add_option("--jobs", cfg.jobs, "worker threads (default: number of processors)");
  app.add_option("--out-dir", cfg.out_dir, "directory for verification reports");
  app.add_flag("--timestamp", cfg.timestamp, "stamp reports with the current time");

  std::string fn, s_text, t_text, x_text, action, bound_id, verify_id;
  bool all = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate zeta, theta, chi, R, Z or loggamma");
  eval->add_option("function", fn, "zeta | theta | chi | R | Z | loggamma")->required();
  eval->add_option("--s", s_text, "complex argument <re>[+|-]<im>i");
  eval->add_option("--t", t_text, "argument of theta or Z");

  CLI::App* bounds = app.add_subcommand("bounds", "list, show or apply catalogued bounds");
  bounds->add_option("action", action, "list | show | apply")->required();
  bounds->add_option("id", bound_id, "bound id or unique prefix");
  bounds->add_option("--s", s_text, "point at which to apply the bound");
  bounds->add_option("--x", x_text, "cutoff x for the tail bounds");

  CLI::App* verify = app.add_subcommand("verify", "sample a bound over its region and write reports");
  verify->add_option("--bound", verify_id, "bound id or unique prefix");
  verify->add_flag("--all", all, "verify every catalogued bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*eval) return cmd_eval(cfg, fn, s_text, t_text);
    if (*bounds) return cmd_bounds(cfg, action, bound_id, s_text, x_text);
    if (*verify) return cmd_verify(cfg, verify_id, all);
  } catch (const zg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const zg::NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kUnknown;
  } catch (const zg::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const zg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}

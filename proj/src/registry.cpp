#include "zg/registry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <thread>
#include <unistd.h>

#include "json.hpp"
#include "zg/chi_theta.hpp"
#include "zg/decimal.hpp"
#include "zg/error.hpp"
#include "zg/gamma.hpp"
#include "zg/philox.hpp"
#include "zg/rs.hpp"
#include "zg/zeta.hpp"

namespace zg {

namespace {

// Rational stand-ins for irrational region edges, rounded toward the inside
// of the hypothesis region.
const char* const kThreePiUp = "9.424777960769379715387930149839";
const char* const kSixteenPiUp = "50.265482457436691815402294132473";
const char* const kSixteenPiDown = "50.265482457436691815402294132472";
const char* const kSqrt3Up = "1.732050807568877293527446341506";

Edge closed(const char* v) { return Edge::at(parse_decimal(v)); }
Edge open(const char* v) { return Edge::open(parse_decimal(v)); }
Edge inf() { return Edge::infinite(); }

Region rect(Edge slo, Edge shi, Edge tlo, Edge thi) { return Region{slo, shi, tlo, thi}; }

RealBall q(long num, long den, mpfr_prec_t p) { return RealBall::from_rational(mpq_class(num, den), p); }
RealBall two_pi(mpfr_prec_t p) { return mul_2si(RealBall::pi(p), 1); }
RealBall rpow(const RealBall& x, const RealBall& y) { return exp(y * log(x)); }

Containment at_least(const RealBall& x, const RealBall& c) {
  if (certainly_le(c, x)) return Containment::inside;
  if (certainly_lt(x, c)) return Containment::outside;
  return Containment::uncertain;
}

RealBall need_aux(const std::optional<RealBall>& aux) {
  if (!aux) throw DomainError("this bound needs the cutoff x (--x)");
  return *aux;
}

mpq_class aux_rational(const std::optional<RealBall>& aux) { return need_aux(aux).mid().to_rational(); }

RealBall zeta_abs(const ComplexBall& s, const Precision& prec) { return abs(zeta_eval(s, prec).value); }

using Checks = std::vector<Check>;

// |zeta(s) - sum_{n <= x} n^-s|, summed directly from floor(x) + 1 so that a
// tiny tail is not lost to cancellation. The target sits well below the bound.
RealBall tail_abs(const ComplexBall& s, const mpq_class& x, const RealBall& bound) {
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (m < 0 || !m.fits_ulong_p()) throw DomainError("cutoff out of range");
  double target = static_cast<double>(mpfr_get_exp(bound.mid().get())) - static_cast<double>(s.prec()) / 2;
  return abs(zeta_tail_value(s, m.get_ui(), target));
}

std::vector<BoundCase> build_registry() {
  std::vector<BoundCase> cases;
  auto add = [&](BoundCase c) { cases.push_back(std::move(c)); };

  {
    BoundCase c;
    c.id = "prop2.2-gamma-sandwich";
    c.anchor = "Gamma modulus sandwich on the right half-plane: sigma > 0, |s| >= 1 (t < 0 by conjugate symmetry)";
    c.formula = "2 e^-sigma e^(-pi|t|/2) (sigma^2+t^2)^(sigma/2-1/4) <= |Gamma(s)| <= 3 e^(-pi|t|/2) (sigma^2+t^2)^(sigma/2-1/4)";
    c.region = rect(open("0"), inf(), inf(), inf());
    c.extra = [](const ComplexBall& s) { return at_least(abs(s), RealBall(1, s.prec())); };
    c.extra_text = "|s| >= 1";
    c.rhs = [](const ComplexBall& s, const auto&) { return gamma_magnitude_bounds(s.re(), s.im()).upper; };
    c.checks = [](const ComplexBall& s, const auto&, const Precision&) {
      GammaBounds b = gamma_magnitude_bounds(s.re(), s.im());
      RealBall g = exp(log_gamma(s).re());
      return Checks{{b.lower, g}, {g, b.upper}};
    };
    add(std::move(c));
  }
  auto chi_case = [&](const char* id, const char* anchor, const char* formula, bool large,
                      RealBall (*bound)(const RealBall&, const RealBall&)) {
    BoundCase c;
    c.id = id;
    c.anchor = anchor;
    c.formula = formula;
    c.region = rect(open("0"), inf(), open("0.5"), inf());
    if (large) {
      c.extra = [](const ComplexBall& s) {
        mpfr_prec_t p = s.prec();
        return at_least(abs(s), two_pi(p) * exp(RealBall(1, p)));
      };
      c.extra_text = "|s| >= 2 pi e";
    }
    c.rhs = [bound](const ComplexBall& s, const auto&) { return bound(s.re(), s.im()); };
    c.checks = [bound](const ComplexBall& s, const auto&, const Precision&) {
      return Checks{{abs(chi_value(s)), bound(s.re(), s.im())}};
    };
    add(std::move(c));
  };
  chi_case("prop2.3-chi-sigma-pos", "chi modulus on the right: sigma > 0, t > 1/2",
           "|chi(s)| <= (2 pi e)^sigma |s|^(1/2-sigma)", false, chi_bound_sigma_pos);
  chi_case("prop2.3-chi-large-modulus", "chi modulus for large |s|: sigma > 0, t > 1/2, |s| >= 2 pi e",
           "|chi(s)| <= (sigma^2+t^2)^(1/4)", true, chi_bound_large_modulus);
  chi_case("prop2.3-chi-alt-form", "chi modulus, product form: sigma > 0, t > 1/2",
           "|chi(s)| <= (sigma^2+t^2)^(1/4) (4 pi^2 e^2/(sigma^2+t^2))^(sigma/2)", false, chi_bound_alt_form);
  {
    BoundCase c;
    c.id = "prop2.4-chi-left";
    c.anchor = "chi modulus on the left: sigma <= 0, t >= 1/2";
    c.formula = "|chi(s)| <= 6/(2 pi)^(1-sigma) ((1-sigma)^2+t^2)^(1/4-sigma/2)";
    c.region = rect(inf(), closed("0"), closed("0.5"), inf());
    c.rhs = [](const ComplexBall& s, const auto&) { return chi_bound_left(s.re(), s.im()); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision&) {
      return Checks{{abs(chi_value(s)), chi_bound_left(s.re(), s.im())}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "prop3.1-theta-growth";
    c.anchor = "theta growth for complex argument: |t| >= 4, |Re t| >= 1 (Re t <= -1 by oddness); coordinates are (Re t, Im t)";
    c.formula = "|theta(t)| <= 2 |t| log |t|";
    c.region = rect(closed("1"), inf(), inf(), inf());
    c.caps = Caps{1, 700, -700, 700};
    c.extra = [](const ComplexBall& t) { return at_least(abs(t), RealBall(4, t.prec())); };
    c.extra_text = "|t| >= 4";
    c.rhs = [](const ComplexBall& t, const auto&) { return theta_growth_bound(t); };
    c.checks = [](const ComplexBall& t, const auto&, const Precision&) {
      return Checks{{abs(theta(t)), theta_growth_bound(t)}};
    };
    add(std::move(c));
  }
  auto zeta_case = [&](const char* id, const char* anchor, const char* formula, Region r,
                       RealBall (*bound)(const ComplexBall&)) {
    BoundCase c;
    c.id = id;
    c.anchor = anchor;
    c.formula = formula;
    c.region = r;
    c.rhs = [bound](const ComplexBall& s, const auto&) { return bound(s); };
    c.checks = [bound](const ComplexBall& s, const auto&, const Precision& prec) {
      return Checks{{zeta_abs(s, prec), bound(s)}};
    };
    add(std::move(c));
  };
  zeta_case("prop4.1-right-halfplane", "zeta on the half-plane sigma >= 2 (t < 0 by conjugate symmetry)",
            "|zeta(s)| < 2", rect(closed("2"), inf(), inf(), inf()), zeta_bound_right);
  zeta_case("prop4.2-left-halfplane",
            "zeta on the left: sigma <= -1, |t| >= 1/2; sampled for t >= 1/2, t <= -1/2 by conjugate symmetry",
            "|zeta(s)| <= 2 (2 pi)^sigma ((1-sigma)^2+t^2)^(1/4-sigma/2)",
            rect(inf(), closed("-1"), closed("0.5"), inf()), zeta_bound_left);
  zeta_case("prop4.3-critical-strip", "zeta in the strip: 0 < sigma <= 2, t >= 2", "|zeta(s)| <= 1 + t/sigma",
            rect(open("0"), closed("2"), closed("2"), inf()), zeta_bound_strip);
  zeta_case("prop4.4-sigma-half", "zeta right of the critical line: sigma >= 1/2, t >= 2", "|zeta(s)| <= 3t",
            rect(closed("0.5"), inf(), closed("2"), inf()), zeta_bound_three_t);

  auto domination = [&](const char* id, const char* anchor, const char* formula, Region r, bool strip) {
    BoundCase c;
    c.id = id;
    c.anchor = anchor;
    c.formula = formula;
    c.region = r;
    auto rhs = [strip](const ComplexBall& s) {
      mpfr_prec_t p = s.prec();
      RealBall e = strip ? -mul_2si(s.re(), -1) : q(-1, 2, p);
      return rpow(s.im() / two_pi(p), e);
    };
    c.rhs = [rhs](const ComplexBall& s, const auto&) { return rhs(s); };
    c.checks = [rhs](const ComplexBall& s, const auto&, const Precision&) {
      return Checks{{abs(rs_expansion(s) - rs_main_sum(s)), rhs(s)}};
    };
    add(std::move(c));
  };
  domination("thm5.1-strip", "R minus its main sum in the strip: 0 <= sigma <= 1, t >= 3 pi",
             "|R(s) - sum_{n <= sqrt(t/2pi)} n^-s| <= (t/2pi)^(-sigma/2)",
             rect(closed("0"), closed("1"), closed(kThreePiUp), inf()), true);
  domination("thm5.1-right", "R minus its main sum on the right: sigma >= 1, t >= 16 pi",
             "|R(s) - sum_{n <= sqrt(t/2pi)} n^-s| <= (t/2pi)^(-1/2)",
             rect(closed("1"), inf(), closed(kSixteenPiUp), inf()), false);
  {
    BoundCase c;
    c.id = "rs-c0-cap";
    c.anchor = "leading Riemann-Siegel coefficient C0 = F(p): sigma > 0, t > 0";
    c.formula = "|C0(p)| = |F(p)| <= 1/2";
    c.region = rect(open("0"), inf(), open("0"), inf());
    c.rhs = [](const ComplexBall& s, const auto&) { return q(1, 2, s.prec()); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision&) {
      return Checks{{abs(rs_terms(s).C0), q(1, 2, s.prec())}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "rs-c1-cap";
    c.anchor = "first Riemann-Siegel correction C1: sigma > 0, t > 0";
    c.formula = "|C1(p)| <= 1/(6 pi) + |sigma - 1/2|/(2 pi)";
    c.region = rect(open("0"), inf(), open("0"), inf());
    c.rhs = [](const ComplexBall& s, const auto&) { return rs_C1_cap(s.re()); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision&) {
      return Checks{{abs(rs_terms(s).C1), rs_C1_cap(s.re())}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "rs-rs1-cap";
    c.anchor = "Riemann-Siegel remainder RS1, tested through zeta = R(s) + chi(s) conj R(1 - conj s): 0 < sigma < 1, t >= 16 pi";
    c.formula = "|zeta - R0(s) - chi conj R0(1-conj s)| <= a^-sigma RS1cap(sigma) + |chi| a^(sigma-1) RS1cap(1-sigma), "
                "RS1cap(sigma) = (1/7) 2^(3 sigma/2) (1.1/a)^2, R0 = expansion without RS1";
    c.region = rect(open("0"), open("1"), closed(kSixteenPiUp), inf());
    c.rhs = [](const ComplexBall& s, const auto&) {
      return rs_RS1_cap(s.re(), sqrt(s.im() / two_pi(s.prec())));
    };
    c.checks = [](const ComplexBall& s, const auto&, const Precision& prec) {
      mpfr_prec_t p = s.prec();
      ComplexBall w = 1 - conj(s);
      RealBall a = sqrt(s.im() / two_pi(p));
      ComplexBall x = chi_value(s);
      ComplexBall main = rs_expansion(s, false) + x * conj(rs_expansion(w, false));
      RealBall lhs = abs(zeta_eval(s, prec).value - main);
      RealBall rhs = exp(-(s.re() * log(a))) * rs_RS1_cap(s.re(), a) +
                     abs(x) * exp(-(w.re() * log(a))) * rs_RS1_cap(w.re(), a);
      return Checks{{lhs, rhs}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "prop5.2-R-minus-one";
    c.anchor = "R close to 1 far right: sigma >= 2, t > 16 pi";
    c.formula = "|R(s) - 1| <= 3/2^sigma + (2 pi/t)^(min(sigma,1)/2)";
    c.region = rect(closed("2"), inf(), open(kSixteenPiUp), inf());
    c.rhs = [](const ComplexBall& s, const auto&) { return R_minus_one_bound(s); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision& prec) {
      return Checks{{abs(R_eval(s, prec) - 1), R_minus_one_bound(s)}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "prop5.3-R-right";
    c.anchor = "R on the right: sigma > 0, t > 16 pi";
    c.formula = "|R(s)| <= 2 sqrt(t/2pi)";
    c.region = rect(open("0"), inf(), open(kSixteenPiUp), inf());
    c.rhs = [](const ComplexBall& s, const auto&) { return R_bound_right(s); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision& prec) {
      return Checks{{abs(R_eval(s, prec)), R_bound_right(s)}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "prop5.4-R-left";
    c.anchor = "R on the left through the reflection of the functional identity: sigma <= 0, t >= 16 pi";
    c.formula = "|R(s)| <= 19 t/(2pi)^(1-sigma) ((1-sigma)^2+t^2)^(1/4-sigma/2)";
    c.region = rect(inf(), closed("0"), closed(kSixteenPiUp), inf());
    c.rhs = [](const ComplexBall& s, const auto&) { return R_bound_left(s); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision& prec) {
      return Checks{{abs(R_eval_reflected(s, prec)), R_bound_left(s)}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "tail-seven-s";
    c.anchor = "zeta minus its partial sum, first branch: sigma >= 0, |s - 1| >= 2, 0 < x <= |s| (t < 0 by conjugate symmetry)";
    c.formula = "|zeta(s) - sum_{n <= x} n^-s| <= 7 |s| x^-sigma";
    c.region = rect(closed("0"), inf(), inf(), inf());
    c.extra = [](const ComplexBall& s) { return at_least(abs(s - 1), RealBall(2, s.prec())); };
    c.extra_text = "|s - 1| >= 2, x drawn uniformly in (0, |s|]";
    c.aux = [](const ComplexBall& s, double u) {
      double m = std::hypot(s.re().mid_d(), s.im().mid_d());
      return mpq_class(std::max(u, 0x1p-20) * m * (1 - 0x1p-30));
    };
    c.rhs = [](const ComplexBall& s, const std::optional<RealBall>& x) {
      return tail_bound_seven_s(s, aux_rational(x));
    };
    c.checks = [](const ComplexBall& s, const std::optional<RealBall>& x, const Precision&) {
      mpq_class xq = aux_rational(x);
      RealBall rhs = tail_bound_seven_s(s, xq);
      return Checks{{tail_abs(s, xq, rhs), rhs}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "tail-sigma-gt1";
    c.anchor = "zeta minus its partial sum, second branch: sigma > 1, x > 0 (t < 0 by conjugate symmetry)";
    c.formula = "|zeta(s) - sum_{n <= x} n^-s| <= x^(1-sigma)/(sigma-1) (1 + (sigma-1)/x)";
    c.region = rect(open("1"), inf(), inf(), inf());
    c.extra_text = "x drawn log-uniformly in [1/8, 1000]";
    c.aux = [](const ComplexBall&, double u) { return mpq_class(std::exp(std::log(0.125) + u * std::log(8000.0))); };
    c.rhs = [](const ComplexBall& s, const std::optional<RealBall>& x) {
      return tail_bound_sigma_gt1(s, aux_rational(x));
    };
    c.checks = [](const ComplexBall& s, const std::optional<RealBall>& x, const Precision&) {
      mpq_class xq = aux_rational(x);
      RealBall rhs = tail_bound_sigma_gt1(s, xq);
      return Checks{{tail_abs(s, xq, rhs), rhs}};
    };
    add(std::move(c));
  }
  {
    BoundCase c;
    c.id = "claim-zeta-half-root";
    c.anchor = "numerical claim on the box 0 <= sigma <= 1/2, sqrt 3 <= t <= 16 pi";
    c.formula = "|zeta(s)| <= 2 |s|^(1/2)";
    c.region = rect(closed("0"), closed("0.5"), closed(kSqrt3Up), closed(kSixteenPiDown));
    c.rhs = [](const ComplexBall& s, const auto&) { return mul_2si(sqrt(abs(s)), 1); };
    c.checks = [](const ComplexBall& s, const auto&, const Precision& prec) {
      return Checks{{zeta_abs(s, prec), mul_2si(sqrt(abs(s)), 1)}};
    };
    add(std::move(c));
  }
  return cases;
}

double coordinate(double lo, double hi, bool log_scale, double u) {
  if (log_scale) return std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
  return lo + u * (hi - lo);
}

bool strictly_inside(const Edge& lo, const Edge& hi, const mpq_class& x) {
  if (lo.is_finite() && !(x > *lo.value)) return false;
  if (hi.is_finite() && !(x < *hi.value)) return false;
  return true;
}

SamplePoint draw_point(const Region& r, const Caps& caps, PhiloxStream& rng) {
  const double s_lo = r.sigma_lo.is_finite() ? r.sigma_lo.value->get_d() : caps.sigma_lo;
  const double s_hi = r.sigma_hi.is_finite() ? r.sigma_hi.value->get_d() : caps.sigma_hi;
  const double t_lo = r.t_lo.is_finite() ? r.t_lo.value->get_d() : caps.t_lo;
  const double t_hi = r.t_hi.is_finite() ? r.t_hi.value->get_d() : caps.t_hi;
  const bool t_log = t_lo > 0;
  const Edge* edges[4] = {&r.sigma_lo, &r.sigma_hi, &r.t_lo, &r.t_hi};
  int finite = 0;
  for (const Edge* e : edges) finite += e->is_finite();

  for (int attempt = 0; attempt < 1000; ++attempt) {
    double sigma = coordinate(s_lo, s_hi, false, rng.next_unit());
    double t = coordinate(std::max(t_lo, t_log ? 1e-300 : t_lo), t_hi, t_log, rng.next_unit());
    double pick = rng.next_unit();
    if (pick < 0.1 && finite > 0) {
      int k = static_cast<int>(rng.next_unit() * finite);
      double delta = (0x1p-10 + rng.next_unit() * (1 - 0x1p-10)) * 1e-3;
      for (int i = 0; i < 4; ++i) {
        if (!edges[i]->is_finite()) continue;
        if (k-- != 0) continue;
        double v = edges[i]->value->get_d();
        double moved = (i % 2 == 0) ? v + delta : v - delta;
        (i < 2 ? sigma : t) = moved;
        break;
      }
    }
    SamplePoint p{mpq_class(sigma), mpq_class(t), std::nullopt};
    if (strictly_inside(r.sigma_lo, r.sigma_hi, p.sigma) && strictly_inside(r.t_lo, r.t_hi, p.t)) return p;
  }
  throw DomainError("could not draw an interior point; region too thin for double sampling");
}

ComplexBall point_ball(const SamplePoint& p, mpfr_prec_t prec) {
  return ComplexBall(RealBall::from_rational(p.sigma, prec), RealBall::from_rational(p.t, prec));
}

std::string fmt(const Float& x, const char* spec = "%.17Rg") {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, spec, x.get());
  return buf;
}

nlohmann::ordered_json ball_json(const RealBall& b) {
  DecimalBall d = format_ball(b, 17);
  return {{"mid", d.mid}, {"rad", d.rad}};
}

}  // namespace

const std::vector<BoundCase>& registry() {
  static const std::vector<BoundCase> cases = build_registry();
  return cases;
}

const BoundCase& find_case(const std::string& id) {
  const BoundCase* hit = nullptr;
  int matches = 0;
  for (const BoundCase& c : registry()) {
    if (c.id == id) return c;
    if (!id.empty() && c.id.compare(0, id.size(), id) == 0) {
      hit = &c;
      ++matches;
    }
  }
  if (matches == 1) return *hit;
  if (matches > 1) throw NotFoundError("ambiguous bound id prefix: " + id);
  throw NotFoundError("unknown bound id: " + id);
}

std::vector<SamplePoint> sample_region(const Region& r, int n, std::uint64_t seed, const Caps& caps,
                                       std::uint64_t stream) {
  if (n < 1) throw DomainError("sample count must be at least 1");
  r.validate();
  if (r.is_empty()) throw DomainError("cannot sample an empty region");
  std::vector<SamplePoint> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    PhiloxStream rng(seed, stream, static_cast<std::uint64_t>(i));
    out.push_back(draw_point(r, caps, rng));
  }
  return out;
}

namespace {

SampleRecord run_sample(const BoundCase& c, std::uint64_t seed, std::uint64_t stream, int index,
                        const Precision& prec) {
  SampleRecord rec;
  rec.skipped = true;
  PhiloxStream rng(seed, stream, static_cast<std::uint64_t>(index));
  const mpfr_prec_t bits = prec.working_bits;
  bool accepted = false;
  for (int attempt = 0; attempt < 1000 && !accepted; ++attempt) {
    rec.point = draw_point(c.region, c.caps, rng);
    if (!c.extra) {
      accepted = true;
      break;
    }
    Containment in = c.extra(point_ball(rec.point, bits));
    if (in == Containment::inside) accepted = true;
    if (in == Containment::uncertain) return rec;
  }
  if (!accepted) return rec;
  if (c.aux) rec.point.aux = c.aux(point_ball(rec.point, bits), rng.next_unit());

  for (int retry = 0; retry <= 3; ++retry) {
    const long wp = prec.working_bits << retry;
    ComplexBall s = point_ball(rec.point, wp);
    std::optional<RealBall> aux;
    if (rec.point.aux) aux = RealBall::from_rational(*rec.point.aux, wp);
    std::vector<Check> checks;
    try {
      checks = c.checks(s, aux, prec.with_bits(wp));
    } catch (const Error&) {
      continue;
    }
    bool conclusive = true, violated = false;
    std::optional<std::size_t> worst;
    std::vector<RealBall> margins;
    for (std::size_t k = 0; k < checks.size(); ++k) {
      margins.push_back(checks[k].rhs - checks[k].lhs);
      if (certainly_lt(checks[k].rhs, checks[k].lhs)) violated = true;
      if (!checks[k].lhs.is_finite() || !checks[k].rhs.is_finite() ||
          compare(checks[k].lhs.upper(), checks[k].rhs.lower()) > 0) {
        conclusive = false;
      }
      if (!worst || compare(margins[k].lower(), margins[*worst].lower()) < 0) worst = k;
    }
    if (!violated && !conclusive) continue;
    rec.skipped = false;
    rec.violation = violated;
    rec.lhs = checks[*worst].lhs;
    rec.rhs = checks[*worst].rhs;
    rec.margin = margins[*worst];
    rec.prec_used = wp;
    return rec;
  }
  return rec;
}

}  // namespace

VerificationReport verify_bound(const std::string& id, int n, std::uint64_t seed, const Precision& prec, int jobs) {
  const BoundCase& c = find_case(id);
  return verify_case(c, static_cast<std::uint64_t>(&c - registry().data()), n, seed, prec, jobs);
}

VerificationReport verify_case(const BoundCase& c, std::uint64_t stream, int n, std::uint64_t seed,
                               const Precision& prec, int jobs) {
  if (n < 1) throw DomainError("sample count must be at least 1");
  VerificationReport rep;
  rep.bound_id = c.id;
  rep.anchor = c.anchor;
  rep.samples = n;
  rep.seed = seed;
  rep.stream = stream;
  rep.prec_bits = prec.working_bits;
  rep.records.resize(n);

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        rep.records[i] = run_sample(c, seed, rep.stream, i, prec);
      } catch (const std::exception&) {
        SampleRecord failed;
        failed.skipped = true;
        rep.records[i] = failed;
      }
    }
  };
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<double> lows;
  for (const SampleRecord& r : rep.records) {
    if (r.skipped) {
      ++rep.skipped;
      continue;
    }
    if (r.violation) ++rep.violations;
    lows.push_back(r.margin.lower().to_double(MPFR_RNDD));
    if (!rep.min_margin || compare(r.margin.lower(), rep.min_margin->lower()) < 0) rep.min_margin = r.margin;
  }
  if (!lows.empty()) {
    std::sort(lows.begin(), lows.end());
    std::size_t m = lows.size() / 2;
    rep.median_margin = lows.size() % 2 ? lows[m] : (lows[m - 1] + lows[m]) / 2;
  }
  rep.needs_escalation = rep.skipped * 20 > rep.samples;
  return rep;
}

std::string report_json(const VerificationReport& r, const ReportOptions& opt) {
  nlohmann::ordered_json j;
  j["bound_id"] = r.bound_id;
  j["anchor"] = r.anchor;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["stream"] = r.stream;
  j["prec_bits"] = r.prec_bits;
  if (!opt.target_error.empty()) j["target_error"] = opt.target_error;
  j["min_margin"] = r.min_margin ? ball_json(*r.min_margin) : nlohmann::ordered_json(nullptr);
  j["median_margin"] = r.median_margin ? nlohmann::ordered_json(*r.median_margin) : nlohmann::ordered_json(nullptr);
  std::vector<const SampleRecord*> bad;
  for (const SampleRecord& s : r.records)
    if (s.violation) bad.push_back(&s);
  std::sort(bad.begin(), bad.end(), [](const SampleRecord* a, const SampleRecord* b) {
    return a->point.sigma != b->point.sigma ? a->point.sigma < b->point.sigma : a->point.t < b->point.t;
  });
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const SampleRecord* s : bad) {
    nlohmann::ordered_json e;
    e["sigma"] = s->point.sigma.get_str();
    e["t"] = s->point.t.get_str();
    if (s->point.aux) e["x"] = s->point.aux->get_str();
    e["lhs"] = ball_json(s->lhs);
    e["rhs"] = ball_json(s->rhs);
    v.push_back(e);
  }
  j["violations"] = v;
  j["skipped"] = r.skipped;
  j["needs_escalation"] = r.needs_escalation;
  if (opt.timestamp) {
    char buf[32];
    std::time_t now = std::time(nullptr);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& r) {
  std::string out = "sigma,t,lhs_hi,rhs_lo,margin\n";
  char buf[256];
  for (const SampleRecord& s : r.records) {
    double sigma = s.point.sigma.get_d(), t = s.point.t.get_d();
    if (s.skipped) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,nan,nan,nan\n", sigma, t);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%s,%s\n", sigma, t, fmt(s.lhs.upper()).c_str(),
                    fmt(s.rhs.lower()).c_str(), fmt(s.margin.lower()).c_str());
    }
    out += buf;
  }
  return out;
}

namespace {

void write_atomic(const std::filesystem::path& path, const std::string& data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp.string());
    f << data;
    if (!f) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_report_files(const VerificationReport& r, const std::string& dir, const ReportOptions& opt) {
  std::filesystem::create_directories(dir);
  write_atomic(std::filesystem::path(dir) / (r.bound_id + ".json"), report_json(r, opt));
  write_atomic(std::filesystem::path(dir) / (r.bound_id + ".csv"), report_csv(r));
}

}  // namespace zg

#include "zg/rs.hpp"

#include <array>
#include <map>
#include <mutex>

#include "zg/error.hpp"
#include "zg/zeta.hpp"

namespace zg {

namespace {

using Jet = std::array<ComplexBall, 4>;

RealBall half(mpfr_prec_t p) { return RealBall::pow2(-1, p); }
RealBall two_pi(mpfr_prec_t p) { return mul_2si(RealBall::pi(p), 1); }

Jet jet_div(const Jet& a, const Jet& b) {
  Jet q = a;
  for (int k = 0; k < 4; ++k) {
    ComplexBall acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Jet jet_exp(const Jet& g) {
  ComplexBall e0 = exp(g[0]);
  ComplexBall g1sq = sqr(g[1]);
  Jet e{e0, e0 * g[1], e0 * (g[2] + mul_2si(g1sq, -1)),
        e0 * (g[3] + g[1] * g[2] + g1sq * g[1] / 6)};
  return e;
}

FValues full_values(mpfr_prec_t p) {
  ComplexBall full(RealBall::full_line(p), RealBall::full_line(p));
  return {full, full, full};
}

FValues F_by_jets(const RealBall& p) {
  mpfr_prec_t prec = p.prec();
  RealBall pi = RealBall::pi(prec);
  RealBall hp = mul_2si(pi, -1);
  RealBall zero(prec);
  Jet g{ComplexBall(zero, pi * (mul_2si(sqr(p), -1) + RealBall::from_rational(mpq_class(3, 8), prec))),
        ComplexBall(zero, pi * p), ComplexBall(zero, hp), ComplexBall(prec)};
  Jet e = jet_exp(g);
  auto [sx, cx] = sin_cos(hp * p);
  std::array<RealBall, 4> c{cx, -(hp * sx), -(mul_2si(sqr(hp) * cx, -1)), pow(hp, 3) * sx / 6};
  RealBall r2 = sqrt(RealBall(2, prec));
  Jet num = e;
  for (int k = 0; k < 4; ++k) num[k] = ComplexBall(e[k].re(), e[k].im() - r2 * c[k]);
  auto [sy, cy] = sin_cos(pi * p);
  Jet den{ComplexBall(mul_2si(cy, 1)), ComplexBall(-(mul_2si(pi * sy, 1))),
          ComplexBall(-(sqr(pi) * cy)), ComplexBall(pow(pi, 3) * sy / 3)};
  Jet q = jet_div(num, den);
  return {q[0], q[1], q[3] * 6};
}

// Taylor coefficients of F(1/2 + h) in h, computed at twice the requested precision.
struct TaylorModel {
  std::vector<ComplexBall> coeffs;
};

const TaylorModel& taylor_model(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, TaylorModel> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;

  const mpfr_prec_t wp = 2 * prec;
  const long n = static_cast<long>(prec) / 4 + 16;
  RealBall pi = RealBall::pi(wp);
  RealBall hp = mul_2si(pi, -1);
  ComplexBall ihp(RealBall(wp), hp);

  // Numerator i e^{pi i (h + h^2)/2} - i (cos(pi h/2) - sin(pi h/2)), coefficients 0..n.
  std::vector<ComplexBall> e(n + 1, ComplexBall(wp));
  e[0] = ComplexBall(1, 0, wp);
  for (long k = 1; k <= n; ++k) {
    ComplexBall acc = e[k - 1];
    if (k >= 2) acc += mul_2si(e[k - 2], 1);
    e[k] = ihp * acc / k;
  }
  std::vector<ComplexBall> num(n + 1, ComplexBall(wp));
  RealBall ck(1, wp);
  for (long k = 0; k <= n; ++k) {
    if (k > 0) ck = ck * hp / k;
    RealBall c = (k % 4 == 0 || k % 4 == 3) ? ck : -ck;
    num[k] = mul_i(e[k] - c);
  }
  // Denominator -2 sin(pi h), divided by h.
  std::vector<RealBall> den(n, RealBall(wp));
  RealBall dk = mul_2si(pi, 1);
  for (long j = 0; 2 * j < n; ++j) {
    if (j > 0) dk = dk * sqr(pi) / ((2 * j) * (2 * j + 1));
    den[2 * j] = (j % 2 == 0) ? -dk : dk;
  }
  TaylorModel m;
  m.coeffs.reserve(n);
  for (long k = 0; k < n; ++k) {
    ComplexBall acc = num[k + 1];
    for (long j = 1; j <= k; ++j) {
      if (j % 2 == 0) acc -= m.coeffs[k - j] * den[j];
    }
    m.coeffs.push_back(acc / den[0]);
  }
  return cache.emplace(prec, std::move(m)).first->second;
}

FValues F_by_taylor(const RealBall& p) {
  mpfr_prec_t prec = p.prec();
  const bool mirrored = p.mid().sign() < 0;
  RealBall h = (mirrored ? -p : p) - half(prec);
  const std::vector<ComplexBall>& f = taylor_model(prec).coeffs;
  const long n = static_cast<long>(f.size());

  RealBall pi = RealBall::pi(prec);
  RealBall M = (exp(pi * 9 / 32) + sqrt(RealBall(2, prec)) * cosh(mul_2si(pi, -3))) /
               mul_2si(mul_2si(pi, -1) - sinh(mul_2si(pi, -2)), 1);
  RealBall rho = RealBall::pow2(-2, prec);
  RealBall q = RealBall::from_float(abs(h).upper(), prec) / rho;

  std::array<ComplexBall, 3> out{ComplexBall(prec), ComplexBall(prec), ComplexBall(prec)};
  const int orders[3] = {0, 1, 3};
  for (int idx = 0; idx < 3; ++idx) {
    const long j = orders[idx];
    ComplexBall acc(2 * prec);
    for (long k = n - 1; k >= j; --k) {
      long falling = 1;
      for (long i = 0; i < j; ++i) falling *= (k - i);
      acc = acc * h + f[k] * falling;
    }
    long nf = 1;
    for (long i = 0; i < j; ++i) nf *= (n - i);
    RealBall T = M / pow(rho, j) * nf * pow(q, n - j);
    RealBall r = q * (n + 1) / (n + 1 - j);
    if (!certainly_lt(r, RealBall(1, prec))) return full_values(prec);
    RealBall tail = T / (1 - r);
    out[idx] = inflated(acc, tail.upper()).with_prec(prec);
  }
  if (mirrored) return {out[0], -out[1], -out[2]};
  return {out[0], out[1], out[2]};
}

RSTerms rs_terms_checked(const ComplexBall& s, unsigned long N) {
  mpfr_prec_t prec = s.prec();
  const RealBall& sigma = s.re();
  const RealBall& t = s.im();
  RealBall pi = RealBall::pi(prec);
  RSTerms r;
  r.a = sqrt(t / two_pi(prec));
  r.N = N;
  r.p = 1 - mul_2si(r.a - static_cast<long>(N), 1);
  RealBall ht = mul_2si(t, -1);
  RealBall phi = ht * log(t / two_pi(prec)) - ht - mul_2si(pi, -3);
  auto [sp, cp] = sin_cos(phi);
  r.U = ComplexBall(cp, -sp);
  FValues fv = rs_F(r.p);
  r.C0 = fv.F;
  ComplexBall second = mul_i(fv.F1 * (mul_2si(pi, -1) * (sigma - half(prec))));
  r.C1 = (fv.F3 / 12 + second) / sqr(pi);
  r.RS1_radius = rs_RS1_cap(sigma, r.a);
  return r;
}

unsigned long floor_ul(const Float& x) {
  if (x.sign() <= 0) return 0;
  return mpfr_get_ui(x.get(), MPFR_RNDD);
}

void require_rs_domain(const ComplexBall& s) {
  if (!s.re().is_nonnegative() || !s.im().is_positive()) {
    throw DomainError("Riemann-Siegel expansion needs sigma >= 0 and t > 0");
  }
}

ComplexBall expansion_with_N(const ComplexBall& s, unsigned long N, bool with_remainder) {
  RSTerms r = rs_terms_checked(s, N);
  ComplexBall corr = r.C0 + r.C1 / r.a;
  if (with_remainder) corr = inflated(corr, r.RS1_radius.upper());
  ComplexBall head = r.U * exp(-(s.re() * log(r.a)));
  if (N % 2 == 0) head = -head;
  return partial_sum_n(s, N) + head * corr;
}

// Pieces of s on which floor(a) is constant, with that floor.
std::vector<std::pair<ComplexBall, unsigned long>> split_by_floor(const ComplexBall& s) {
  mpfr_prec_t prec = s.prec();
  RealBall a = sqrt(s.im() / two_pi(prec));
  unsigned long lo = floor_ul(a.lower()), hi = floor_ul(a.upper());
  if (lo == hi) return {{s, lo}};
  if (hi != lo + 1) throw BoundaryError("ball spans more than one integer crossing of sqrt(t / 2 pi)");
  RealBall tn = two_pi(prec) * static_cast<long>(hi * hi);
  ComplexBall below(s.re(), RealBall::from_interval(s.im().lower(), tn.upper(), prec));
  ComplexBall above(s.re(), RealBall::from_interval(tn.lower(), s.im().upper(), prec));
  return {{below, lo}, {above, hi}};
}

}  // namespace

FValues rs_F(const RealBall& p) {
  mpfr_prec_t prec = p.prec();
  RealBall c = abs(cos(RealBall::pi(prec) * p));
  if (certainly_le(RealBall::pow2(-6, prec), c)) return F_by_jets(p);
  return F_by_taylor(p);
}

RSTerms rs_terms(const ComplexBall& s) {
  require_rs_domain(s);
  RealBall a = sqrt(s.im() / two_pi(s.prec()));
  unsigned long lo = floor_ul(a.lower()), hi = floor_ul(a.upper());
  if (lo != hi) throw BoundaryError("floor(sqrt(t / 2 pi)) is ambiguous on this ball");
  return rs_terms_checked(s, lo);
}

RSTerms rs_terms_with_N(const ComplexBall& s, unsigned long N) {
  require_rs_domain(s);
  return rs_terms_checked(s, N);
}

RealBall rs_C1_cap(const RealBall& sigma) {
  mpfr_prec_t p = sigma.prec();
  RealBall pi = RealBall::pi(p);
  return 1 / (pi * 6) + abs(sigma - half(p)) / two_pi(p);
}

RealBall rs_RS1_cap(const RealBall& sigma, const RealBall& a) {
  mpfr_prec_t p = sigma.prec();
  RealBall growth = exp(sigma * RealBall::log2(p) * 3 / 2);
  RealBall ratio = RealBall::from_rational(mpq_class(11, 10), p) / a;
  return growth * sqr(ratio) / 7;
}

ComplexBall rs_expansion(const ComplexBall& s, bool with_remainder) {
  require_rs_domain(s);
  std::optional<ComplexBall> out;
  for (const auto& [piece, N] : split_by_floor(s)) {
    ComplexBall v = expansion_with_N(piece, N, with_remainder);
    out = out ? hull(*out, v) : v;
  }
  return *out;
}

ComplexBall rs_main_sum(const ComplexBall& s) {
  require_rs_domain(s);
  std::optional<ComplexBall> out;
  for (const auto& [piece, N] : split_by_floor(s)) {
    ComplexBall v = partial_sum_n(s, N);
    out = out ? hull(*out, v) : v;
  }
  return *out;
}

namespace {

ComplexBall at_working_prec(const ComplexBall& s, const Precision& prec) {
  return s.with_prec(std::max<mpfr_prec_t>(s.prec(), prec.working_bits));
}

bool t_at_least_16pi(const RealBall& t) {
  return certainly_le(RealBall::pi(t.prec()) * 16, t);
}

}  // namespace

ComplexBall R_eval(const ComplexBall& s, const Precision& prec) {
  ComplexBall z = at_working_prec(s, prec);
  if (!z.re().is_positive() || !t_at_least_16pi(z.im())) {
    throw DomainError("R evaluation needs sigma > 0 and t >= 16 pi");
  }
  return rs_expansion(z);
}

ComplexBall R_eval_reflected(const ComplexBall& s, const Precision& prec) {
  ComplexBall z = at_working_prec(s, prec);
  if (!z.re().is_nonpositive() || !t_at_least_16pi(z.im())) {
    throw DomainError("reflected R evaluation needs sigma <= 0 and t >= 16 pi");
  }
  ComplexBall w = 1 - conj(z);
  ComplexBall zw = zeta_eval(w, prec).value;
  return conj((zw - R_eval(w, prec)) / chi_value(w));
}

RealBall R_bound_right(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  if (!s.re().is_positive() || !certainly_lt(RealBall::pi(p) * 16, s.im())) {
    throw DomainError("bound needs sigma > 0 and t > 16 pi");
  }
  return mul_2si(sqrt(s.im() / two_pi(p)), 1);
}

RealBall R_bound_left(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  const RealBall& sigma = s.re();
  const RealBall& t = s.im();
  if (!sigma.is_nonpositive() || !t_at_least_16pi(t)) {
    throw DomainError("bound needs sigma <= 0 and t >= 16 pi");
  }
  RealBall q = sqr(1 - sigma) + sqr(t);
  RealBall e = RealBall::pow2(-2, p) - mul_2si(sigma, -1);
  return t * 19 / exp((1 - sigma) * log(two_pi(p))) * exp(e * log(q));
}

RealBall R_minus_one_bound(const ComplexBall& s) {
  mpfr_prec_t p = s.prec();
  const RealBall& sigma = s.re();
  if (!certainly_le(RealBall(2, p), sigma) || !certainly_lt(RealBall::pi(p) * 16, s.im())) {
    throw DomainError("bound needs sigma >= 2 and t > 16 pi");
  }
  RealBall m = min_ball(sigma, RealBall(1, p));
  return 3 / exp(sigma * RealBall::log2(p)) + exp(mul_2si(m, -1) * log(two_pi(p) / s.im()));
}

TaggedBound R_region_bound(const ComplexBall& s) {
  std::optional<TaggedBound> best;
  auto consider = [&](auto f, const char* tag) {
    try {
      RealBall b = f(s);
      if (!best || compare(b.upper(), best->value.upper()) < 0) best = TaggedBound{b, tag};
    } catch (const DomainError&) {
    }
  };
  consider(R_bound_right, "prop5.3-R-right");
  consider(R_bound_left, "prop5.4-R-left");
  consider([](const ComplexBall& z) { return 1 + R_minus_one_bound(z); }, "prop5.2-R-minus-one");
  if (!best) throw DomainError("no R region bound applies at s");
  return *best;
}

ZValue Z_eval(const RealBall& t, const Precision& prec) {
  mpfr_prec_t wp = std::max<mpfr_prec_t>(t.prec(), prec.working_bits);
  RealBall tt = t.with_prec(wp);
  RealBall th = theta(tt).re();
  ComplexBall z = zeta_eval(ComplexBall(half(wp), tt), prec).value;
  auto [st, ct] = sin_cos(th);
  ComplexBall v = ComplexBall(ct, st) * z;
  return {v.re(), v.im()};
}

int certified_sign(const RealBall& x) {
  if (x.is_positive()) return 1;
  if (x.is_negative()) return -1;
  return 0;
}

SignChangeCount count_Z_sign_changes(const mpq_class& lo, const mpq_class& hi, int points,
                                     const Precision& prec) {
  if (points < 2 || hi <= lo) throw DomainError("need at least two grid points on a nonempty interval");
  SignChangeCount out;
  int last = 0;
  for (int k = 0; k < points; ++k) {
    mpq_class tk = lo + (hi - lo) * k / (points - 1);
    int sg = certified_sign(Z_eval(RealBall::from_rational(tk, prec.working_bits), prec).value);
    if (sg == 0) {
      ++out.uncertain;
      continue;
    }
    if (last != 0 && sg != last) ++out.changes;
    last = sg;
  }
  return out;
}

RealBall bisect_Z_zero(const mpq_class& lo_in, const mpq_class& hi_in, const mpq_class& tol,
                       const Precision& prec) {
  mpfr_prec_t wp = prec.working_bits;
  auto sign_at = [&](const mpq_class& x) {
    return certified_sign(Z_eval(RealBall::from_rational(x, wp), prec).value);
  };
  mpq_class lo = lo_in, hi = hi_in;
  int s_lo = sign_at(lo), s_hi = sign_at(hi);
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) throw DomainError("no certified sign change of Z on the interval");
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    int sm = sign_at(mid);
    if (sm == 0) break;
    if (sm == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  RealBall a = RealBall::from_rational(lo, wp), b = RealBall::from_rational(hi, wp);
  return RealBall::from_interval(a.lower(), b.upper(), wp);
}

}  // namespace zg

#include "zg/decimal.hpp"

#include <cctype>
#include <cmath>

#include "zg/error.hpp"

namespace zg {

mpq_class parse_decimal(const std::string& text) {
  std::size_t i = 0, n = text.size();
  auto fail = [&]() -> mpq_class { throw ParseError("not a decimal number: '" + text + "'"); };
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits += text[i++];
    any = true;
  }
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      --scale;
      any = true;
    }
  }
  if (!any) return fail();
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    std::string ed;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
    if (ed.empty() || ed.size() > 6) return fail();
    long e = std::stol(ed);
    scale += eneg ? -e : e;
  }
  if (i != n) return fail();
  mpz_class mant(digits, 10);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class q = scale >= 0 ? mpq_class(mant * p10) : mpq_class(mant, p10);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::pair<mpq_class, mpq_class> parse_complex(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw ParseError("empty complex number");
  if (text.back() != 'i') return {parse_decimal(text), mpq_class(0)};
  std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+" || body == "-") body += "1";
    return {mpq_class(0), parse_decimal(body)};
  }
  std::string re = body.substr(0, split), im = body.substr(split);
  if (im == "+" || im == "-") im += "1";
  return {parse_decimal(re), parse_decimal(im)};
}

ComplexBall complex_ball_from_text(const std::string& text, mpfr_prec_t prec) {
  auto [re, im] = parse_complex(text);
  return ComplexBall(RealBall::from_rational(re, prec), RealBall::from_rational(im, prec));
}

RealBall real_ball_from_text(const std::string& text, mpfr_prec_t prec) {
  return RealBall::from_rational(parse_decimal(text), prec);
}

int digits_for_bits(long bits) { return static_cast<int>(std::ceil(bits * 0.3)); }

DecimalBall format_ball(const RealBall& x, int digits) {
  if (!x.is_finite()) return {"0", "inf"};
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, x.mid().get());
  std::string mid(buf);
  mpfr_free_str(buf);
  mpq_class err = abs(x.mid().to_rational() - parse_decimal(mid));
  mpq_class total = x.rad().to_rational() + err;
  Float r(53);
  mpfr_set_q(r.get(), total.get_mpq_t(), MPFR_RNDU);
  mpfr_asprintf(&buf, "%.3RUe", r.get());
  std::string rad(buf);
  mpfr_free_str(buf);
  return {mid, rad};
}

}  // namespace zg

#include "uclab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

#include "uclab/errors.hpp"

namespace uclab {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigInt binomial_tail(long m, long t) {
  if (m < 0) return 0;
  if (t < 0) t = 0;
  BigInt sum = 0;
  for (long j = t; j <= m; ++j) sum += binomial(m, j);
  return sum;
}

double log2_big(const BigInt& v) {
  if (v <= 0) throw DomainError("log2 of non-positive integer");
  const unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits <= 900) return std::log2(v.convert_to<double>());
  const unsigned shift = bits - 62;
  const double top = BigInt(v >> shift).convert_to<double>();
  return std::log2(top) + static_cast<double>(shift);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0)
    r *= Rational(BigInt(1) << exp);
  else
    r /= Rational(BigInt(1) << -exp);
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator: " + s);
      return Rational(num, den);
    } catch (const std::exception&) {
      throw ParseError("bad rational: " + s);
    }
  }
  // Decimal with optional exponent: sign? digits ('.' digits)? ([eE] sign? digits)?
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  BigInt mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false, in_frac = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (in_frac) ++frac_digits;
      any_digit = true;
    } else if (c == '.' && !in_frac) {
      in_frac = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    bool edigit = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      exp10 = exp10 * 10 + (s[i] - '0');
      edigit = true;
    }
    if (!edigit) throw ParseError("bad exponent: " + s);
    if (eneg) exp10 = -exp10;
  }
  if (!any_digit || i != s.size()) throw ParseError("bad number: " + s);
  Rational r(mantissa);
  const long net = exp10 - frac_digits;
  BigInt pow10 = 1;
  for (long j = 0; j < (net < 0 ? -net : net); ++j) pow10 *= 10;
  if (net >= 0)
    r *= Rational(pow10);
  else
    r /= Rational(pow10);
  return neg ? -r : r;
}

std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace uclab

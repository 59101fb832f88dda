#include "hodgecc/rational.hpp"

namespace hodgecc {

Rational parse_rational(const std::string &text) {
  if (text.empty())
    throw parse_error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0)
      throw parse_error("rational literal with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error &e) {
    throw parse_error("bad rational literal '" + text + "': " + e.what());
  }
}

std::string to_string(const Rational &q) {
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_pow(const Rational &q, long e) {
  if (e < 0) {
    if (q == 0)
      throw math_error("zero to a negative power");
    return rational_pow(Rational(denominator(q), numerator(q)), -e);
  }
  Rational result(1);
  Rational base = q;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1)
      result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer f(1);
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

Integer binomial(long n, long k) {
  if (n < 0)
    throw math_error("binomial with negative upper index");
  if (k < 0 || k > n)
    return Integer(0);
  k = std::min(k, n - k);
  Integer num(1);
  for (long i = 0; i < k; ++i)
    num *= (n - i);
  return num / factorial(static_cast<unsigned>(k));
}

} // namespace hodgecc

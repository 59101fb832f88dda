#include "hodgecc/series.hpp"

namespace hodgecc {

SeriesCoeffs series_truncate(SeriesCoeffs f, int order) {
  f.resize(static_cast<size_t>(order) + 1, Rational(0));
  return f;
}

SeriesCoeffs series_mul(const SeriesCoeffs &f, const SeriesCoeffs &g,
                        int order) {
  SeriesCoeffs h(static_cast<size_t>(order) + 1, Rational(0));
  for (size_t i = 0; i < f.size() && i <= static_cast<size_t>(order); ++i) {
    if (f[i] == 0)
      continue;
    for (size_t j = 0; j < g.size() && i + j <= static_cast<size_t>(order); ++j)
      h[i + j] += f[i] * g[j];
  }
  return h;
}

SeriesCoeffs series_inverse(const SeriesCoeffs &f, int order) {
  if (f.empty() || f[0] == 0)
    throw math_error("series inverse requires nonzero constant term");
  // 1/f = (1/f0) * sum_k u^k with u = 1 - f/f0 (u has zero constant term).
  SeriesCoeffs u(static_cast<size_t>(order) + 1, Rational(0));
  for (size_t i = 1; i <= static_cast<size_t>(order); ++i)
    u[i] = -(i < f.size() ? f[i] : Rational(0)) / f[0];
  SeriesCoeffs result(static_cast<size_t>(order) + 1, Rational(0));
  SeriesCoeffs upow(static_cast<size_t>(order) + 1, Rational(0));
  upow[0] = 1;
  for (int k = 0; k <= order; ++k) {
    for (size_t i = 0; i <= static_cast<size_t>(order); ++i)
      result[i] += upow[i];
    upow = series_mul(upow, u, order);
  }
  for (auto &c : result)
    c /= f[0];
  return result;
}

SeriesCoeffs series_compose(const SeriesCoeffs &f, const SeriesCoeffs &g,
                            int order) {
  if (!g.empty() && g[0] != 0)
    throw math_error("series composition requires zero constant term");
  SeriesCoeffs result(static_cast<size_t>(order) + 1, Rational(0));
  SeriesCoeffs gpow(static_cast<size_t>(order) + 1, Rational(0));
  gpow[0] = 1;
  for (size_t k = 0; k < f.size() && k <= static_cast<size_t>(order); ++k) {
    if (f[k] != 0)
      for (size_t i = 0; i <= static_cast<size_t>(order); ++i)
        result[i] += f[k] * gpow[i];
    gpow = series_mul(gpow, g, order);
  }
  return result;
}

SeriesCoeffs series_log(const SeriesCoeffs &f, int order) {
  if (f.empty() || f[0] != 1)
    throw math_error("series log requires constant term 1");
  // log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k with u = f - 1.
  SeriesCoeffs log1p(static_cast<size_t>(order) + 1, Rational(0));
  for (int k = 1; k <= order; ++k)
    log1p[static_cast<size_t>(k)] = Rational(k % 2 ? 1 : -1, k);
  SeriesCoeffs u = series_truncate(f, order);
  u[0] = 0;
  return series_compose(log1p, u, order);
}

SeriesCoeffs exp_series(int order) {
  SeriesCoeffs f(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k)
    f[static_cast<size_t>(k)] =
        Rational(1, factorial(static_cast<unsigned>(k)));
  return f;
}

SeriesCoeffs inv_todd_series(int order) {
  SeriesCoeffs f(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k)
    f[static_cast<size_t>(k)] =
        Rational(k % 2 ? -1 : 1, factorial(static_cast<unsigned>(k) + 1));
  return f;
}

SeriesCoeffs todd_series(int order) {
  return series_inverse(inv_todd_series(order), order);
}

SeriesSpec named_series(const std::string &name, int order) {
  if (name == "exp")
    return {name, exp_series(order)};
  if (name == "todd")
    return {name, todd_series(order)};
  if (name == "inv_todd")
    return {name, inv_todd_series(order)};
  throw math_error("unknown series name: " + name);
}

} // namespace hodgecc

#pragma once

#include <string>
#include <vector>

#include "hodgecc/rational.hpp"

namespace hodgecc {

// Truncated univariate rational series, stored as coefficients f[0..order].
using SeriesCoeffs = std::vector<Rational>;

SeriesCoeffs series_truncate(SeriesCoeffs f, int order);
SeriesCoeffs series_mul(const SeriesCoeffs &f, const SeriesCoeffs &g, int order);
// Geometric-series inversion; requires f_0 != 0.
SeriesCoeffs series_inverse(const SeriesCoeffs &f, int order);
// f(g(t)) for g with g_0 = 0.
SeriesCoeffs series_compose(const SeriesCoeffs &f, const SeriesCoeffs &g, int order);
// log f for f_0 = 1, via log(1 + u) composed with u = f - 1.
SeriesCoeffs series_log(const SeriesCoeffs &f, int order);

SeriesCoeffs exp_series(int order);      // e^t:             1/k!
SeriesCoeffs inv_todd_series(int order); // (1 - e^{-t})/t:  (-1)^k/(k+1)!
SeriesCoeffs todd_series(int order);     // t/(1 - e^{-t})

// A named or explicit power series; multiplicative-class use requires f_0 = 1.
struct SeriesSpec {
  std::string name; // "exp" | "todd" | "inv_todd" | "" for explicit coeffs
  SeriesCoeffs coeffs;
};

SeriesSpec named_series(const std::string &name, int order);

} // namespace hodgecc

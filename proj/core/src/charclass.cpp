#include "hodgecc/charclass.hpp"

namespace hodgecc {

std::vector<GradedElement> power_sums(const BundleData &E, int N) {
  const auto &pres = E.total_chern.presentation();
  if (N > pres->dimension())
    throw math_error("power sums requested beyond the ambient dimension");
  if (!E.total_chern.constant_term().is_one())
    throw math_error("total Chern class must have constant term 1");

  std::vector<GradedElement> c; // c[k] = degree-k part of the Chern class
  for (int k = 0; k <= N; ++k)
    c.push_back(E.total_chern.degree_part(k));

  std::vector<GradedElement> p;
  p.reserve(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k) {
    // p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k
    GradedElement pk(pres);
    int sign = 1;
    for (int i = 1; i < k; ++i) {
      GradedElement term = c[static_cast<size_t>(i)] * p[static_cast<size_t>(k - i - 1)];
      pk = (sign > 0) ? pk + term : pk - term;
      sign = -sign;
    }
    GradedElement last = c[static_cast<size_t>(k)].scaled(Rational(k));
    pk = (sign > 0) ? pk + last : pk - last;
    p.push_back(std::move(pk));
  }
  return p;
}

GradedElement chern_character(const BundleData &E) {
  const auto &pres = E.total_chern.presentation();
  const int d = pres->dimension();
  GradedElement ch =
      GradedElement::unit(pres).scaled(Rational(E.rank));
  const auto p = power_sums(E, d);
  for (int k = 1; k <= d; ++k)
    ch = ch + p[static_cast<size_t>(k - 1)].scaled(
                  Rational(1, factorial(static_cast<unsigned>(k))));
  return ch;
}

GradedElement mult_class(const SeriesSpec &f, const BundleData &E) {
  if (f.coeffs.empty() || f.coeffs[0] != 1)
    throw math_error("multiplicative class requires a series with f_0 = 1");
  const auto &pres = E.total_chern.presentation();
  const int d = pres->dimension();
  // sum_i log f(x_i) expanded in power sums, then exponentiated.
  const SeriesCoeffs g = series_log(series_truncate(f.coeffs, d), d);
  const auto p = power_sums(E, d);
  GradedElement logsum(pres);
  for (int k = 1; k <= d; ++k)
    if (g[static_cast<size_t>(k)] != 0)
      logsum = logsum + p[static_cast<size_t>(k - 1)].scaled(g[static_cast<size_t>(k)]);
  const SeriesCoeffs expc = exp_series(d);
  return series_apply(expc, logsum);
}

GradedElement todd_class(const VarietyModel &X) {
  const int d = std::max(X.presentation->dimension(), 0);
  return mult_class(named_series("todd", d), X.tangent);
}

GradedElement
split_mult_class(const SeriesSpec &f,
                 const std::vector<std::pair<long, GradedElement>> &roots,
                 const PresentationPtr &pres) {
  if (f.coeffs.empty() || f.coeffs[0] != 1)
    throw math_error("multiplicative class requires a series with f_0 = 1");
  const int d = pres->dimension();
  const SeriesCoeffs fc = series_truncate(f.coeffs, d);
  GradedElement result = GradedElement::unit(pres);
  for (const auto &[mult, root] : roots) {
    if (!same_presentation(root.presentation(), pres))
      throw math_error("root lives in the wrong ring");
    if (mult < 0)
      throw math_error("root multiplicity must be nonnegative");
    if (!root.constant_term().is_zero() || root.max_degree() > 1)
      throw math_error("malformed root: pure degree <= 1 required");
    GradedElement value = series_apply(fc, root);
    result = result * value.pow(static_cast<int>(mult));
  }
  return result;
}

} // namespace hodgecc

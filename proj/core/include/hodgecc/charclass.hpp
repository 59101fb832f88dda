#pragma once

#include <utility>

#include "hodgecc/series.hpp"
#include "hodgecc/variety.hpp"

namespace hodgecc {

// Power sums p_1..p_N of the formal Chern roots, from Newton's identities
//   p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
std::vector<GradedElement> power_sums(const BundleData &E, int N);

// ch(E) = rk(E) + sum_{k>=1} p_k / k!.
GradedElement chern_character(const BundleData &E);

// c^f(E) = prod_i f(x_i) over Chern roots, as exp(sum_i log f(x_i)) with the
// log expanded in power sums. Requires f_0 = 1.
GradedElement mult_class(const SeriesSpec &f, const BundleData &E);

// td_X = c^{t/(1 - e^{-t})}(T_X).
GradedElement todd_class(const VarietyModel &X);

// prod_j f(x_j)^{m_j} over explicit degree <= 1 roots (multiplicity, root);
// the split-bundle route, independent of the Newton-identity path.
GradedElement
split_mult_class(const SeriesSpec &f,
                 const std::vector<std::pair<long, GradedElement>> &roots,
                 const PresentationPtr &pres);

} // namespace hodgecc

#include "hodgecc/equivariant.hpp"

namespace hodgecc {

namespace {

void validate_line(const EigenLine &line, const PresentationPtr &pres,
                   const char *what) {
  if (!same_presentation(line.c1.presentation(), pres))
    throw math_error(std::string(what) + ": c1 lives in the wrong ring");
  if (!line.c1.constant_term().is_zero() || line.c1.max_degree() > 1)
    throw math_error(std::string(what) + ": c1 must be pure degree <= 1");
  if (line.eigenvalue.is_zero())
    throw math_error(std::string(what) + ": zero eigenvalue");
  if (line.multiplicity < 1)
    throw math_error(std::string(what) + ": multiplicity must be positive");
  if (!same_field(line.eigenvalue.field(), pres->field()))
    throw math_error(std::string(what) + ": eigenvalue modulus mismatch");
}

} // namespace

long eigen_rank(const EigenLineSum &lines) {
  long r = 0;
  for (const auto &line : lines)
    r += line.multiplicity;
  return r;
}

GradedElement equivariant_ch(const EquivariantBundle &B) {
  const auto &pres = B.on.F.presentation;
  const SeriesCoeffs expc = exp_series(pres->dimension());
  GradedElement ch(pres);
  for (const auto &line : B.lines) {
    validate_line(line, pres, "equivariant bundle");
    GradedElement e = series_apply(expc, line.c1);
    ch = ch + e.scaled(line.eigenvalue).scaled(Rational(line.multiplicity));
  }
  return ch;
}

GradedElement equivariant_euler(const FixedComponent &C) {
  const auto &pres = C.F.presentation;
  const SeriesCoeffs expc = exp_series(pres->dimension());
  GradedElement euler = GradedElement::unit(pres);
  for (const auto &line : C.conormal) {
    validate_line(line, pres, "conormal");
    // 1 - lambda e^{y} per line summand.
    GradedElement factor =
        GradedElement::unit(pres) - series_apply(expc, line.c1).scaled(line.eigenvalue);
    euler = euler * factor.pow(static_cast<int>(line.multiplicity));
  }
  return euler;
}

bool localization_invertible(const FixedComponent &C) {
  const Scalar one(Rational(1), C.F.presentation->field());
  for (const auto &line : C.conormal)
    if (line.eigenvalue == one)
      return false;
  return true;
}

std::vector<std::pair<FixedComponent, EquivariantBundle>>
diagonal_pn_fixed_data(int n,
                       const std::vector<std::pair<Scalar, long>> &blocks,
                       long k) {
  if (blocks.empty())
    throw math_error("diagonal fixed data requires at least one block");
  const FieldPtr field = blocks[0].first.field();
  long total = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto &[alpha, mult] = blocks[i];
    if (mult < 1)
      throw math_error("block multiplicity must be positive");
    if (alpha.is_zero())
      throw math_error("block eigenvalue must be nonzero");
    if (!same_field(alpha.field(), field))
      throw math_error("modulus mismatch between block eigenvalues");
    for (size_t j = 0; j < i; ++j)
      if (blocks[j].first == alpha)
        throw math_error("repeated eigenvalue across blocks");
    total += mult;
  }
  if (total != n + 1)
    throw math_error("block multiplicities must sum to n + 1");

  std::vector<std::pair<FixedComponent, EquivariantBundle>> data;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto &[alpha_i, m_i] = blocks[i];
    VarietyModel F = multiprojective({static_cast<int>(m_i - 1)}, field);
    const Scalar alpha_i_inv = blocks[i].first.inverse();

    GradedElement minus_h = -GradedElement::generator(F.presentation, 0);
    EigenLineSum conormal;
    for (size_t j = 0; j < blocks.size(); ++j) {
      if (j == i)
        continue;
      conormal.push_back(
          EigenLine{blocks[j].first * alpha_i_inv, minus_h, blocks[j].second});
    }
    FixedComponent component{std::move(F), std::move(conormal)};

    GradedElement kh =
        GradedElement::generator(component.F.presentation, 0).scaled(Rational(k));
    EigenLineSum lines{EigenLine{alpha_i.pow(k), std::move(kh), 1}};
    EquivariantBundle bundle{component, std::move(lines)};
    data.emplace_back(std::move(component), std::move(bundle));
  }
  return data;
}

} // namespace hodgecc

#include "hodgecc/variety.hpp"

#include <algorithm>
#include <set>

namespace hodgecc {

VarietyModel multiprojective(const std::vector<int> &ns, FieldPtr field) {
  std::vector<int> orders;
  orders.reserve(ns.size());
  std::string name;
  int dim = 0;
  for (int n : ns) {
    if (n < 0)
      throw math_error("projective factor with negative dimension");
    orders.push_back(n + 1);
    dim += n;
    if (!name.empty())
      name += "x";
    name += "P" + std::to_string(n);
  }
  if (ns.empty())
    name = "pt";
  PresentationPtr pres = make_presentation(std::move(orders), std::move(field));

  // Euler sequence: c(T_X) = prod_i (1 + h_i)^{n_i + 1}, truncated.
  GradedElement chern = GradedElement::unit(pres);
  for (size_t i = 0; i < ns.size(); ++i) {
    GradedElement factor =
        GradedElement::unit(pres) + GradedElement::generator(pres, static_cast<int>(i));
    chern = chern * factor.pow(ns[i] + 1);
  }
  BundleData tangent{dim, chern};
  return VarietyModel{name, pres, ns, dim, std::move(tangent)};
}

BundleData line_bundle(const VarietyModel &X, const std::vector<long> &k) {
  if (k.size() != X.factors.size())
    throw math_error("line bundle arity mismatch with the variety factors");
  GradedElement chern = GradedElement::unit(X.presentation);
  for (size_t i = 0; i < k.size(); ++i) {
    Exponents e(k.size(), 0);
    e[i] = 1;
    chern.add_term(e, Scalar(Rational(k[i]), X.presentation->field()));
  }
  return BundleData{1, std::move(chern)};
}

BundleData bundle_sum(const BundleData &a, const BundleData &b) {
  if (!same_presentation(a.total_chern.presentation(),
                         b.total_chern.presentation()))
    throw math_error("presentation mismatch between bundles");
  return BundleData{a.rank + b.rank, a.total_chern * b.total_chern};
}

BundleData bundle_dual(const BundleData &a) {
  GradedElement chern(a.total_chern.presentation());
  const int d = a.total_chern.presentation()->dimension();
  for (int p = 0; p <= d; ++p) {
    GradedElement part = a.total_chern.degree_part(p);
    chern = (p % 2) ? chern - part : chern + part;
  }
  return BundleData{a.rank, std::move(chern)};
}

std::vector<long> hodge_diagonal_dims(const VarietyModel &X) {
  std::vector<long> dims(static_cast<size_t>(X.dimension) + 1, 0);
  for (const auto &e : X.presentation->monomials()) {
    int p = 0;
    for (int x : e)
      p += x;
    ++dims[static_cast<size_t>(p)];
  }
  return dims;
}

MorphismModel::MorphismModel(VarietyModel source, VarietyModel target,
                             std::vector<GradedElement> pullback_images,
                             std::map<Exponents, GradedElement> pushforward_matrix)
    : source_(std::move(source)), target_(std::move(target)),
      pullback_images_(std::move(pullback_images)),
      pushforward_(std::move(pushforward_matrix)) {
  if (!same_field(source_.presentation->field(), target_.presentation->field()))
    throw math_error("modulus mismatch between source and target");
  if (static_cast<int>(pullback_images_.size()) !=
      target_.presentation->generator_count())
    throw math_error("pullback image per target generator required");
}

GradedElement MorphismModel::pullback(const GradedElement &y) const {
  if (!same_presentation(y.presentation(), target_.presentation))
    throw math_error("pullback argument lives on the wrong variety");
  GradedElement result(source_.presentation);
  for (const auto &[e, c] : y.terms()) {
    GradedElement image = GradedElement::unit(source_.presentation);
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0)
        image = image * pullback_images_[j].pow(e[j]);
    result = result + image.scaled(c.lifted_to(source_.presentation->field()));
  }
  return result;
}

GradedElement MorphismModel::pushforward(const GradedElement &x) const {
  if (!same_presentation(x.presentation(), source_.presentation))
    throw math_error("pushforward argument lives on the wrong variety");
  GradedElement result(target_.presentation);
  for (const auto &[e, c] : x.terms()) {
    auto row = pushforward_.find(e);
    if (row == pushforward_.end())
      continue;
    result = result + row->second.scaled(c.lifted_to(target_.presentation->field()));
  }
  return result;
}

MorphismModel projection_morphism(const VarietyModel &X,
                                  const std::vector<int> &keep) {
  const int r = static_cast<int>(X.factors.size());
  if (keep.empty())
    throw math_error("projection must keep at least one factor");
  std::set<int> kept(keep.begin(), keep.end());
  if (kept.size() != keep.size())
    throw math_error("projection keep-set has repeated indices");
  for (int i : keep)
    if (i < 0 || i >= r)
      throw math_error("projection keep-set index out of range");

  std::vector<int> target_ns;
  for (int i = 0; i < r; ++i)
    if (kept.count(i))
      target_ns.push_back(X.factors[static_cast<size_t>(i)]);
  VarietyModel Y = multiprojective(target_ns, X.presentation->field());

  // Pullback sends the j-th kept generator back to its source generator.
  std::vector<GradedElement> images;
  for (int i = 0; i < r; ++i)
    if (kept.count(i))
      images.push_back(GradedElement::generator(X.presentation, i));

  // Fiber integration: a monomial survives iff every dropped exponent is
  // maximal; it maps to its kept part.
  std::map<Exponents, GradedElement> matrix;
  for (const auto &e : X.presentation->monomials()) {
    bool full = true;
    Exponents kept_part;
    for (int i = 0; i < r; ++i) {
      if (kept.count(i))
        kept_part.push_back(e[static_cast<size_t>(i)]);
      else if (e[static_cast<size_t>(i)] != X.factors[static_cast<size_t>(i)])
        full = false;
    }
    if (full)
      matrix.emplace(e, GradedElement::monomial(
                            Y.presentation, kept_part,
                            Scalar(Rational(1), Y.presentation->field())));
  }
  return MorphismModel(X, std::move(Y), std::move(images), std::move(matrix));
}

MorphismModel linear_embedding(int m, const VarietyModel &pn) {
  if (pn.factors.size() != 1)
    throw math_error("linear embedding target must be a single P^n");
  const int n = pn.factors[0];
  if (m < 0 || m > n)
    throw math_error("linear embedding requires 0 <= m <= n");
  VarietyModel F = multiprojective({m}, pn.presentation->field());

  std::vector<GradedElement> images{GradedElement::generator(F.presentation, 0)};

  // Gysin shift by the codimension.
  std::map<Exponents, GradedElement> matrix;
  for (int a = 0; a <= m; ++a)
    matrix.emplace(Exponents{a},
                   GradedElement::monomial(
                       pn.presentation, Exponents{a + n - m},
                       Scalar(Rational(1), pn.presentation->field())));
  return MorphismModel(std::move(F), pn, std::move(images), std::move(matrix));
}

} // namespace hodgecc

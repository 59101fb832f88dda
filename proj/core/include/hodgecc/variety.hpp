#pragma once

#include <string>

#include "hodgecc/cohring.hpp"

namespace hodgecc {

// A perfect complex seen through its rank and total Chern class; negative
// (virtual) ranks represent K-theory differences like [O] - [O(-1)].
struct BundleData {
  long rank;
  GradedElement total_chern; // degree-0 coefficient 1
};

struct VarietyModel {
  std::string name;
  PresentationPtr presentation;
  std::vector<int> factors; // n_1, ..., n_r (empty for the point)
  int dimension;
  BundleData tangent; // rank = dimension, c(T_X) from the Euler sequence
};

// Product P^{n_1} x ... x P^{n_r}; r = 0 gives the point. Entries n_i >= 0.
VarietyModel multiprojective(const std::vector<int> &ns,
                             FieldPtr field = NumberField::rationals());

// O(k_1, ..., k_r): rank 1, total Chern class 1 + sum k_i h_i.
BundleData line_bundle(const VarietyModel &X, const std::vector<long> &k);

BundleData bundle_sum(const BundleData &a, const BundleData &b);
BundleData bundle_dual(const BundleData &a);

// Entry p counts the basis monomials of total degree p (HKR diagonal sizes).
std::vector<long> hodge_diagonal_dims(const VarietyModel &X);

// A morphism carried as explicit pullback images of the target generators
// plus an explicit pushforward matrix on the source monomial basis. Builders
// guarantee the projection formula; tests cross-check it.
class MorphismModel {
public:
  MorphismModel(VarietyModel source, VarietyModel target,
                std::vector<GradedElement> pullback_images,
                std::map<Exponents, GradedElement> pushforward_matrix);

  const VarietyModel &source() const { return source_; }
  const VarietyModel &target() const { return target_; }
  const std::vector<GradedElement> &pullback_images() const {
    return pullback_images_;
  }
  const std::map<Exponents, GradedElement> &pushforward_matrix() const {
    return pushforward_;
  }

  GradedElement pullback(const GradedElement &y) const;    // ring map
  GradedElement pushforward(const GradedElement &x) const; // linear map

private:
  VarietyModel source_;
  VarietyModel target_;
  std::vector<GradedElement> pullback_images_;
  std::map<Exponents, GradedElement> pushforward_;
};

// p: X -> product of the kept factors; pushforward integrates over the
// dropped factors (fiber integration).
MorphismModel projection_morphism(const VarietyModel &X,
                                  const std::vector<int> &keep);

// Linear P^m in P^n; pushforward is the Gysin shift h_F^a -> h^{a + n - m}.
MorphismModel linear_embedding(int m, const VarietyModel &pn);

} // namespace hodgecc

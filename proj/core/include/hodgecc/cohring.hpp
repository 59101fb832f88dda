#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "hodgecc/scalar.hpp"

namespace hodgecc {

using Exponents = std::vector<int>;

// Presentation of the Hodge-diagonal ring of a multiprojective space:
// F[h_1..h_r]/(h_i^{orders_i}) with orders_i = n_i + 1. The top class is
// h_1^{n_1} ... h_r^{n_r} and the dimension is sum n_i.
class RingPresentation {
public:
  RingPresentation(std::vector<int> orders, FieldPtr field);

  int generator_count() const { return static_cast<int>(orders_.size()); }
  const std::vector<int> &orders() const { return orders_; }
  int max_exponent(int i) const { return orders_[i] - 1; }
  int dimension() const { return dimension_; }
  const FieldPtr &field() const { return field_; }

  Exponents top_exponents() const; // (n_1, ..., n_r)
  std::vector<Exponents> monomials() const; // full basis, lex order

  friend bool operator==(const RingPresentation &a, const RingPresentation &b) {
    return a.orders_ == b.orders_ && same_field(a.field_, b.field_);
  }

private:
  std::vector<int> orders_;
  FieldPtr field_;
  int dimension_;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

PresentationPtr make_presentation(std::vector<int> orders,
                                  FieldPtr field = NumberField::rationals());
bool same_presentation(const PresentationPtr &a, const PresentationPtr &b);

// Sparse element of the ring above: exponent vector -> nonzero Scalar, with
// monomials beyond a nilpotency bound truncated eagerly.
class GradedElement {
public:
  explicit GradedElement(PresentationPtr pres);
  static GradedElement unit(const PresentationPtr &pres);
  static GradedElement generator(const PresentationPtr &pres, int i);
  static GradedElement monomial(const PresentationPtr &pres, const Exponents &e,
                                const Scalar &c);

  const PresentationPtr &presentation() const { return pres_; }
  const std::map<Exponents, Scalar> &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Exponents &e) const;
  Scalar constant_term() const;
  int max_degree() const; // 0 for the zero element

  // Adds c * h^e, dropping zero results and out-of-bound monomials.
  void add_term(const Exponents &e, const Scalar &c);

  friend GradedElement operator+(const GradedElement &a, const GradedElement &b);
  friend GradedElement operator-(const GradedElement &a, const GradedElement &b);
  friend GradedElement operator*(const GradedElement &a, const GradedElement &b);
  GradedElement operator-() const;
  GradedElement scaled(const Scalar &c) const;
  GradedElement scaled(const Rational &q) const;
  GradedElement pow(int e) const; // e >= 0

  GradedElement degree_part(int p) const;

  friend bool operator==(const GradedElement &a, const GradedElement &b);
  friend bool operator!=(const GradedElement &a, const GradedElement &b) {
    return !(a == b);
  }

private:
  PresentationPtr pres_;
  std::map<Exponents, Scalar> terms_;
};

// Coefficient of the top monomial h_1^{n_1} ... h_r^{n_r}; for the point
// presentation (r = 0) this is the constant term.
Scalar integrate(const GradedElement &a);

// integrate(a * b); the Poincare pairing of the ring.
Scalar poincare_pair(const GradedElement &a, const GradedElement &b);

// sum_k f_k a^k for a with zero constant term (finite: a is nilpotent).
GradedElement series_apply(std::span<const Rational> f, const GradedElement &a);

// Inverse of a unit, by geometric series on the nilpotent part.
GradedElement invert_unit(const GradedElement &a);

} // namespace hodgecc

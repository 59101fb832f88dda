#include "hodgecc/cohring.hpp"

#include <numeric>

namespace hodgecc {

namespace {
int degree_of(const Exponents &e) {
  return std::accumulate(e.begin(), e.end(), 0);
}
} // namespace

RingPresentation::RingPresentation(std::vector<int> orders, FieldPtr field)
    : orders_(std::move(orders)), field_(std::move(field)) {
  if (!field_)
    throw math_error("ring presentation without a scalar field");
  dimension_ = 0;
  for (int o : orders_) {
    if (o < 1)
      throw math_error("nilpotency orders must be >= 1");
    dimension_ += o - 1;
  }
}

Exponents RingPresentation::top_exponents() const {
  Exponents top(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    top[i] = orders_[i] - 1;
  return top;
}

std::vector<Exponents> RingPresentation::monomials() const {
  std::vector<Exponents> all;
  Exponents e(orders_.size(), 0);
  while (true) {
    all.push_back(e);
    size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++e[i] < orders_[i])
        break;
      e[i] = 0;
      if (i == 0)
        return all;
    }
    if (orders_.empty())
      return all;
  }
}

PresentationPtr make_presentation(std::vector<int> orders, FieldPtr field) {
  return std::make_shared<const RingPresentation>(std::move(orders),
                                                  std::move(field));
}

bool same_presentation(const PresentationPtr &a, const PresentationPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

GradedElement::GradedElement(PresentationPtr pres) : pres_(std::move(pres)) {
  if (!pres_)
    throw math_error("graded element without a presentation");
}

GradedElement GradedElement::unit(const PresentationPtr &pres) {
  GradedElement a(pres);
  a.add_term(Exponents(pres->generator_count(), 0),
             Scalar(Rational(1), pres->field()));
  return a;
}

GradedElement GradedElement::generator(const PresentationPtr &pres, int i) {
  if (i < 0 || i >= pres->generator_count())
    throw math_error("generator index out of range");
  GradedElement a(pres);
  Exponents e(pres->generator_count(), 0);
  e[static_cast<size_t>(i)] = 1;
  a.add_term(e, Scalar(Rational(1), pres->field()));
  return a;
}

GradedElement GradedElement::monomial(const PresentationPtr &pres,
                                      const Exponents &e, const Scalar &c) {
  GradedElement a(pres);
  a.add_term(e, c);
  return a;
}

Scalar GradedElement::coefficient(const Exponents &e) const {
  auto it = terms_.find(e);
  if (it == terms_.end())
    return Scalar(Rational(0), pres_->field());
  return it->second;
}

Scalar GradedElement::constant_term() const {
  return coefficient(Exponents(pres_->generator_count(), 0));
}

int GradedElement::max_degree() const {
  int d = 0;
  for (const auto &[e, c] : terms_)
    d = std::max(d, degree_of(e));
  return d;
}

void GradedElement::add_term(const Exponents &e, const Scalar &c) {
  if (static_cast<int>(e.size()) != pres_->generator_count())
    throw math_error("exponent vector arity mismatch");
  if (!same_field(c.field(), pres_->field()))
    throw math_error("modulus mismatch between coefficient and ring");
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0)
      throw math_error("negative exponent");
    if (e[i] > pres_->max_exponent(static_cast<int>(i)))
      return; // zero in the quotient
  }
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

namespace {
void require_same_presentation(const GradedElement &a, const GradedElement &b) {
  if (!same_presentation(a.presentation(), b.presentation()))
    throw math_error("presentation mismatch between graded elements");
}
} // namespace

GradedElement operator+(const GradedElement &a, const GradedElement &b) {
  require_same_presentation(a, b);
  GradedElement c = a;
  for (const auto &[e, coeff] : b.terms())
    c.add_term(e, coeff);
  return c;
}

GradedElement operator-(const GradedElement &a, const GradedElement &b) {
  require_same_presentation(a, b);
  GradedElement c = a;
  for (const auto &[e, coeff] : b.terms())
    c.add_term(e, -coeff);
  return c;
}

GradedElement operator*(const GradedElement &a, const GradedElement &b) {
  require_same_presentation(a, b);
  GradedElement c(a.presentation());
  for (const auto &[ea, ca] : a.terms())
    for (const auto &[eb, cb] : b.terms()) {
      Exponents e(ea.size());
      bool alive = true;
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > a.presentation()->max_exponent(static_cast<int>(i))) {
          alive = false;
          break;
        }
      }
      if (alive)
        c.add_term(e, ca * cb);
    }
  return c;
}

GradedElement GradedElement::operator-() const {
  GradedElement c(pres_);
  for (const auto &[e, coeff] : terms_)
    c.add_term(e, -coeff);
  return c;
}

GradedElement GradedElement::scaled(const Scalar &c) const {
  GradedElement r(pres_);
  for (const auto &[e, coeff] : terms_)
    r.add_term(e, coeff * c);
  return r;
}

GradedElement GradedElement::scaled(const Rational &q) const {
  return scaled(Scalar(q, pres_->field()));
}

GradedElement GradedElement::pow(int e) const {
  if (e < 0)
    throw math_error("negative power of a graded element");
  GradedElement result = unit(pres_);
  GradedElement base = *this;
  while (e) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

GradedElement GradedElement::degree_part(int p) const {
  GradedElement r(pres_);
  for (const auto &[e, coeff] : terms_)
    if (degree_of(e) == p)
      r.add_term(e, coeff);
  return r;
}

bool operator==(const GradedElement &a, const GradedElement &b) {
  if (!same_presentation(a.presentation(), b.presentation()))
    return false;
  return a.terms() == b.terms();
}

Scalar integrate(const GradedElement &a) {
  return a.coefficient(a.presentation()->top_exponents());
}

Scalar poincare_pair(const GradedElement &a, const GradedElement &b) {
  return integrate(a * b);
}

GradedElement series_apply(std::span<const Rational> f,
                           const GradedElement &a) {
  if (!a.constant_term().is_zero())
    throw math_error("series argument must have zero constant term");
  const auto &pres = a.presentation();
  GradedElement result(pres);
  GradedElement apow = GradedElement::unit(pres);
  const size_t cutoff =
      std::min(f.size(), static_cast<size_t>(pres->dimension()) + 1);
  for (size_t k = 0; k < cutoff; ++k) {
    if (f[k] != 0)
      result = result + apow.scaled(f[k]);
    if (k + 1 < cutoff)
      apow = apow * a;
  }
  return result;
}

GradedElement invert_unit(const GradedElement &a) {
  const auto &pres = a.presentation();
  const Scalar a0 = a.constant_term();
  if (a0.is_zero())
    throw math_error("not a unit: zero constant term");
  Scalar a0inv(Rational(0), pres->field());
  try {
    a0inv = a0.inverse();
  } catch (const math_error &) {
    throw math_error("not a unit: constant term is not invertible");
  }
  // a = a0 (1 - u) with u nilpotent; 1/a = (1/a0) sum u^k.
  GradedElement u = GradedElement::unit(pres) - a.scaled(a0inv);
  GradedElement result(pres);
  GradedElement upow = GradedElement::unit(pres);
  for (int k = 0; k <= pres->dimension(); ++k) {
    result = result + upow;
    if (k < pres->dimension())
      upow = upow * u;
  }
  return result.scaled(a0inv);
}

} // namespace hodgecc

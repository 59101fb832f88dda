#include "hodgecc/scalar.hpp"

#include <algorithm>

namespace hodgecc {

namespace {

// Polynomials over Q as ascending coefficient vectors, no trailing zeros.

void poly_trim(std::vector<Rational> &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational> &a,
                               const std::vector<Rational> &b) {
  if (a.empty() || b.empty())
    return {};
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

// Euclidean division a = q*b + r with deg r < deg b; b nonzero.
std::pair<std::vector<Rational>, std::vector<Rational>>
poly_divmod(std::vector<Rational> a, const std::vector<Rational> &b) {
  poly_trim(a);
  std::vector<Rational> q;
  if (a.size() < b.size())
    return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (size_t i = a.size(); i-- >= b.size();) {
    const Rational factor = a[i] / lead;
    q[i - (b.size() - 1)] = factor;
    if (factor != 0)
      for (size_t j = 0; j < b.size(); ++j)
        a[i - (b.size() - 1) + j] -= factor * b[j];
    if (i == 0)
      break;
  }
  poly_trim(a);
  return {q, a};
}

std::vector<Rational> poly_sub(std::vector<Rational> a,
                               const std::vector<Rational> &b) {
  if (a.size() < b.size())
    a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  poly_trim(a);
  return a;
}

} // namespace

NumberField::NumberField(std::vector<Rational> monic_coeffs)
    : modulus_(std::move(monic_coeffs)) {
  if (modulus_.size() < 2)
    throw math_error("number field modulus must have degree >= 1");
  if (modulus_.back() != 1)
    throw math_error("number field modulus must be monic");
}

bool NumberField::is_rationals() const {
  return modulus_.size() == 2 && modulus_[0] == -1;
}

const FieldPtr &NumberField::rationals() {
  static const FieldPtr q = std::make_shared<const NumberField>(
      std::vector<Rational>{Rational(-1), Rational(1)});
  return q;
}

bool same_field(const FieldPtr &a, const FieldPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

std::vector<Rational> cyclotomic_modulus(int m) {
  if (m < 1 || m > 30)
    throw math_error("cyclotomic modulus supported for 1 <= m <= 30");
  // Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d.
  std::vector<Rational> num(static_cast<size_t>(m) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0)
      continue;
    auto [q, r] = poly_divmod(num, cyclotomic_modulus(d));
    if (!r.empty())
      throw math_error("cyclotomic division left a remainder");
    num = std::move(q);
  }
  return num;
}

FieldPtr cyclotomic_field(int m) {
  return std::make_shared<const NumberField>(cyclotomic_modulus(m));
}

Scalar::Scalar(Rational q) : Scalar(std::move(q), NumberField::rationals()) {}

Scalar::Scalar(Rational q, FieldPtr field) : field_(std::move(field)) {
  if (!field_)
    throw math_error("scalar constructed without a field");
  coeffs_.assign(static_cast<size_t>(field_->degree()), Rational(0));
  coeffs_[0] = std::move(q);
}

Scalar::Scalar(std::vector<Rational> coeffs, FieldPtr field)
    : field_(std::move(field)) {
  if (!field_)
    throw math_error("scalar constructed without a field");
  reduce(std::move(coeffs));
}

void Scalar::reduce(std::vector<Rational> raw) {
  const size_t deg = static_cast<size_t>(field_->degree());
  if (raw.size() > deg)
    raw = poly_divmod(std::move(raw), field_->modulus()).second;
  raw.resize(deg, Rational(0));
  coeffs_ = std::move(raw);
}

bool Scalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1)
    return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational &c) { return c == 0; });
}

bool Scalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational &c) { return c == 0; });
}

Rational Scalar::rational_value() const {
  if (!is_rational())
    throw math_error("scalar is not a rational constant");
  return coeffs_[0];
}

Scalar Scalar::lifted_to(const FieldPtr &field) const {
  if (same_field(field_, field))
    return Scalar(coeffs_, field);
  if (field_->is_rationals())
    return Scalar(coeffs_[0], field);
  throw math_error("modulus mismatch: cannot lift scalar between extensions");
}

namespace {
void require_same_field(const Scalar &a, const Scalar &b) {
  if (!same_field(a.field(), b.field()))
    throw math_error("modulus mismatch between scalars");
}
} // namespace

Scalar operator+(const Scalar &a, const Scalar &b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    c[i] += b.coeffs()[i];
  return Scalar(std::move(c), a.field());
}

Scalar operator-(const Scalar &a, const Scalar &b) {
  require_same_field(a, b);
  std::vector<Rational> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    c[i] -= b.coeffs()[i];
  return Scalar(std::move(c), a.field());
}

Scalar operator*(const Scalar &a, const Scalar &b) {
  require_same_field(a, b);
  return Scalar(poly_mul(a.coeffs(), b.coeffs()), a.field());
}

Scalar Scalar::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto &x : c)
    x = -x;
  return Scalar(std::move(c), field_);
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw math_error("division by zero");
  // Extended Euclid: u*a + v*p = g. For irreducible p, g is a nonzero
  // constant and a^{-1} = u/g.
  std::vector<Rational> r0 = field_->modulus();
  std::vector<Rational> r1 = coeffs_;
  poly_trim(r1);
  std::vector<Rational> u0; // empty = zero polynomial
  std::vector<Rational> u1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    std::vector<Rational> u2 = poly_sub(std::move(u0), poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.size() != 1)
    throw math_error("no inverse: residue shares a factor with the modulus");
  std::vector<Rational> inv = u0;
  for (auto &c : inv)
    c /= r0[0];
  return Scalar(std::move(inv), field_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  Scalar result(Rational(1), field_);
  Scalar base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

bool operator==(const Scalar &a, const Scalar &b) {
  return same_field(a.field(), b.field()) && a.coeffs() == b.coeffs();
}

Scalar Scalar::generator_power(const FieldPtr &field, long e) {
  std::vector<Rational> z{Rational(0), Rational(1)};
  return Scalar(std::move(z), field).pow(e);
}

} // namespace hodgecc

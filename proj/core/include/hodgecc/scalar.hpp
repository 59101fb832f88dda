#pragma once

#include <memory>
#include <vector>

#include "hodgecc/rational.hpp"

namespace hodgecc {

// A simple extension Q[z]/(p(z)) with p monic of degree >= 1. Irreducibility
// of p is the caller's responsibility; every modulus shipped with the engine
// is z - 1 (plain Q) or a cyclotomic polynomial, both irreducible over Q.
class NumberField {
public:
  // Ascending coefficients p_0, ..., p_d with p_d = 1, d >= 1.
  explicit NumberField(std::vector<Rational> monic_coeffs);

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Rational> &modulus() const { return modulus_; }
  bool is_rationals() const; // modulus z - 1

  // The shared field Q = Q[z]/(z - 1).
  static const std::shared_ptr<const NumberField> &rationals();

  friend bool operator==(const NumberField &a, const NumberField &b) {
    return a.modulus_ == b.modulus_;
  }

private:
  std::vector<Rational> modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

bool same_field(const FieldPtr &a, const FieldPtr &b);

// The m-th cyclotomic polynomial Phi_m as ascending monic coefficients.
// Supported for 1 <= m <= 30.
std::vector<Rational> cyclotomic_modulus(int m);
FieldPtr cyclotomic_field(int m);

// Element of a NumberField: the reduced representative c_0 + c_1 z + ... of
// degree < deg(p). Values are immutable; all operations return new Scalars.
class Scalar {
public:
  Scalar() : Scalar(Rational(0)) {}
  Scalar(long n) : Scalar(Rational(n)) {}
  explicit Scalar(Rational q);
  Scalar(Rational q, FieldPtr field);
  Scalar(std::vector<Rational> coeffs, FieldPtr field); // any length, reduced mod p

  const FieldPtr &field() const { return field_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const; // representative is a constant
  Rational rational_value() const; // requires is_rational()

  // Re-expresses a Q-scalar in another field; identity when fields match.
  Scalar lifted_to(const FieldPtr &field) const;

  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  Scalar operator-() const;

  // Extended Euclid against the modulus. Throws math_error on zero input and
  // on non-invertible residues (possible only over a reducible modulus).
  Scalar inverse() const;
  Scalar pow(long e) const; // negative e via inverse()

  friend bool operator==(const Scalar &a, const Scalar &b);
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  // z^e reduced mod p; the canonical primitive root power in a cyclotomic field.
  static Scalar generator_power(const FieldPtr &field, long e);

private:
  FieldPtr field_;
  std::vector<Rational> coeffs_; // size == field_->degree()
  void reduce(std::vector<Rational> raw);
};

} // namespace hodgecc

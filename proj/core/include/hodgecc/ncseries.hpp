#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hodgecc/rational.hpp"

namespace hodgecc {

// A word over the letters X, Y plus a central square-zero epsilon flag;
// epsilon carries no word degree, so the two truncations are independent.
struct NCKey {
  std::string word;
  bool eps = false;
  auto operator<=>(const NCKey &) const = default;
};

// Truncated noncommutative polynomial over Q[eps]/(eps^2) in X and Y: words
// longer than the truncation degree and eps^2 terms are dropped eagerly.
class NCPoly {
public:
  explicit NCPoly(int truncation);
  static NCPoly constant(int truncation, const Rational &c);
  static NCPoly letter(int truncation, char x, bool eps = false);

  int truncation() const { return truncation_; }
  const std::map<NCKey, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const std::string &word, bool eps) const;

  void add_term(const std::string &word, bool eps, const Rational &c);

  friend NCPoly operator+(const NCPoly &a, const NCPoly &b);
  friend NCPoly operator-(const NCPoly &a, const NCPoly &b);
  friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
  NCPoly operator-() const;
  NCPoly scaled(const Rational &q) const;
  NCPoly eps_flagged() const; // multiplication by epsilon

  friend bool operator==(const NCPoly &a, const NCPoly &b);
  friend bool operator!=(const NCPoly &a, const NCPoly &b) { return !(a == b); }

private:
  int truncation_;
  std::map<NCKey, Rational> terms_;
};

// exp(a) = sum a^j/j!, finite under truncation. Requires a to have no
// constant term without the eps flag.
NCPoly nc_exp(const NCPoly &a);

// f(ad_X)(Y) = sum_j f_j ad_X^j(Y) expanded into words at truncation N.
NCPoly ad_series_apply(std::span<const Rational> f, int truncation);

// Residual of e^{-X} e^{X + eps Y} - 1 - eps f(ad_X)(Y) with
// f = (1 - e^{-t})/t; the zero polynomial iff the identity holds through
// word degree N.
NCPoly dexp_identity_check(int N);
// Same residual with an arbitrary coefficient list (negative controls).
NCPoly dexp_residual(std::span<const Rational> f, int N);

// Strictly upper triangular rational matrix; nilpotent of order <= size.
struct NilpotentMatrix {
  int size;
  std::vector<std::vector<Rational>> entries;
};

// a + b eps with eps^2 = 0.
struct Dual {
  Rational re;
  Rational eps;
  friend bool operator==(const Dual &, const Dual &) = default;
};
using DualMatrix = std::vector<std::vector<Dual>>;

// Both sides of the exponential-derivative identity evaluated exactly over
// Q[eps]/(eps^2): e^{-X} e^{X + eps Y} and 1 + eps f(ad_X)(Y). All series
// terminate since the inputs are nilpotent.
std::pair<DualMatrix, DualMatrix> matrix_dexp_sides(const NilpotentMatrix &X,
                                                    const NilpotentMatrix &Y);
bool matrix_dexp_check(const NilpotentMatrix &X, const NilpotentMatrix &Y);

// Substitution X -> A, Y -> B (eps flags land in the eps part).
DualMatrix nc_evaluate(const NCPoly &p, const NilpotentMatrix &A,
                       const NilpotentMatrix &B);

} // namespace hodgecc

#include "hodgecc/ncseries.hpp"

#include "hodgecc/series.hpp"

namespace hodgecc {

NCPoly::NCPoly(int truncation) : truncation_(truncation) {
  if (truncation_ < 1)
    throw math_error("truncation degree must be >= 1");
}

NCPoly NCPoly::constant(int truncation, const Rational &c) {
  NCPoly p(truncation);
  p.add_term("", false, c);
  return p;
}

NCPoly NCPoly::letter(int truncation, char x, bool eps) {
  if (x != 'X' && x != 'Y')
    throw math_error("letters are X and Y");
  NCPoly p(truncation);
  p.add_term(std::string(1, x), eps, Rational(1));
  return p;
}

Rational NCPoly::coefficient(const std::string &word, bool eps) const {
  auto it = terms_.find(NCKey{word, eps});
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const std::string &word, bool eps, const Rational &c) {
  for (char x : word)
    if (x != 'X' && x != 'Y')
      throw math_error("letters are X and Y");
  if (static_cast<int>(word.size()) > truncation_)
    return;
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(NCKey{word, eps}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

namespace {
void require_same_truncation(const NCPoly &a, const NCPoly &b) {
  if (a.truncation() != b.truncation())
    throw math_error("truncation mismatch");
}
} // namespace

NCPoly operator+(const NCPoly &a, const NCPoly &b) {
  require_same_truncation(a, b);
  NCPoly c = a;
  for (const auto &[key, coeff] : b.terms())
    c.add_term(key.word, key.eps, coeff);
  return c;
}

NCPoly operator-(const NCPoly &a, const NCPoly &b) {
  require_same_truncation(a, b);
  NCPoly c = a;
  for (const auto &[key, coeff] : b.terms())
    c.add_term(key.word, key.eps, -coeff);
  return c;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b) {
  require_same_truncation(a, b);
  NCPoly c(a.truncation());
  for (const auto &[ka, ca] : a.terms())
    for (const auto &[kb, cb] : b.terms()) {
      if (ka.eps && kb.eps)
        continue; // eps^2 = 0
      if (static_cast<int>(ka.word.size() + kb.word.size()) > c.truncation())
        continue;
      c.add_term(ka.word + kb.word, ka.eps || kb.eps, ca * cb);
    }
  return c;
}

NCPoly NCPoly::operator-() const {
  NCPoly c(truncation_);
  for (const auto &[key, coeff] : terms_)
    c.add_term(key.word, key.eps, -coeff);
  return c;
}

NCPoly NCPoly::scaled(const Rational &q) const {
  NCPoly c(truncation_);
  for (const auto &[key, coeff] : terms_)
    c.add_term(key.word, key.eps, coeff * q);
  return c;
}

NCPoly NCPoly::eps_flagged() const {
  NCPoly c(truncation_);
  for (const auto &[key, coeff] : terms_)
    if (!key.eps)
      c.add_term(key.word, true, coeff);
  return c;
}

bool operator==(const NCPoly &a, const NCPoly &b) {
  return a.truncation() == b.truncation() && a.terms() == b.terms();
}

NCPoly nc_exp(const NCPoly &a) {
  if (a.coefficient("", false) != 0)
    throw math_error("exp requires zero constant term");
  NCPoly result = NCPoly::constant(a.truncation(), Rational(1));
  NCPoly inc = NCPoly::constant(a.truncation(), Rational(1));
  // Terminates: the non-eps part of a has positive word degree and eps is
  // square-zero, so a^j dies by j = truncation + 2.
  for (int j = 1; j <= 2 * a.truncation() + 4; ++j) {
    inc = inc * a;
    inc = inc.scaled(Rational(1, j));
    if (inc.is_zero())
      break;
    result = result + inc;
  }
  return result;
}

NCPoly ad_series_apply(std::span<const Rational> f, int truncation) {
  const NCPoly x = NCPoly::letter(truncation, 'X');
  NCPoly iterate = NCPoly::letter(truncation, 'Y');
  NCPoly result(truncation);
  for (size_t j = 0; j < f.size(); ++j) {
    if (f[j] != 0)
      result = result + iterate.scaled(f[j]);
    if (j + 1 < f.size()) {
      iterate = x * iterate - iterate * x;
      if (iterate.is_zero())
        break;
    }
  }
  return result;
}

NCPoly dexp_residual(std::span<const Rational> f, int N) {
  const NCPoly x = NCPoly::letter(N, 'X');
  const NCPoly eps_y = NCPoly::letter(N, 'Y', true);
  const NCPoly lhs = nc_exp(-x) * nc_exp(x + eps_y);
  const NCPoly rhs = NCPoly::constant(N, Rational(1)) +
                     ad_series_apply(f, N).eps_flagged();
  return lhs - rhs;
}

NCPoly dexp_identity_check(int N) {
  const SeriesCoeffs f = inv_todd_series(N);
  return dexp_residual(f, N);
}

namespace {

Dual dual_mul(const Dual &a, const Dual &b) {
  return Dual{a.re * b.re, a.re * b.eps + a.eps * b.re};
}

void check_strictly_upper(const NilpotentMatrix &m) {
  if (m.size < 1 || static_cast<int>(m.entries.size()) != m.size)
    throw math_error("bad matrix size");
  for (int i = 0; i < m.size; ++i) {
    if (static_cast<int>(m.entries[static_cast<size_t>(i)].size()) != m.size)
      throw math_error("bad matrix row size");
    for (int j = 0; j <= i; ++j)
      if (m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
        throw math_error("matrix is not strictly upper triangular");
  }
}

DualMatrix dual_zero(int n) {
  return DualMatrix(static_cast<size_t>(n),
                    std::vector<Dual>(static_cast<size_t>(n),
                                      Dual{Rational(0), Rational(0)}));
}

DualMatrix dual_identity(int n) {
  DualMatrix m = dual_zero(n);
  for (int i = 0; i < n; ++i)
    m[static_cast<size_t>(i)][static_cast<size_t>(i)].re = 1;
  return m;
}

DualMatrix dual_mul(const DualMatrix &a, const DualMatrix &b) {
  const size_t n = a.size();
  DualMatrix c = dual_zero(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const Dual &aik = a[i][k];
      if (aik.re == 0 && aik.eps == 0)
        continue;
      for (size_t j = 0; j < n; ++j) {
        const Dual p = dual_mul(aik, b[k][j]);
        c[i][j].re += p.re;
        c[i][j].eps += p.eps;
      }
    }
  return c;
}

DualMatrix dual_add(DualMatrix a, const DualMatrix &b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) {
      a[i][j].re += b[i][j].re;
      a[i][j].eps += b[i][j].eps;
    }
  return a;
}

DualMatrix dual_scale(DualMatrix a, const Rational &q) {
  for (auto &row : a)
    for (auto &x : row) {
      x.re *= q;
      x.eps *= q;
    }
  return a;
}

bool dual_is_zero(const DualMatrix &a) {
  for (const auto &row : a)
    for (const auto &x : row)
      if (x.re != 0 || x.eps != 0)
        return false;
  return true;
}

// exp of a nilpotent dual matrix; the power series terminates exactly.
DualMatrix dual_exp(const DualMatrix &a) {
  const int n = static_cast<int>(a.size());
  DualMatrix result = dual_identity(n);
  DualMatrix power = dual_identity(n);
  Rational inv_fact(1);
  for (int j = 1; j <= 2 * n + 1; ++j) {
    power = dual_mul(power, a);
    if (dual_is_zero(power))
      break;
    inv_fact /= j;
    result = dual_add(std::move(result), dual_scale(power, inv_fact));
  }
  return result;
}

DualMatrix dual_from(const NilpotentMatrix &re, const NilpotentMatrix *eps) {
  DualMatrix m = dual_zero(re.size);
  for (int i = 0; i < re.size; ++i)
    for (int j = 0; j < re.size; ++j) {
      m[static_cast<size_t>(i)][static_cast<size_t>(j)].re =
          re.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (eps)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)].eps =
            eps->entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  return m;
}

} // namespace

std::pair<DualMatrix, DualMatrix> matrix_dexp_sides(const NilpotentMatrix &X,
                                                    const NilpotentMatrix &Y) {
  check_strictly_upper(X);
  check_strictly_upper(Y);
  if (X.size != Y.size)
    throw math_error("matrix size mismatch");
  const int n = X.size;

  const DualMatrix mx = dual_from(X, nullptr);
  DualMatrix neg_mx = mx;
  for (auto &row : neg_mx)
    for (auto &v : row)
      v.re = -v.re;
  const DualMatrix x_plus_eps_y = dual_from(X, &Y);

  DualMatrix lhs = dual_mul(dual_exp(neg_mx), dual_exp(x_plus_eps_y));

  // 1 + eps * sum_j f_j ad_X^j(Y) with f = (1 - e^{-t})/t; ad_X is nilpotent.
  DualMatrix iterate = dual_from(Y, nullptr);
  DualMatrix sum = dual_zero(n);
  for (int j = 0; j <= 2 * n + 1; ++j) {
    sum = dual_add(std::move(sum),
                   dual_scale(iterate, Rational(j % 2 ? -1 : 1,
                                                 factorial(static_cast<unsigned>(j) + 1))));
    iterate = dual_add(dual_mul(mx, iterate),
                       dual_scale(dual_mul(iterate, mx), Rational(-1)));
    if (dual_is_zero(iterate))
      break;
  }
  DualMatrix rhs = dual_identity(n);
  for (size_t i = 0; i < rhs.size(); ++i)
    for (size_t j = 0; j < rhs.size(); ++j)
      rhs[i][j].eps += sum[i][j].re;

  return {std::move(lhs), std::move(rhs)};
}

bool matrix_dexp_check(const NilpotentMatrix &X, const NilpotentMatrix &Y) {
  const auto [lhs, rhs] = matrix_dexp_sides(X, Y);
  return lhs == rhs;
}

DualMatrix nc_evaluate(const NCPoly &p, const NilpotentMatrix &A,
                       const NilpotentMatrix &B) {
  check_strictly_upper(A);
  check_strictly_upper(B);
  if (A.size != B.size)
    throw math_error("matrix size mismatch");
  const int n = A.size;
  const DualMatrix ma = dual_from(A, nullptr);
  const DualMatrix mb = dual_from(B, nullptr);

  DualMatrix result = dual_zero(n);
  for (const auto &[key, coeff] : p.terms()) {
    DualMatrix word = dual_identity(n);
    for (char c : key.word)
      word = dual_mul(word, c == 'X' ? ma : mb);
    if (key.eps) {
      // multiply by eps: real part shifts into the eps slot
      for (auto &row : word)
        for (auto &v : row) {
          v.eps = v.re;
          v.re = 0;
        }
    }
    result = dual_add(std::move(result), dual_scale(word, coeff));
  }
  return result;
}

} // namespace hodgecc

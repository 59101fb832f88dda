#pragma once

#include <utility>

#include "hodgecc/charclass.hpp"

namespace hodgecc {

// One eigen-line summand: a line bundle with first Chern class c1 (pure
// degree <= 1) on which the endomorphism acts by a nonzero eigenvalue.
struct EigenLine {
  Scalar eigenvalue;
  GradedElement c1;
  long multiplicity;
};

using EigenLineSum = std::vector<EigenLine>;

long eigen_rank(const EigenLineSum &lines);

// A smooth component F of the reduced fixed locus together with the
// eigen-decomposed conormal bundle N^v restricted to F (eigenvalues of g*).
struct FixedComponent {
  VarietyModel F;
  EigenLineSum conormal;
};

// (E, t) restricted to a fixed component, eigen-split with t-eigenvalues.
struct EquivariantBundle {
  FixedComponent on;
  EigenLineSum lines;
};

// ch(E, t)|_F = sum_j m_j mu_j exp(x_j), the fixed-locus form of
// Tr(exp(At(E)) o t).
GradedElement equivariant_ch(const EquivariantBundle &B);

// e_g|_F = prod_j (1 - lambda_j e^{y_j})^{m_j}, the telescoped value of
// sum_k (-1)^k ch(Lambda^k(N^v), Lambda^k(g*)).
GradedElement equivariant_euler(const FixedComponent &C);

// True iff no conormal eigenvalue equals 1, i.e. det(1 - g*|N^v) invertible.
bool localization_invertible(const FixedComponent &C);

// Fixed-locus data for g = diag(alpha_0 I_{m_0}, ..., alpha_s I_{m_s}) on P^n
// and E = O(k): component i is P^{m_i - 1} with conormal summands
// (alpha_{i'}/alpha_i, -h, m_{i'}) for i' != i and fiber eigenvalue alpha_i^k.
// The induced trace on a section monomial x^e is prod_i alpha_i^{e over block i}.
std::vector<std::pair<FixedComponent, EquivariantBundle>>
diagonal_pn_fixed_data(int n, const std::vector<std::pair<Scalar, long>> &blocks,
                       long k);

} // namespace hodgecc

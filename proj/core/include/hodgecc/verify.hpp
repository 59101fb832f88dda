#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgecc/json_io.hpp"

namespace hodgecc {

// One checked identity: both sides in canonical serialized form, the exact
// equality flag, and diagnostics (e.g. localization failures).
struct Report {
  std::string id;
  std::string kind;
  json lhs;
  json rhs;
  bool equal = false;
  std::vector<std::string> notes;
  bool errored = false; // not serialized; drives the {failed, errored} split

  bool passed() const { return equal && !errored; }
};

json report_to_json(const Report &r);

// chi(P^{n}, O(k)) factor as the polynomial (k+1)...(k+n)/n!, valid for all
// integer k; the oracle side of HRR.
Rational binom_poly(int n, long k);

// chi(X, E) for E a finite sum of line bundles O(k_1..k_r): additive sum of
// products of binomial polynomials. Independent of characteristic classes.
Scalar euler_char_oracle(const VarietyModel &X,
                         const std::vector<std::vector<long>> &lines);

// Trace of the diagonal action on H^0(P^n, O(k)) by monomial enumeration:
// sum over exponent vectors e with |e| = k of prod alpha_i^{e over block i}.
Scalar section_trace_oracle(int n,
                            const std::vector<std::pair<Scalar, long>> &blocks,
                            long k);

Report hrr_check(const VarietyModel &X,
                 const std::vector<std::vector<long>> &lines,
                 const std::string &id = "hrr");

Report grr_projection_check(const VarietyModel &X, const std::vector<int> &keep,
                            const std::vector<long> &k,
                            const std::string &id = "grr_projection");

Report grr_embedding_check(int m, int n, long k, FieldPtr field = nullptr,
                           const std::string &id = "grr_embedding");

// Isolated fixed points of diag(alpha_0..alpha_n) on P^n. Throws
// localization_error when some eigenvalue ratio equals 1.
Report atiyah_bott_check(int n, const std::vector<Scalar> &alphas, long k,
                         const std::string &id = "atiyah_bott");

Report equivariant_hrr_check(int n,
                             const std::vector<std::pair<Scalar, long>> &blocks,
                             long k, const std::string &id = "equivariant_hrr");

// Equivariant GRR for the inclusion of fixed component `component` into P^n,
// E = O(k) on the component with t acting by mu. The right side uses the
// eigenvalue-decorated Koszul expansion of ch(j_*(E, t)).
Report equivariant_grr_check(int n,
                             const std::vector<std::pair<Scalar, long>> &blocks,
                             long k, int component, const Scalar &mu,
                             const std::string &id = "equivariant_grr");

// Newton-identities route vs direct root products for c^f(T_X); f defaults
// to the Todd series.
Report todd_consistency_check(const std::vector<int> &factors,
                              const std::optional<SeriesSpec> &f = std::nullopt,
                              const std::string &id = "todd_consistency");

Report dexp_check(int N, const std::string &id = "dexp");
Report dexp_matrix_check(const NilpotentMatrix &X, const NilpotentMatrix &Y,
                         const std::string &id = "dexp");

// Dispatch on scenario JSON {kind: ..., ...payload}. Unknown kinds and
// malformed payloads throw parse_error; domain failures (localization, bad
// eigenvalues) are captured as errored reports.
Report evaluate_scenario(const json &scenario, const std::string &fallback_id);

} // namespace hodgecc

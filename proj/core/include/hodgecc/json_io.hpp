#pragma once

#include <nlohmann/json.hpp>

#include "hodgecc/equivariant.hpp"
#include "hodgecc/ncseries.hpp"
#include "hodgecc/series.hpp"
#include "hodgecc/variety.hpp"

namespace hodgecc {

using json = nlohmann::json;

// Scalars serialize as a rational string "n/d" when the field is Q, else as
// {modulus: [rational...], coeffs: [rational...]} with ascending monic
// modulus coefficients. Parsing is the exact inverse.
json scalar_to_json(const Scalar &s);
Scalar scalar_from_json(const json &j);
// As above, but rational strings are lifted into `field` and object forms
// must carry the same modulus.
Scalar scalar_from_json(const json &j, const FieldPtr &field);

json modulus_to_json(const NumberField &f);
FieldPtr field_from_json(const json &modulus_coeffs);

// The shared field of an array of scalar JSONs: any {modulus, coeffs} entry
// fixes the extension (all such entries must agree), plain rationals lift.
FieldPtr common_scalar_field(const json &scalar_array);

// {terms: [{exps: [...], coeff: Scalar}...]} sorted lexicographically.
json element_to_json(const GradedElement &a);
GradedElement element_from_json(const json &j, const PresentationPtr &pres);

// {factors: [n_1...n_r], modulus?: [rational...]}
VarietyModel variety_from_json(const json &j);

// {line: [k...]} or {rank: int, chern: GradedElement}.
BundleData bundle_from_json(const json &j, const VarietyModel &X);

// {name: "exp"|"todd"|"inv_todd"} or {coeffs: [rational...]}.
SeriesSpec series_spec_from_json(const json &j, int order);

// {factors: [...], modulus?: ..., conormal: [{lambda, c1, mult}...]}
FixedComponent fixed_component_from_json(const json &j);
// Fixed component fields plus lines: [{mu, c1, mult}...].
EquivariantBundle equivariant_bundle_from_json(const json &j);

json nilpotent_matrix_to_json(const NilpotentMatrix &m);
NilpotentMatrix nilpotent_matrix_from_json(const json &j, int size);

// Canonical text form used for the bit-exact equality of reports.
std::string canonical_dump(const json &j);

} // namespace hodgecc

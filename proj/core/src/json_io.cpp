#include "hodgecc/json_io.hpp"

namespace hodgecc {

namespace {

Rational rational_from_json(const json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long long>());
  throw parse_error("expected a rational as \"n/d\" string or integer");
}

json rationals_to_json(const std::vector<Rational> &v) {
  json a = json::array();
  for (const auto &q : v)
    a.push_back(to_string(q));
  return a;
}

std::vector<Rational> rationals_from_json(const json &j) {
  if (!j.is_array())
    throw parse_error("expected an array of rationals");
  std::vector<Rational> v;
  v.reserve(j.size());
  for (const auto &x : j)
    v.push_back(rational_from_json(x));
  return v;
}

} // namespace

json scalar_to_json(const Scalar &s) {
  if (s.field()->is_rationals())
    return to_string(s.coeffs()[0]);
  return json{{"modulus", rationals_to_json(s.field()->modulus())},
              {"coeffs", rationals_to_json(s.coeffs())}};
}

Scalar scalar_from_json(const json &j) {
  if (j.is_string() || j.is_number_integer())
    return Scalar(rational_from_json(j));
  if (j.is_object() && j.contains("modulus") && j.contains("coeffs")) {
    FieldPtr field = field_from_json(j.at("modulus"));
    return Scalar(rationals_from_json(j.at("coeffs")), field);
  }
  throw parse_error("expected a scalar as \"n/d\" or {modulus, coeffs}");
}

Scalar scalar_from_json(const json &j, const FieldPtr &field) {
  return scalar_from_json(j).lifted_to(field);
}

json modulus_to_json(const NumberField &f) {
  return rationals_to_json(f.modulus());
}

FieldPtr field_from_json(const json &modulus_coeffs) {
  std::vector<Rational> coeffs = rationals_from_json(modulus_coeffs);
  const auto &q = NumberField::rationals();
  if (coeffs == q->modulus())
    return q;
  return std::make_shared<const NumberField>(std::move(coeffs));
}

json element_to_json(const GradedElement &a) {
  json terms = json::array();
  for (const auto &[e, c] : a.terms()) {
    json exps = json::array();
    for (int x : e)
      exps.push_back(x);
    terms.push_back(json{{"exps", exps}, {"coeff", scalar_to_json(c)}});
  }
  return json{{"terms", terms}};
}

GradedElement element_from_json(const json &j, const PresentationPtr &pres) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw parse_error("expected a graded element as {terms: [...]}");
  GradedElement a(pres);
  for (const auto &t : j.at("terms")) {
    if (!t.contains("exps") || !t.contains("coeff"))
      throw parse_error("graded element term needs exps and coeff");
    Exponents e;
    for (const auto &x : t.at("exps"))
      e.push_back(x.get<int>());
    a.add_term(e, scalar_from_json(t.at("coeff"), pres->field()));
  }
  return a;
}

VarietyModel variety_from_json(const json &j) {
  if (!j.is_object() || !j.contains("factors"))
    throw parse_error("expected a variety as {factors: [...], modulus?: [...]}");
  std::vector<int> factors;
  for (const auto &n : j.at("factors"))
    factors.push_back(n.get<int>());
  FieldPtr field = NumberField::rationals();
  if (j.contains("modulus"))
    field = field_from_json(j.at("modulus"));
  return multiprojective(factors, field);
}

BundleData bundle_from_json(const json &j, const VarietyModel &X) {
  if (j.is_object() && j.contains("line")) {
    std::vector<long> k;
    for (const auto &x : j.at("line"))
      k.push_back(x.get<long>());
    return line_bundle(X, k);
  }
  if (j.is_object() && j.contains("rank") && j.contains("chern")) {
    BundleData E{j.at("rank").get<long>(),
                 element_from_json(j.at("chern"), X.presentation)};
    if (!E.total_chern.constant_term().is_one())
      throw parse_error("total Chern class must have constant term 1");
    return E;
  }
  throw parse_error("expected a bundle as {line: [...]} or {rank, chern}");
}

SeriesSpec series_spec_from_json(const json &j, int order) {
  if (j.is_string())
    return named_series(j.get<std::string>(), order);
  if (j.is_object() && j.contains("name"))
    return named_series(j.at("name").get<std::string>(), order);
  if (j.is_object() && j.contains("coeffs"))
    return SeriesSpec{"", rationals_from_json(j.at("coeffs"))};
  throw parse_error("expected a series as {name: ...} or {coeffs: [...]}");
}

FieldPtr common_scalar_field(const json &scalar_array) {
  FieldPtr field = NumberField::rationals();
  for (const auto &s : scalar_array) {
    if (s.is_object() && s.contains("modulus")) {
      FieldPtr f = field_from_json(s.at("modulus"));
      if (field->is_rationals())
        field = f;
      else if (!same_field(field, f))
        throw parse_error("mixed extension moduli in one payload");
    }
  }
  return field;
}

namespace {

EigenLineSum eigen_lines_from_json(const json &j, const PresentationPtr &pres,
                                   const char *value_key) {
  EigenLineSum lines;
  for (const auto &t : j) {
    if (!t.is_object() || !t.contains(value_key) || !t.contains("mult"))
      throw parse_error(std::string("eigen summand needs ") + value_key +
                        ", c1, mult");
    GradedElement c1(pres);
    if (t.contains("c1"))
      c1 = element_from_json(t.at("c1"), pres);
    lines.push_back(EigenLine{scalar_from_json(t.at(value_key), pres->field()),
                              std::move(c1), t.at("mult").get<long>()});
  }
  return lines;
}

json eigenvalues_of(const json &j, const char *key) {
  json values = json::array();
  if (j.is_array())
    for (const auto &t : j)
      if (t.is_object() && t.contains(key))
        values.push_back(t.at(key));
  return values;
}

} // namespace

FixedComponent fixed_component_from_json(const json &j) {
  if (!j.is_object() || !j.contains("factors"))
    throw parse_error("fixed component needs {factors, conormal}");
  const json conormal = j.contains("conormal") ? j.at("conormal") : json::array();
  if (!conormal.is_array())
    throw parse_error("conormal must be an array of eigen summands");

  FieldPtr field = NumberField::rationals();
  if (j.contains("modulus")) {
    field = field_from_json(j.at("modulus"));
  } else {
    json values = eigenvalues_of(conormal, "lambda");
    if (j.contains("lines"))
      for (const auto &mu : eigenvalues_of(j.at("lines"), "mu"))
        values.push_back(mu);
    field = common_scalar_field(values);
  }

  std::vector<int> factors;
  for (const auto &n : j.at("factors"))
    factors.push_back(n.get<int>());
  VarietyModel F = multiprojective(factors, field);
  EigenLineSum lines = eigen_lines_from_json(conormal, F.presentation, "lambda");
  return FixedComponent{std::move(F), std::move(lines)};
}

EquivariantBundle equivariant_bundle_from_json(const json &j) {
  FixedComponent C = fixed_component_from_json(j);
  if (!j.contains("lines") || !j.at("lines").is_array())
    throw parse_error("equivariant bundle needs lines: [{mu, c1, mult}...]");
  EigenLineSum lines =
      eigen_lines_from_json(j.at("lines"), C.F.presentation, "mu");
  return EquivariantBundle{std::move(C), std::move(lines)};
}

json nilpotent_matrix_to_json(const NilpotentMatrix &m) {
  json rows = json::array();
  for (const auto &row : m.entries) {
    json r = json::array();
    for (const auto &x : row)
      r.push_back(to_string(x));
    rows.push_back(r);
  }
  return rows;
}

NilpotentMatrix nilpotent_matrix_from_json(const json &j, int size) {
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    throw parse_error("matrix rows do not match the declared size");
  NilpotentMatrix m{size, {}};
  for (const auto &row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != size)
      throw parse_error("matrix row length does not match the declared size");
    std::vector<Rational> r;
    for (const auto &x : row)
      r.push_back(rational_from_json(x));
    m.entries.push_back(std::move(r));
  }
  return m;
}

std::string canonical_dump(const json &j) { return j.dump(); }

} // namespace hodgecc

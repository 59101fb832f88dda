#include "hodgecc/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hodgecc {

namespace {

json ncpoly_to_json(const NCPoly &p) {
  json terms = json::array();
  for (const auto &[key, c] : p.terms())
    terms.push_back(
        json{{"word", key.word}, {"eps", key.eps}, {"coeff", to_string(c)}});
  return json{{"terms", terms}};
}

json dual_matrix_to_json(const DualMatrix &m) {
  json rows = json::array();
  for (const auto &row : m) {
    json r = json::array();
    for (const auto &v : row)
      r.push_back(json::array({to_string(v.re), to_string(v.eps)}));
    rows.push_back(r);
  }
  return rows;
}

Report make_report(std::string id, std::string kind, json lhs, json rhs,
                   std::vector<std::string> notes = {}) {
  Report r;
  r.id = std::move(id);
  r.kind = std::move(kind);
  r.equal = canonical_dump(lhs) == canonical_dump(rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.notes = std::move(notes);
  return r;
}

} // namespace

json report_to_json(const Report &r) {
  return json{{"id", r.id},   {"kind", r.kind},   {"lhs", r.lhs},
              {"rhs", r.rhs}, {"equal", r.equal}, {"notes", r.notes}};
}

Rational binom_poly(int n, long k) {
  Rational value(1);
  for (int j = 1; j <= n; ++j)
    value *= Rational(k + j);
  return value / Rational(factorial(static_cast<unsigned>(n)));
}

Scalar euler_char_oracle(const VarietyModel &X,
                         const std::vector<std::vector<long>> &lines) {
  Rational chi(0);
  for (const auto &k : lines) {
    if (k.size() != X.factors.size())
      throw math_error("line bundle arity mismatch with the variety factors");
    Rational term(1);
    for (size_t i = 0; i < k.size(); ++i)
      term *= binom_poly(X.factors[i], k[i]);
    chi += term;
  }
  return Scalar(chi, X.presentation->field());
}

Scalar section_trace_oracle(int n,
                            const std::vector<std::pair<Scalar, long>> &blocks,
                            long k) {
  if (k < 0)
    throw math_error("section trace defined for k >= 0 only");
  if (blocks.empty())
    throw math_error("section trace requires at least one block");
  const FieldPtr field = blocks[0].first.field();
  // One weight per homogeneous coordinate.
  std::vector<Scalar> weights;
  for (const auto &[alpha, mult] : blocks) {
    if (!same_field(alpha.field(), field))
      throw math_error("modulus mismatch between block eigenvalues");
    for (long j = 0; j < mult; ++j)
      weights.push_back(alpha);
  }
  if (static_cast<int>(weights.size()) != n + 1)
    throw math_error("block multiplicities must sum to n + 1");

  // Sum of prod_c alpha_c^{e_c} over exponent vectors with |e| = k.
  Scalar trace(Rational(0), field);
  Exponents e(static_cast<size_t>(n) + 1, 0);
  e[0] = static_cast<int>(k);
  while (true) {
    Scalar mon(Rational(1), field);
    for (size_t c = 0; c < weights.size(); ++c)
      if (e[c] > 0)
        mon = mon * weights[c].pow(e[c]);
    trace = trace + mon;

    // next composition of k in colex-style order
    size_t i = 0;
    while (i + 1 < e.size() && e[i] == 0)
      ++i;
    if (i + 1 >= e.size())
      break;
    const int head = e[i];
    e[i] = 0;
    e[0] = head - 1;
    e[i + 1] += 1;
  }
  return trace;
}

Report hrr_check(const VarietyModel &X,
                 const std::vector<std::vector<long>> &lines,
                 const std::string &id) {
  if (lines.empty())
    throw math_error("hrr requires at least one line bundle summand");
  BundleData E = line_bundle(X, lines[0]);
  for (size_t i = 1; i < lines.size(); ++i)
    E = bundle_sum(E, line_bundle(X, lines[i]));
  const Scalar lhs = integrate(chern_character(E) * todd_class(X));
  const Scalar rhs = euler_char_oracle(X, lines);
  return make_report(id, "hrr", scalar_to_json(lhs), scalar_to_json(rhs));
}

Report grr_projection_check(const VarietyModel &X, const std::vector<int> &keep,
                            const std::vector<long> &k, const std::string &id) {
  const MorphismModel f = projection_morphism(X, keep);
  const BundleData E = line_bundle(X, k);
  const GradedElement lhs = f.pushforward(chern_character(E) * todd_class(X));

  // K-theory pushforward oracle: dropped factors contribute their Euler
  // characteristic, kept factors keep their twist.
  const std::set<int> kept(keep.begin(), keep.end());
  Rational chi(1);
  std::vector<long> k_kept;
  for (size_t i = 0; i < X.factors.size(); ++i) {
    if (kept.count(static_cast<int>(i)))
      k_kept.push_back(k[i]);
    else
      chi *= binom_poly(X.factors[i], k[i]);
  }
  const VarietyModel &Y = f.target();
  const GradedElement rhs =
      (chern_character(line_bundle(Y, k_kept)) * todd_class(Y)).scaled(chi);
  return make_report(id, "grr_projection", element_to_json(lhs),
                     element_to_json(rhs));
}

Report grr_embedding_check(int m, int n, long k, FieldPtr field,
                           const std::string &id) {
  if (!field)
    field = NumberField::rationals();
  const VarietyModel PN = multiprojective({n}, field);
  const MorphismModel j = linear_embedding(m, PN);
  const VarietyModel &F = j.source();

  const GradedElement lhs =
      j.pushforward(chern_character(line_bundle(F, {k})) * todd_class(F));

  // Koszul resolution of the linear subspace, as a virtual bundle:
  // [j_* O_F(k)] = sum_a (-1)^a C(n - m, a) [O(k - a)].
  BundleData koszul{0, GradedElement::unit(PN.presentation)};
  for (long a = 0; a <= n - m; ++a) {
    const Integer count = binomial(n - m, a);
    const BundleData line = line_bundle(PN, {k - a});
    const GradedElement cpow =
        line.total_chern.pow(static_cast<int>(count));
    if (a % 2 == 0) {
      koszul.rank += static_cast<long>(count);
      koszul.total_chern = koszul.total_chern * cpow;
    } else {
      koszul.rank -= static_cast<long>(count);
      koszul.total_chern = koszul.total_chern * invert_unit(cpow);
    }
  }
  const GradedElement rhs = chern_character(koszul) * todd_class(PN);
  return make_report(id, "grr_embedding", element_to_json(lhs),
                     element_to_json(rhs));
}

namespace {

std::vector<std::pair<Scalar, long>>
unit_blocks(const std::vector<Scalar> &alphas) {
  std::vector<std::pair<Scalar, long>> blocks;
  blocks.reserve(alphas.size());
  for (const auto &a : alphas)
    blocks.emplace_back(a, 1);
  return blocks;
}

} // namespace

Report atiyah_bott_check(int n, const std::vector<Scalar> &alphas, long k,
                         const std::string &id) {
  if (static_cast<int>(alphas.size()) != n + 1)
    throw math_error("atiyah_bott requires n + 1 eigenvalues");
  if (k < 0)
    throw math_error("atiyah_bott requires k >= 0");
  for (size_t i = 0; i < alphas.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (alphas[i] == alphas[j])
        throw localization_error(
            "localization criterion failed: eigenvalue ratio 1 between fixed "
            "points " +
            std::to_string(j) + " and " + std::to_string(i));

  const auto data = diagonal_pn_fixed_data(n, unit_blocks(alphas), k);
  Scalar lhs(Rational(0), alphas[0].field());
  for (const auto &[component, bundle] : data) {
    if (!localization_invertible(component))
      throw localization_error(
          "localization criterion failed: conormal eigenvalue 1");
    // td = 1 on a point, so each term is Tr(t_x) / det(1 - d_x g).
    lhs = lhs + integrate(equivariant_ch(bundle) *
                          invert_unit(equivariant_euler(component)));
  }
  const Scalar rhs = section_trace_oracle(n, unit_blocks(alphas), k);
  return make_report(id, "atiyah_bott", scalar_to_json(lhs),
                     scalar_to_json(rhs));
}

Report equivariant_hrr_check(int n,
                             const std::vector<std::pair<Scalar, long>> &blocks,
                             long k, const std::string &id) {
  if (k < 0)
    throw math_error("equivariant_hrr requires k >= 0");
  const auto data = diagonal_pn_fixed_data(n, blocks, k);
  Scalar lhs(Rational(0), blocks[0].first.field());
  for (const auto &[component, bundle] : data) {
    if (!localization_invertible(component))
      throw localization_error(
          "localization criterion failed: conormal eigenvalue 1");
    lhs = lhs + integrate(equivariant_ch(bundle) * todd_class(component.F) *
                          invert_unit(equivariant_euler(component)));
  }
  const Scalar rhs = section_trace_oracle(n, blocks, k);
  return make_report(id, "equivariant_hrr", scalar_to_json(lhs),
                     scalar_to_json(rhs));
}

Report equivariant_grr_check(int n,
                             const std::vector<std::pair<Scalar, long>> &blocks,
                             long k, int component, const Scalar &mu,
                             const std::string &id) {
  if (component < 0 || component >= static_cast<int>(blocks.size()))
    throw math_error("fixed component index out of range");
  const auto data = diagonal_pn_fixed_data(n, blocks, 0);
  const FieldPtr field = blocks[0].first.field();
  const Scalar mu_lifted = mu.lifted_to(field);
  if (mu_lifted.is_zero())
    throw math_error("equivariant structure eigenvalue must be nonzero");

  json lhs_parts = json::array();
  json rhs_parts = json::array();
  for (size_t i = 0; i < data.size(); ++i) {
    const FixedComponent &C = data[i].first;
    const auto &pres = C.F.presentation;
    if (!localization_invertible(C))
      throw localization_error(
          "localization criterion failed: conormal eigenvalue 1");

    GradedElement lhs_i(pres);
    GradedElement rhs_i(pres);
    if (static_cast<int>(i) == component) {
      // X = F_i with the trivial action, E = O_F(k) with t acting by mu;
      // the induced map on fixed loci is the identity onto this component.
      GradedElement kh =
          GradedElement::generator(pres, 0).scaled(Rational(k));
      const EquivariantBundle E{C, {EigenLine{mu_lifted, std::move(kh), 1}}};
      const GradedElement ch_E = equivariant_ch(E);
      const GradedElement td_F = todd_class(C.F);
      lhs_i = ch_E * td_F;

      // ch(j_*(E, t)) via the eigenvalue-decorated Koszul expansion
      // sum_S (-1)^{|S|} (prod_S lambda) exp(sum_S y) * ch(E, t),
      // enumerated over subsets of the expanded conormal line list.
      std::vector<const EigenLine *> expanded;
      for (const auto &line : C.conormal)
        for (long rep = 0; rep < line.multiplicity; ++rep)
          expanded.push_back(&line);
      const SeriesCoeffs expc = exp_series(pres->dimension());
      GradedElement koszul(pres);
      const size_t subsets = size_t{1} << expanded.size();
      for (size_t mask = 0; mask < subsets; ++mask) {
        Scalar lam(Rational(1), field);
        GradedElement y(pres);
        int bits = 0;
        for (size_t b = 0; b < expanded.size(); ++b)
          if (mask & (size_t{1} << b)) {
            lam = lam * expanded[b]->eigenvalue;
            y = y + expanded[b]->c1;
            ++bits;
          }
        GradedElement term = series_apply(expc, y).scaled(lam);
        koszul = (bits % 2 == 0) ? koszul + term : koszul - term;
      }
      rhs_i = koszul * ch_E * td_F * invert_unit(equivariant_euler(C));
    }
    lhs_parts.push_back(element_to_json(lhs_i));
    rhs_parts.push_back(element_to_json(rhs_i));
  }
  return make_report(id, "equivariant_grr", std::move(lhs_parts),
                     std::move(rhs_parts));
}

Report todd_consistency_check(const std::vector<int> &factors,
                              const std::optional<SeriesSpec> &f,
                              const std::string &id) {
  const VarietyModel X = multiprojective(factors);
  const int d = X.presentation->dimension();
  const SeriesSpec series = f ? *f : named_series("todd", d);

  const GradedElement lhs = mult_class(series, X.tangent);

  std::vector<std::pair<long, GradedElement>> roots;
  for (size_t i = 0; i < factors.size(); ++i)
    roots.emplace_back(factors[i] + 1,
                       GradedElement::generator(X.presentation,
                                                static_cast<int>(i)));
  const GradedElement rhs = split_mult_class(series, roots, X.presentation);
  return make_report(id, "todd_consistency", element_to_json(lhs),
                     element_to_json(rhs));
}

Report dexp_check(int N, const std::string &id) {
  if (N < 1 || N > 9)
    throw math_error("dexp truncation degree must be in 1..9");
  const NCPoly residual = dexp_identity_check(N);
  Report r = make_report(id, "dexp", ncpoly_to_json(residual),
                         ncpoly_to_json(NCPoly(N)));
  if (!r.equal)
    r.notes.push_back("nonzero residual at truncation " + std::to_string(N));
  return r;
}

Report dexp_matrix_check(const NilpotentMatrix &X, const NilpotentMatrix &Y,
                         const std::string &id) {
  const auto [lhs, rhs] = matrix_dexp_sides(X, Y);
  return make_report(id, "dexp", dual_matrix_to_json(lhs),
                     dual_matrix_to_json(rhs));
}

namespace {

std::vector<std::pair<Scalar, long>> blocks_from_json(const json &payload,
                                                      bool unit_mult_only) {
  if (!payload.contains("blocks") || !payload.at("blocks").is_array())
    throw parse_error("payload needs blocks: [{alpha, mult}...]");
  json alphas = json::array();
  for (const auto &b : payload.at("blocks")) {
    if (!b.is_object() || !b.contains("alpha"))
      throw parse_error("each block needs an alpha eigenvalue");
    alphas.push_back(b.at("alpha"));
  }
  const FieldPtr field = common_scalar_field(alphas);
  std::vector<std::pair<Scalar, long>> blocks;
  for (const auto &b : payload.at("blocks")) {
    const long mult = b.value("mult", 1L);
    if (unit_mult_only && mult != 1)
      throw parse_error("atiyah_bott requires multiplicity-1 blocks");
    blocks.emplace_back(scalar_from_json(b.at("alpha"), field), mult);
  }
  return blocks;
}

std::vector<Scalar> alphas_from_json(const json &payload) {
  if (payload.contains("alphas")) {
    const json &arr = payload.at("alphas");
    if (!arr.is_array())
      throw parse_error("alphas must be an array of scalars");
    const FieldPtr field = common_scalar_field(arr);
    std::vector<Scalar> alphas;
    for (const auto &a : arr)
      alphas.push_back(scalar_from_json(a, field));
    return alphas;
  }
  std::vector<Scalar> alphas;
  for (const auto &[a, mult] : blocks_from_json(payload, true))
    alphas.push_back(a);
  return alphas;
}

std::vector<std::vector<long>> lines_from_json(const json &payload,
                                               size_t arity) {
  std::vector<std::vector<long>> lines;
  auto one = [&](const json &b) {
    if (b.is_object() && b.contains("line")) {
      std::vector<long> k;
      for (const auto &x : b.at("line"))
        k.push_back(x.get<long>());
      lines.push_back(std::move(k));
    } else {
      throw parse_error("hrr bundles must be line bundles {line: [...]}");
    }
  };
  if (payload.contains("bundles"))
    for (const auto &b : payload.at("bundles"))
      one(b);
  else if (payload.contains("bundle"))
    one(payload.at("bundle"));
  else
    throw parse_error("payload needs bundle or bundles");
  for (const auto &k : lines)
    if (k.size() != arity)
      throw parse_error("line bundle arity mismatch with the variety factors");
  return lines;
}

struct ParsedScenario {
  std::string kind;
  std::function<Report(const std::string &)> run;
};

ParsedScenario parse_scenario(const json &scenario) {
  if (!scenario.is_object() || !scenario.contains("kind"))
    throw parse_error("scenario needs a kind");
  const std::string kind = scenario.at("kind").get<std::string>();

  if (kind == "hrr") {
    VarietyModel X = variety_from_json(scenario.at("variety"));
    auto lines = lines_from_json(scenario, X.factors.size());
    return {kind, [X = std::move(X), lines = std::move(lines)](
                      const std::string &id) { return hrr_check(X, lines, id); }};
  }
  if (kind == "grr_projection") {
    VarietyModel X = variety_from_json(scenario.at("variety"));
    std::vector<int> keep;
    if (scenario.contains("keep"))
      for (const auto &x : scenario.at("keep"))
        keep.push_back(x.get<int>());
    else if (scenario.contains("morphism") &&
             scenario.at("morphism").value("kind", "") == "projection")
      for (const auto &x : scenario.at("morphism").at("keep"))
        keep.push_back(x.get<int>());
    else
      throw parse_error("grr_projection needs keep or a projection morphism");
    auto lines = lines_from_json(scenario, X.factors.size());
    if (lines.size() != 1)
      throw parse_error("grr_projection takes a single line bundle");
    return {kind, [X = std::move(X), keep = std::move(keep),
                   k = lines[0]](const std::string &id) {
              return grr_projection_check(X, keep, k, id);
            }};
  }
  if (kind == "grr_embedding") {
    int m = 0, n = 0;
    if (scenario.contains("m") && scenario.contains("n")) {
      m = scenario.at("m").get<int>();
      n = scenario.at("n").get<int>();
    } else if (scenario.contains("variety") && scenario.contains("morphism") &&
               scenario.at("morphism").value("kind", "") == "linear_embedding") {
      VarietyModel X = variety_from_json(scenario.at("variety"));
      if (X.factors.size() != 1)
        throw parse_error("linear embedding target must be a single P^n");
      n = X.factors[0];
      m = scenario.at("morphism").at("m").get<int>();
    } else {
      throw parse_error("grr_embedding needs m, n or a linear_embedding morphism");
    }
    const long k = scenario.value("k", 0L);
    return {kind, [m, n, k](const std::string &id) {
              return grr_embedding_check(m, n, k, nullptr, id);
            }};
  }
  if (kind == "atiyah_bott") {
    const int n = scenario.at("n").get<int>();
    auto alphas = alphas_from_json(scenario);
    const long k = scenario.value("k", 0L);
    return {kind, [n, alphas = std::move(alphas), k](const std::string &id) {
              return atiyah_bott_check(n, alphas, k, id);
            }};
  }
  if (kind == "equivariant_hrr") {
    const int n = scenario.at("n").get<int>();
    auto blocks = blocks_from_json(scenario, false);
    const long k = scenario.value("k", 0L);
    return {kind, [n, blocks = std::move(blocks), k](const std::string &id) {
              return equivariant_hrr_check(n, blocks, k, id);
            }};
  }
  if (kind == "equivariant_grr") {
    const int n = scenario.at("n").get<int>();
    auto blocks = blocks_from_json(scenario, false);
    const long k = scenario.value("k", 0L);
    const int component = scenario.value("component", 0);
    Scalar mu(Rational(1));
    if (scenario.contains("mu"))
      mu = scalar_from_json(scenario.at("mu"), blocks[0].first.field());
    return {kind, [n, blocks = std::move(blocks), k, component,
                   mu = std::move(mu)](const std::string &id) {
              return equivariant_grr_check(n, blocks, k, component, mu, id);
            }};
  }
  if (kind == "dexp") {
    if (scenario.contains("matrix")) {
      const json &mj = scenario.at("matrix");
      const int size = mj.at("size").get<int>();
      NilpotentMatrix X = nilpotent_matrix_from_json(mj.at("X"), size);
      NilpotentMatrix Y = nilpotent_matrix_from_json(mj.at("Y"), size);
      return {kind, [X = std::move(X), Y = std::move(Y)](const std::string &id) {
                return dexp_matrix_check(X, Y, id);
              }};
    }
    const int N = scenario.value("N", 6);
    return {kind, [N](const std::string &id) { return dexp_check(N, id); }};
  }
  if (kind == "todd_consistency") {
    std::vector<int> factors;
    const json &vj = scenario.contains("variety") ? scenario.at("variety")
                                                  : scenario;
    if (!vj.contains("factors"))
      throw parse_error("todd_consistency needs factors");
    for (const auto &x : vj.at("factors"))
      factors.push_back(x.get<int>());
    std::optional<SeriesSpec> f;
    if (scenario.contains("f")) {
      int d = 0;
      for (int n : factors)
        d += n;
      f = series_spec_from_json(scenario.at("f"), d);
    }
    return {kind, [factors = std::move(factors), f = std::move(f)](
                      const std::string &id) {
              return todd_consistency_check(factors, f, id);
            }};
  }
  throw parse_error("unknown scenario kind: " + kind);
}

} // namespace

Report evaluate_scenario(const json &scenario, const std::string &fallback_id) {
  const std::string id =
      scenario.is_object() && scenario.contains("id") &&
              scenario.at("id").is_string()
          ? scenario.at("id").get<std::string>()
          : fallback_id;
  ParsedScenario parsed = [&] {
    try {
      return parse_scenario(scenario);
    } catch (const json::exception &e) {
      throw parse_error(std::string("malformed scenario payload: ") + e.what());
    }
  }();
  try {
    Report r = parsed.run(id);
    r.id = id;
    return r;
  } catch (const math_error &e) {
    Report r;
    r.id = id;
    r.kind = parsed.kind;
    r.lhs = nullptr;
    r.rhs = nullptr;
    r.equal = false;
    r.errored = true;
    r.notes.push_back(e.what());
    return r;
  }
}

} // namespace hodgecc

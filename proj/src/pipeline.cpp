#include "kenso/pipeline.hpp"

#include "kenso/error.hpp"

#include <algorithm>

namespace kenso {

static void attach_common(Report& report, const GeometryAnalysis& g) {
  const FramedManifold& m = g.manifold;
  Json manifold = Json::object();
  manifold["dim"] = m.dim();
  manifold["n"] = m.n();
  manifold["coords"] = m.coords();
  manifold["frame"] = m.frame_names();
  manifold["xi"] = m.frame_names()[m.xi_index()];
  report.doc["manifold"] = std::move(manifold);
  report.doc["input_digest"] = input_digest(g.doc.source);
  report.doc["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
}

Json checks_json(const std::vector<CheckResult>& checks) {
  std::vector<const CheckResult*> ordered;
  ordered.reserve(checks.size());
  for (const CheckResult& c : checks) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(),
            [](const CheckResult* a, const CheckResult* b) { return a->name < b->name; });
  Json out = Json::array();
  for (const CheckResult* c : ordered) {
    Json entry = Json::object();
    entry["name"] = c->name;
    entry["status"] = c->passed ? "pass" : "fail";
    if (c->witness) {
      Json w = Json::object();
      w["args"] = c->witness->args;
      if (c->witness->component) w["component"] = *c->witness->component;
      w["residual"] = c->witness->residual;
      entry["witness"] = std::move(w);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string vector_str(const FramedManifold& m, const FrameVectorField& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const CoeffExpr& c = v.components[i];
    if (c.is_zero()) continue;
    const std::string& name = m.frame_names()[i];
    std::string piece;
    auto rat = c.as_rational();
    if (rat && *rat == 1)
      piece = name;
    else if (rat && *rat == -1)
      piece = "-" + name;
    else if (c.terms().size() == 1)
      piece = c.str() + "*" + name;
    else
      piece = "(" + c.str() + ")*" + name;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

static Json tensor_json(const Tensor02& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) row.push_back(t.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

GeometryAnalysis analyze_geometry(const ManifoldDocument& doc, bool validate) {
  GeometryAnalysis g{doc,
                     build_manifold(doc, validate),
                     Connection(),
                     RiemannTensor(),
                     CurvatureTables{},
                     std::nullopt,
                     {},
                     false,
                     false};
  g.connection = koszul_connection(g.manifold);
  g.riemann_tensor = riemann(g.manifold, g.connection);
  g.tables.ricci = ricci(g.manifold, g.riemann_tensor);
  g.tables.scalar = scalar_curvature(g.manifold, g.tables.ricci);
  g.tables.star_ricci = star_ricci_from_curvature(g.manifold, g.riemann_tensor);
  g.tables.star_scalar = star_scalar(g.manifold, g.tables.star_ricci);

  g.structure_checks = verify_almost_contact(g.manifold);
  g.almost_contact = all_passed(g.structure_checks);
  if (g.almost_contact) {
    std::vector<CheckResult> kenmotsu_checks = verify_kenmotsu(g.manifold, g.connection);
    g.kenmotsu = all_passed(kenmotsu_checks);
    g.structure_checks.insert(g.structure_checks.end(),
                              std::make_move_iterator(kenmotsu_checks.begin()),
                              std::make_move_iterator(kenmotsu_checks.end()));
  }
  if (g.kenmotsu)
    g.star_ricci_closed = star_ricci_kenmotsu_form(g.manifold, g.tables.ricci, true);
  return g;
}

GeometryAnalysis analyze_geometry(const FramedManifold& manifold, ManifoldDocument doc) {
  GeometryAnalysis g{std::move(doc),
                     manifold,
                     Connection(),
                     RiemannTensor(),
                     CurvatureTables{},
                     std::nullopt,
                     {},
                     false,
                     false};
  g.connection = koszul_connection(g.manifold);
  g.riemann_tensor = riemann(g.manifold, g.connection);
  g.tables.ricci = ricci(g.manifold, g.riemann_tensor);
  g.tables.scalar = scalar_curvature(g.manifold, g.tables.ricci);
  g.tables.star_ricci = star_ricci_from_curvature(g.manifold, g.riemann_tensor);
  g.tables.star_scalar = star_scalar(g.manifold, g.tables.star_ricci);
  g.structure_checks = verify_almost_contact(g.manifold);
  g.almost_contact = all_passed(g.structure_checks);
  if (g.almost_contact) {
    std::vector<CheckResult> kenmotsu_checks = verify_kenmotsu(g.manifold, g.connection);
    g.kenmotsu = all_passed(kenmotsu_checks);
    g.structure_checks.insert(g.structure_checks.end(),
                              std::make_move_iterator(kenmotsu_checks.begin()),
                              std::make_move_iterator(kenmotsu_checks.end()));
  }
  if (g.kenmotsu)
    g.star_ricci_closed = star_ricci_kenmotsu_form(g.manifold, g.tables.ricci, true);
  return g;
}

FrameVectorField resolve_vector(const GeometryAnalysis& g, const std::string& name) {
  if (name == "xi") return g.manifold.xi();
  const auto& names = g.manifold.frame_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return g.manifold.basis_field(i);
  if (const VectorLine* line = g.doc.find_vector(name))
    return g.manifold.to_frame_components(coordinate_field(g.doc, *line));
  fail(errc::unknown_name, "no vector field named '" + name + "'");
}

CoeffExpr resolve_function(const GeometryAnalysis& g, const std::string& name_or_expr) {
  if (const CoeffExpr* f = g.doc.find_function(name_or_expr)) return *f;
  CoeffExpr expr = CoeffExpr::parse(name_or_expr);
  if (!g.doc.coords.empty()) {
    std::set<std::string> vars;
    expr.collect_variables(vars);
    for (const std::string& v : vars)
      if (std::find(g.doc.coords.begin(), g.doc.coords.end(), v) == g.doc.coords.end())
        fail(errc::undeclared_coordinate,
             "function uses unknown coordinate '" + v + "'");
  }
  return expr;
}

// ---------------------------------------------------------------------------

Report run_check(const GeometryAnalysis& g) {
  const FramedManifold& m = g.manifold;
  std::vector<CheckResult> checks = g.structure_checks;

  auto boolean_check = [&](const char* name, bool ok) {
    checks.push_back(CheckResult{name, ok, std::nullopt});
  };
  boolean_check("connection_torsion_free", connection_is_torsion_free(m, g.connection));
  boolean_check("connection_metric_compatible", connection_is_metric_compatible(m, g.connection));
  boolean_check("riemann_antisymmetry", riemann_is_antisymmetric(g.riemann_tensor));
  boolean_check("riemann_first_bianchi", riemann_first_bianchi(g.riemann_tensor));
  boolean_check("riemann_pair_symmetry", riemann_pair_symmetric(m, g.riemann_tensor));

  if (g.kenmotsu) {
    std::vector<CheckResult> identities =
        identity_suite(m, g.connection, g.riemann_tensor, g.tables.ricci);
    checks.insert(checks.end(), identities.begin(), identities.end());

    Endomorphism qstar = raise_index(m, g.tables.star_ricci);
    std::vector<CheckResult> lemma = qstar_derivative_checks(m, g.connection, qstar);
    checks.insert(checks.end(), lemma.begin(), lemma.end());

    boolean_check("star_ricci_route_agreement", g.tables.star_ricci == *g.star_ricci_closed);
    Rational four_n2(4 * static_cast<long>(m.n() * m.n()));
    boolean_check("star_scalar_shift",
                  g.tables.star_scalar == g.tables.scalar + CoeffExpr(four_n2));
  }

  Report report;
  attach_common(report, g);
  report.doc["checks"] = checks_json(checks);
  report.doc["almost_contact"] = g.almost_contact;
  report.doc["kenmotsu"] = g.kenmotsu;
  report.passed = all_passed(checks);
  return report;
}

Report run_curvature(const GeometryAnalysis& g) {
  const FramedManifold& m = g.manifold;
  const std::size_t dim = m.dim();
  const auto& names = m.frame_names();

  Json tables = Json::object();

  Json brackets = Json::object();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField b(dim);
      for (std::size_t k = 0; k < dim; ++k) b.components[k] = m.structure_function(i, j, k);
      brackets["[" + names[i] + "," + names[j] + "]"] = vector_str(m, b);
    }
  tables["brackets"] = std::move(brackets);

  Json nabla = Json::object();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      nabla["nabla_" + names[i] + " " + names[j]] = vector_str(m, g.connection.nabla(i, j));
  tables["connection"] = std::move(nabla);

  Json riemann_nonzero = Json::object();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const FrameVectorField& value = g.riemann_tensor.at(i, j, k);
        if (value.is_zero()) continue;
        riemann_nonzero["R(" + names[i] + "," + names[j] + ")" + names[k]] = vector_str(m, value);
      }
  tables["riemann_nonzero"] = std::move(riemann_nonzero);

  tables["ricci"] = tensor_json(g.tables.ricci);
  tables["scalar_curvature"] = g.tables.scalar.str();
  tables["star_ricci"] = tensor_json(g.tables.star_ricci);
  tables["star_scalar"] = g.tables.star_scalar.str();

  std::vector<CheckResult> checks;
  checks.push_back({"connection_torsion_free", connection_is_torsion_free(m, g.connection), {}});
  checks.push_back(
      {"connection_metric_compatible", connection_is_metric_compatible(m, g.connection), {}});
  checks.push_back({"riemann_antisymmetry", riemann_is_antisymmetric(g.riemann_tensor), {}});
  checks.push_back({"riemann_first_bianchi", riemann_first_bianchi(g.riemann_tensor), {}});
  checks.push_back({"riemann_pair_symmetry", riemann_pair_symmetric(m, g.riemann_tensor), {}});
  if (g.star_ricci_closed)
    checks.push_back(
        {"star_ricci_route_agreement", g.tables.star_ricci == *g.star_ricci_closed, {}});

  Report report;
  attach_common(report, g);
  report.doc["tables"] = std::move(tables);
  report.doc["checks"] = checks_json(checks);
  report.doc["kenmotsu"] = g.kenmotsu;
  report.passed = all_passed(checks);
  return report;
}

static Json soliton_json(const GeometryAnalysis& g, const SolitonQuery& q,
                         const SolitonReport& result) {
  Json out = Json::object();
  out["mode"] = residual_mode_name(result.mode);
  out["star"] = result.star;
  out["alpha"] = q.params.alpha.str();
  out["beta"] = q.params.beta.str();
  out["k"] = q.params.k.str();
  out["family"] = soliton_family_name(result.family, result.star);
  if (result.lambda) {
    out["lambda"] = result.lambda->str();
    out["lambda_source"] = (result.mode == ResidualMode::exact) ? "given" : "fitted";
    if (auto rat = result.lambda->as_rational()) {
      EvalResult value;
      value.exact = true;
      value.exact_value = *rat;
      out["lambda_decimal"] = value.decimal(q.display_digits);
    }
  }
  out["classification"] = soliton_class_name(result.classification);
  out["residual_zero"] = result.residual_zero;
  out["trace_residual"] = result.trace_residual.str();
  out["divergence"] = result.divergence.str();
  if (result.laplacian) out["laplacian"] = result.laplacian->str();
  if (result.witness) {
    const auto& names = g.manifold.frame_names();
    out["witness"] = Json{{"args", Json::array({names[result.witness->i], names[result.witness->j]})},
                          {"residual", result.witness->value.str()}};
  }
  return out;
}

Report run_soliton(const GeometryAnalysis& g, const SolitonQuery& q) {
  Report report;
  attach_common(report, g);

  SolitonReport result;
  Json soliton;
  if (q.function_name) {
    CoeffExpr f = resolve_function(g, *q.function_name);
    result = gradient_residual(g.manifold, g.connection, g.tables, f, q.params);
    soliton = soliton_json(g, q, result);
    soliton["potential"] = Json{{"function", f.str()},
                                {"gradient", vector_str(g.manifold, gradient_data(g.manifold, g.connection, f).gradient)}};
  } else {
    FrameVectorField v = resolve_vector(g, q.vector_name);
    result = soliton_residual(g.manifold, g.connection, g.tables, v, q.params, q.mode);
    soliton = soliton_json(g, q, result);
    soliton["potential"] = Json{{"vector", q.vector_name},
                                {"frame_components", vector_str(g.manifold, v)}};
  }
  report.doc["soliton"] = std::move(soliton);
  report.passed = (result.mode != ResidualMode::exact) || result.residual_zero;
  return report;
}

Report run_classify_vector(const GeometryAnalysis& g, const std::string& vector_name) {
  Report report;
  attach_common(report, g);
  FrameVectorField v = resolve_vector(g, vector_name);

  Json classification = Json::object();
  classification["vector"] = vector_name;
  classification["frame_components"] = vector_str(g.manifold, v);

  Json torse = Json::object();
  try {
    TorseFormingClassification t = torse_forming_classify(g.manifold, g.connection, v);
    torse["is_torse_forming"] = t.torse_forming;
    torse["subtype"] = torse_subtype_name(t.subtype);
    if (t.torse_forming) {
      torse["psi"] = t.psi.str();
      Json omega = Json::array();
      for (const CoeffExpr& w : t.omega) omega.push_back(w.str());
      torse["omega"] = std::move(omega);
      torse["omega_tau"] = t.omega_tau.str();
    }
  } catch (const Error& e) {
    if (e.code() != errc::not_nowhere_vanishing) throw;
    torse["is_torse_forming"] = false;
    torse["subtype"] = "unverifiable";
    torse["note"] = e.what();
  }
  classification["torse_forming"] = std::move(torse);

  ConformalClassification c = conformal_killing_classify(g.manifold, g.connection, v);
  Json conformal = Json::object();
  conformal["is_conformal_killing"] = c.conformal;
  if (c.conformal) {
    conformal["omega"] = c.omega.str();
    switch (c.kind) {
      case ConformalKind::killing: conformal["kind"] = "killing"; break;
      case ConformalKind::homothetic: conformal["kind"] = "homothetic"; break;
      case ConformalKind::proper_homothetic: conformal["kind"] = "proper-homothetic"; break;
      case ConformalKind::proper: conformal["kind"] = "proper"; break;
    }
  }
  classification["conformal"] = std::move(conformal);

  report.doc["classification"] = std::move(classification);
  report.passed = true;
  return report;
}

Report run_theorems(const GeometryAnalysis& g, const SolitonQuery& q) {
  const FramedManifold& m = g.manifold;
  Report report;
  attach_common(report, g);

  Json theorems = Json::object();
  bool consistent = true;

  SolitonParams params = q.params;
  std::optional<CoeffExpr> xi_lambda;
  try {
    xi_lambda = xi_trace_lambda(m, g.tables, params.beta);
    Json section = Json::object();
    section["lambda"] = xi_lambda->str();
    section["classification"] = soliton_class_name(classify_lambda(*xi_lambda));
    theorems["xi_potential"] = std::move(section);
  } catch (const Error& e) {
    theorems["xi_potential"] = Json{{"error", e.what()}};
  }
  if (!params.lambda && xi_lambda) params.lambda = xi_lambda;

  if (auto data = eta_einstein_analyze(m, g.tables.ricci)) {
    Json section = Json::object();
    section["a"] = data->a.str();
    section["b"] = data->b.str();
    CoeffExpr lam = lambda_eta_einstein(m, *data, g.tables, params);
    section["lambda"] = lam.str();
    if (xi_lambda) {
      bool match = (lam == *xi_lambda);
      section["matches_xi_potential"] = match;
      consistent = consistent && match;
    }
    theorems["eta_einstein"] = std::move(section);
  } else {
    theorems["eta_einstein"] = Json{{"applies", false}};
  }

  {
    Json section = Json::object();
    ConformalClassification c =
        conformal_killing_classify(m, g.connection, m.xi(), params, &g.tables);
    if (c.forced_omega) {
      section["forced_omega"] = c.forced_omega->str();
      if (params.lambda && xi_lambda && *params.lambda == *xi_lambda) {
        bool killing_case = c.forced_omega->is_zero();
        section["killing_at_xi_potential_lambda"] = killing_case;
        consistent = consistent && killing_case;
      }
    } else {
      section["forced_omega"] = "unavailable (needs lambda and rational k)";
    }
    theorems["conformal_potential"] = std::move(section);
  }

  try {
    TorseFormingClassification t = torse_forming_classify(m, g.connection, m.xi());
    Json section = Json::object();
    section["vector"] = "xi";
    section["is_torse_forming"] = t.torse_forming;
    if (t.torse_forming) {
      section["psi"] = t.psi.str();
      section["omega_tau"] = t.omega_tau.str();
      CoeffExpr lam = lambda_torse(m, g.tables, q.params, t.psi, t.omega_tau);
      section["lambda"] = lam.str();
      section["subtype"] = torse_subtype_name(t.subtype);

      SolitonReport fit =
          soliton_residual(m, g.connection, g.tables, m.xi(), q.params, ResidualMode::trace);
      bool match = fit.lambda && (*fit.lambda == lam);
      section["matches_trace_fit"] = match;
      consistent = consistent && match;

      Json cases = Json::object();
      CoeffExpr zero;
      cases["concircular"] = lambda_torse(m, g.tables, q.params, t.psi, zero).str();
      cases["concurrent"] = lambda_torse(m, g.tables, q.params, CoeffExpr(1), zero).str();
      cases["recurrent"] = lambda_torse(m, g.tables, q.params, zero, t.omega_tau).str();
      cases["parallel"] = lambda_torse(m, g.tables, q.params, zero, zero).str();
      cases["torqued"] = lambda_torse(m, g.tables, q.params, t.psi, zero).str();
      cases["concurrent_note"] =
          "obtained by substituting psi = 1 into the general formula (the k term is k*psi)";
      section["cases"] = std::move(cases);
    }
    theorems["torse_forming_xi"] = std::move(section);
  } catch (const Error& e) {
    theorems["torse_forming_xi"] = Json{{"error", e.what()}};
  }

  try {
    if (params.k.as_rational()) {
      CoeffExpr lap = laplacian_prediction(m, g.tables, params);
      Json section = Json::object();
      section["value"] = lap.str();
      SolitonFamily family = soliton_family(params);
      if (family != SolitonFamily::general)
        section["family"] = soliton_family_name(family, params.star);
      theorems["laplacian"] = std::move(section);
    } else {
      theorems["laplacian"] = Json{{"error", "needs a rational k"}};
    }
  } catch (const Error& e) {
    theorems["laplacian"] = Json{{"error", e.what()}};
  }

  report.doc["theorems"] = std::move(theorems);
  report.doc["parameters"] = Json{{"alpha", q.params.alpha.str()},
                                  {"beta", q.params.beta.str()},
                                  {"k", q.params.k.str()},
                                  {"lambda", params.lambda ? params.lambda->str() : "unset"}};
  report.passed = consistent;
  return report;
}

}  // namespace kenso

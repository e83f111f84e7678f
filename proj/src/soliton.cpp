#include "kenso/soliton.hpp"

#include "kenso/error.hpp"

namespace kenso {

const char* residual_mode_name(ResidualMode mode) {
  switch (mode) {
    case ResidualMode::exact: return "exact";
    case ResidualMode::trace: return "trace";
    case ResidualMode::xi_trace: return "xi-trace";
  }
  return "?";
}

const char* soliton_class_name(SolitonClass c) {
  switch (c) {
    case SolitonClass::expanding: return "expanding";
    case SolitonClass::steady: return "steady";
    case SolitonClass::shrinking: return "shrinking";
    case SolitonClass::indeterminate: return "indeterminate";
  }
  return "?";
}

std::string soliton_family_name(SolitonFamily f, bool star) {
  std::string prefix = star ? "star-k-" : "k-";
  switch (f) {
    case SolitonFamily::ricci_type: return prefix + "ricci";
    case SolitonFamily::yamabe_type: return prefix + "yamabe";
    case SolitonFamily::einstein_type: return prefix + "einstein";
    case SolitonFamily::general: return "general";
  }
  return "?";
}

const char* torse_subtype_name(TorseSubtype t) {
  switch (t) {
    case TorseSubtype::concircular: return "concircular";
    case TorseSubtype::concurrent: return "concurrent";
    case TorseSubtype::recurrent: return "recurrent";
    case TorseSubtype::parallel: return "parallel";
    case TorseSubtype::torqued: return "torqued";
    case TorseSubtype::generic: return "generic";
    case TorseSubtype::not_torse_forming: return "not-torse-forming";
  }
  return "?";
}

Tensor02 lie_derivative_metric(const FramedManifold& m, const Connection& conn,
                               const FrameVectorField& v) {
  const std::size_t dim = m.dim();
  std::vector<FrameVectorField> nabla_v;
  nabla_v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    nabla_v.push_back(covariant_derivative(m, conn, m.basis_field(i), v));
  Tensor02 out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out.at(i, j) = m.metric_pairing(nabla_v[i], m.basis_field(j)) +
                     m.metric_pairing(m.basis_field(i), nabla_v[j]);
  return out;
}

Tensor02 lie_derivative_metric_bracket(const FramedManifold& m, const FrameVectorField& v) {
  // V g(e_i, e_j) vanishes for constant frame metrics, leaving
  // -g([V, e_i], e_j) - g(e_i, [V, e_j]).
  const std::size_t dim = m.dim();
  std::vector<FrameVectorField> brackets;
  brackets.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) brackets.push_back(m.lie_bracket(v, m.basis_field(i)));
  Tensor02 out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out.at(i, j) = -(m.metric_pairing(brackets[i], m.basis_field(j)) +
                       m.metric_pairing(m.basis_field(i), brackets[j]));
  return out;
}

CoeffExpr divergence(const FramedManifold& m, const Connection& conn, const FrameVectorField& v) {
  const RationalMatrix& ginv = m.metric_inverse();
  CoeffExpr acc;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    FrameVectorField di = covariant_derivative(m, conn, m.basis_field(i), v);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (ginv[i][j] == 0) continue;
      CoeffExpr piece = m.metric_pairing(di, m.basis_field(j));
      if (!piece.is_zero()) acc = acc + piece.scaled(ginv[i][j]);
    }
  }
  return acc;
}

SolitonClass classify_lambda(const CoeffExpr& lambda) {
  auto r = lambda.as_rational();
  if (!r) return SolitonClass::indeterminate;
  if (*r > 0) return SolitonClass::expanding;
  if (*r < 0) return SolitonClass::shrinking;
  return SolitonClass::steady;
}

SolitonFamily soliton_family(const SolitonParams& params) {
  auto a = params.alpha.as_rational();
  auto b = params.beta.as_rational();
  if (!a || !b) return SolitonFamily::general;
  if (*a == 1 && *b == 0) return SolitonFamily::ricci_type;
  if (*a == 0 && *b == 2) return SolitonFamily::yamabe_type;
  if (*a == 1 && *b == 1) return SolitonFamily::einstein_type;
  return SolitonFamily::general;
}

void validate_soliton_params(const FramedManifold& m, const SolitonParams& params,
                             ResidualMode mode) {
  if (params.k.is_zero()) fail(errc::invalid_argument, "soliton function k must be nonzero");
  if (m.coordinate_dependent(params.alpha) || m.coordinate_dependent(params.beta))
    fail(errc::invalid_argument, "alpha and beta must not depend on manifold coordinates");
  if (params.lambda && m.coordinate_dependent(*params.lambda))
    fail(errc::invalid_argument, "lambda must not depend on manifold coordinates");
  if (mode != ResidualMode::exact && m.coordinate_dependent(params.k))
    fail(errc::non_constant_k,
         "lambda fitting requires k constant on the manifold; got '" + params.k.str() + "'");
}

static void finish_residual_report(SolitonReport& report, const FramedManifold& m,
                                   const Tensor02& base, const CoeffExpr& beta_r,
                                   const CoeffExpr& lambda) {
  CoeffExpr coefficient = lambda + lambda - beta_r;  // 2 lambda - beta r
  report.residual = base + coefficient * m.metric_tensor();
  report.trace_residual = trace_g(m, report.residual);
  report.residual_zero = report.residual.is_zero();
  if (!report.residual_zero) {
    for (std::size_t i = 0; i < m.dim() && !report.witness; ++i)
      for (std::size_t j = 0; j < m.dim() && !report.witness; ++j)
        if (!report.residual.at(i, j).is_zero())
          report.witness = TensorWitness{i, j, report.residual.at(i, j)};
  }
  report.lambda = lambda;
  report.classification = classify_lambda(lambda);
}

SolitonReport soliton_residual(const FramedManifold& m, const Connection& conn,
                               const CurvatureTables& tables, const FrameVectorField& v,
                               const SolitonParams& params, ResidualMode mode) {
  validate_soliton_params(m, params, mode);
  const Tensor02& s = params.star ? tables.star_ricci : tables.ricci;
  const CoeffExpr& r = params.star ? tables.star_scalar : tables.scalar;

  Tensor02 lie = lie_derivative_metric(m, conn, v);
  CoeffExpr two_alpha = params.alpha + params.alpha;
  Tensor02 base = params.k * lie + two_alpha * s;
  CoeffExpr beta_r = params.beta * r;

  SolitonReport report;
  report.mode = mode;
  report.star = params.star;
  report.family = soliton_family(params);
  report.divergence = divergence(m, conn, v);

  CoeffExpr lambda;
  switch (mode) {
    case ResidualMode::exact:
      if (!params.lambda)
        fail(errc::unknown_lambda, "exact mode needs a lambda value");
      lambda = *params.lambda;
      break;
    case ResidualMode::trace: {
      // k tr(L_V g) + 2 alpha r + (2 lambda - beta r) dim = 0
      const Rational d(static_cast<long>(m.dim()));
      CoeffExpr numerator = beta_r.scaled(d) - two_alpha * r - params.k * trace_g(m, lie);
      lambda = numerator.scaled(Rational(1) / (2 * d));
      break;
    }
    case ResidualMode::xi_trace: {
      // residual(xi, xi) = 0 with g(xi, xi) = 1
      const std::size_t x = m.xi_index();
      CoeffExpr numerator = beta_r - two_alpha * s.at(x, x) - params.k * lie.at(x, x);
      lambda = numerator.scaled(Rational(1, 2));
      break;
    }
  }
  finish_residual_report(report, m, base, beta_r, lambda);
  return report;
}

CoeffExpr xi_trace_lambda(const FramedManifold& m, const CurvatureTables& tables,
                          const CoeffExpr& beta) {
  auto r = tables.scalar.as_rational();
  if (!r)
    fail(errc::non_constant_scalar_curvature,
         "xi-potential lambda needs a constant scalar curvature; got '" + tables.scalar.str() + "'");
  Rational shift = *r + Rational(4 * static_cast<long>(m.n() * m.n()));
  return beta.scaled(shift / 2);
}

CoeffExpr laplacian_prediction(const FramedManifold& m, const CurvatureTables& tables,
                               const SolitonParams& params) {
  auto k = params.k.as_rational();
  if (!k || *k == 0)
    fail(errc::non_constant_k, "the Laplacian identity needs a nonzero rational k");
  if (!params.lambda) fail(errc::unknown_lambda, "the Laplacian identity needs a lambda value");
  const Rational d(static_cast<long>(m.dim()));
  CoeffExpr shifted_r = tables.scalar + CoeffExpr(Rational(4 * static_cast<long>(m.n() * m.n())));
  CoeffExpr bracket = params.alpha - params.beta.scaled(d / 2);
  CoeffExpr total = shifted_r * bracket + params.lambda->scaled(d);
  return total.scaled(Rational(-1) / *k);
}

ConformalClassification conformal_killing_classify(const FramedManifold& m, const Connection& conn,
                                                   const FrameVectorField& v,
                                                   const std::optional<SolitonParams>& params,
                                                   const CurvatureTables* tables) {
  Tensor02 lie = lie_derivative_metric(m, conn, v);
  ConformalClassification out;
  // Candidate factor from the first diagonal entry; g(e_1, e_1) > 0.
  out.omega = lie.at(0, 0).scaled(Rational(1) / (2 * m.metric()[0][0]));
  Tensor02 expected = (out.omega + out.omega) * m.metric_tensor();
  out.conformal = (lie == expected);
  if (out.conformal) {
    auto w = out.omega.as_rational();
    if (w && *w == 0)
      out.kind = ConformalKind::killing;
    else if (w)
      out.kind = ConformalKind::proper_homothetic;
    else
      out.kind = ConformalKind::proper;
  }
  if (params && tables) {
    out.eta_einstein_conclusion = out.conformal && !params->alpha.is_zero();
    if (params->lambda) {
      CoeffExpr shifted_r =
          tables->scalar + CoeffExpr(Rational(4 * static_cast<long>(m.n() * m.n())));
      CoeffExpr numerator = params->beta * shifted_r.scaled(Rational(1, 2)) - *params->lambda;
      if (numerator.is_zero()) {
        out.forced_omega = CoeffExpr();
      } else if (auto k = params->k.as_rational(); k && *k != 0) {
        out.forced_omega = numerator.scaled(Rational(1) / *k);
      }
    }
  }
  return out;
}

std::optional<EtaEinsteinData> eta_einstein_analyze(const FramedManifold& m, const Tensor02& s) {
  const std::size_t dim = m.dim();
  const RationalMatrix& g = m.metric();
  auto eta2 = [&](std::size_t i, std::size_t j) { return m.eta_frame(i) * m.eta_frame(j); };

  std::optional<CoeffExpr> a, b;
  for (std::size_t i = 0; i < dim && !a; ++i)
    for (std::size_t j = 0; j < dim && !a; ++j)
      if (eta2(i, j) == 0 && g[i][j] != 0) a = s.at(i, j).scaled(Rational(1) / g[i][j]);
  if (a) {
    for (std::size_t i = 0; i < dim && !b; ++i)
      for (std::size_t j = 0; j < dim && !b; ++j)
        if (eta2(i, j) != 0)
          b = (s.at(i, j) - a->scaled(g[i][j])).scaled(Rational(1) / eta2(i, j));
  } else {
    // No eta-free component: take the first two index pairs whose (g, eta eta)
    // rows are independent and solve the 2x2 system.
    for (std::size_t p = 0; p < dim * dim && !a; ++p)
      for (std::size_t q = p + 1; q < dim * dim && !a; ++q) {
        std::size_t i1 = p / dim, j1 = p % dim, i2 = q / dim, j2 = q % dim;
        Rational det = g[i1][j1] * eta2(i2, j2) - g[i2][j2] * eta2(i1, j1);
        if (det == 0) continue;
        a = (s.at(i1, j1).scaled(eta2(i2, j2)) - s.at(i2, j2).scaled(eta2(i1, j1)))
                .scaled(Rational(1) / det);
        b = (s.at(i2, j2).scaled(g[i1][j1]) - s.at(i1, j1).scaled(g[i2][j2]))
                .scaled(Rational(1) / det);
      }
  }
  if (!a || !b) return std::nullopt;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (s.at(i, j) != a->scaled(g[i][j]) + b->scaled(eta2(i, j))) return std::nullopt;
  return EtaEinsteinData{*a, *b};
}

CoeffExpr lambda_eta_einstein(const FramedManifold& m, const EtaEinsteinData& data,
                              const CurvatureTables& tables, const SolitonParams& params) {
  CoeffExpr shifted_r = tables.scalar + CoeffExpr(Rational(4 * static_cast<long>(m.n() * m.n())));
  CoeffExpr two_n_alpha = params.alpha.scaled(Rational(2 * static_cast<long>(m.n())));
  return -(data.a * params.alpha) - two_n_alpha + params.beta * shifted_r.scaled(Rational(1, 2)) -
         data.b * params.alpha;
}

TorseFormingClassification torse_forming_classify(const FramedManifold& m, const Connection& conn,
                                                  const FrameVectorField& tau) {
  const std::size_t dim = m.dim();
  TorseFormingClassification out;

  std::optional<std::size_t> unit_index;
  for (std::size_t i = 0; i < dim && !unit_index; ++i)
    if (tau.components[i].is_unit()) unit_index = i;
  if (!unit_index)
    fail(errc::not_nowhere_vanishing,
         "no component of the field is syntactically invertible; cannot certify it nowhere "
         "vanishing");

  std::vector<FrameVectorField> lhs;
  lhs.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    lhs.push_back(covariant_derivative(m, conn, m.basis_field(i), tau));

  // psi from a diagonal slot where tau's own coefficient vanishes, else by
  // eliminating omega through a second unit component.
  std::optional<CoeffExpr> psi;
  for (std::size_t i = 0; i < dim && !psi; ++i)
    if (tau.components[i].is_zero()) psi = lhs[i].components[i];
  const std::size_t u = *unit_index;
  if (!psi) {
    std::optional<std::size_t> second;
    for (std::size_t j = 0; j < dim && !second; ++j)
      if (j != u && tau.components[j].is_unit()) second = j;
    if (!second) return out;  // elimination infeasible
    CoeffExpr omega_u = lhs[u].components[*second] * tau.components[*second].inverted_unit();
    psi = lhs[u].components[u] - omega_u * tau.components[u];
  }

  CoeffExpr inv_u = tau.components[u].inverted_unit();
  std::vector<CoeffExpr> omega(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    CoeffExpr rhs = lhs[i].components[u];
    if (i == u) rhs = rhs - *psi;
    omega[i] = rhs * inv_u;
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      CoeffExpr expected = omega[i] * tau.components[k];
      if (i == k) expected = expected + *psi;
      if (lhs[i].components[k] != expected) return out;
    }

  out.torse_forming = true;
  out.psi = *psi;
  out.omega = std::move(omega);
  for (std::size_t i = 0; i < dim; ++i)
    out.omega_tau = out.omega_tau + out.omega[i] * tau.components[i];

  bool omega_zero = true;
  for (const CoeffExpr& w : out.omega) omega_zero = omega_zero && w.is_zero();
  bool psi_zero = out.psi.is_zero();
  bool psi_one = out.psi.is_one();
  if (omega_zero)
    out.subtype = psi_zero  ? TorseSubtype::parallel
                  : psi_one ? TorseSubtype::concurrent
                            : TorseSubtype::concircular;
  else if (psi_zero)
    out.subtype = TorseSubtype::recurrent;
  else if (out.omega_tau.is_zero())
    out.subtype = TorseSubtype::torqued;
  else
    out.subtype = TorseSubtype::generic;
  return out;
}

CoeffExpr lambda_torse(const FramedManifold& m, const CurvatureTables& tables,
                       const SolitonParams& params, const CoeffExpr& psi,
                       const CoeffExpr& omega_tau) {
  const Rational d(static_cast<long>(m.dim()));
  CoeffExpr shifted_r = tables.scalar + CoeffExpr(Rational(4 * static_cast<long>(m.n() * m.n())));
  CoeffExpr head = params.beta * shifted_r.scaled(Rational(1, 2)) - params.k * psi -
                   params.alpha.scaled(Rational(2 * static_cast<long>(m.n()) - 1));
  CoeffExpr tail = params.alpha * tables.scalar + params.alpha + params.k * omega_tau;
  return head - tail.scaled(Rational(1) / d);
}

GradientData gradient_data(const FramedManifold& m, const Connection& conn, const CoeffExpr& f) {
  const std::size_t dim = m.dim();
  const RationalMatrix& ginv = m.metric_inverse();
  GradientData data;
  data.f = f;
  data.gradient = FrameVectorField(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    CoeffExpr acc;
    for (std::size_t j = 0; j < dim; ++j) {
      if (ginv[i][j] == 0) continue;
      CoeffExpr df = m.frame_derivative(j, f);
      if (!df.is_zero()) acc = acc + df.scaled(ginv[i][j]);
    }
    data.gradient.components[i] = std::move(acc);
  }
  data.hessian = Tensor02(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField di = covariant_derivative(m, conn, m.basis_field(i), data.gradient);
    for (std::size_t j = 0; j < dim; ++j)
      data.hessian.at(i, j) = m.metric_pairing(di, m.basis_field(j));
  }
  data.laplacian = trace_g(m, data.hessian);
  return data;
}

SolitonReport gradient_residual(const FramedManifold& m, const Connection& conn,
                                const CurvatureTables& tables, const CoeffExpr& f,
                                const SolitonParams& params) {
  validate_soliton_params(m, params, ResidualMode::exact);
  if (!params.lambda) fail(errc::unknown_lambda, "the gradient residual needs a lambda value");
  const Tensor02& s = params.star ? tables.star_ricci : tables.ricci;
  const CoeffExpr& r = params.star ? tables.star_scalar : tables.scalar;

  GradientData data = gradient_data(m, conn, f);
  SolitonReport report;
  report.mode = ResidualMode::exact;
  report.star = params.star;
  report.family = soliton_family(params);
  report.laplacian = data.laplacian;
  report.divergence = data.laplacian;

  CoeffExpr coefficient = *params.lambda - (params.beta * r).scaled(Rational(1, 2));
  report.residual = params.k * data.hessian + params.alpha * s + coefficient * m.metric_tensor();
  report.trace_residual = trace_g(m, report.residual);
  report.residual_zero = report.residual.is_zero();
  if (!report.residual_zero) {
    for (std::size_t i = 0; i < m.dim() && !report.witness; ++i)
      for (std::size_t j = 0; j < m.dim() && !report.witness; ++j)
        if (!report.residual.at(i, j).is_zero())
          report.witness = TensorWitness{i, j, report.residual.at(i, j)};
  }
  report.lambda = *params.lambda;
  report.classification = classify_lambda(*params.lambda);
  return report;
}

}  // namespace kenso

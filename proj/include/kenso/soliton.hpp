#pragma once

#include "kenso/curvature.hpp"

#include <optional>

namespace kenso {

// Parameters of a k-Ricci-Yamabe soliton query:
//
//   k L_V g + 2 alpha S^(*) + (2 lambda - beta r^(*)) g = 0
//
// star toggles between the star tensors (S*, r*) and the plain ones (S, r).
// alpha, beta, lambda and k may be rational constants or free parameter
// symbols; only k may additionally depend on the manifold coordinates, and
// then only in exact mode.
struct SolitonParams {
  CoeffExpr alpha{1};
  CoeffExpr beta{0};
  CoeffExpr k{1};
  std::optional<CoeffExpr> lambda;
  bool star = true;
};

enum class ResidualMode { exact, trace, xi_trace };
enum class SolitonClass { expanding, steady, shrinking, indeterminate };
enum class SolitonFamily { ricci_type, yamabe_type, einstein_type, general };

const char* residual_mode_name(ResidualMode mode);
const char* soliton_class_name(SolitonClass c);
// Family label; star picks the star-prefixed spelling.
std::string soliton_family_name(SolitonFamily f, bool star);

struct TensorWitness {
  std::size_t i = 0, j = 0;
  CoeffExpr value;
};

struct SolitonReport {
  ResidualMode mode = ResidualMode::exact;
  bool star = true;
  Tensor02 residual;
  CoeffExpr trace_residual;
  // Fitted (trace modes) or supplied (exact mode) soliton constant.
  std::optional<CoeffExpr> lambda;
  bool residual_zero = false;
  std::optional<TensorWitness> witness;
  SolitonClass classification = SolitonClass::indeterminate;
  SolitonFamily family = SolitonFamily::general;
  CoeffExpr divergence;
  // Gradient queries additionally carry the potential data.
  std::optional<CoeffExpr> laplacian;
};

// (L_V g)(X, Y) = g(nabla_X V, Y) + g(X, nabla_Y V) on frame pairs.
Tensor02 lie_derivative_metric(const FramedManifold& m, const Connection& conn,
                               const FrameVectorField& v);
// Independent bracket-based route; agrees with the covariant form.
Tensor02 lie_derivative_metric_bracket(const FramedManifold& m, const FrameVectorField& v);

// div V = sum_i g(nabla_{e_i} V, e_i) = (1/2) tr_g (L_V g).
CoeffExpr divergence(const FramedManifold& m, const Connection& conn, const FrameVectorField& v);

SolitonClass classify_lambda(const CoeffExpr& lambda);
SolitonFamily soliton_family(const SolitonParams& params);

// Evaluates or fits the soliton equation.
//   exact:    lambda must be supplied; reports whether the tensor vanishes.
//   trace:    solves tr_g(residual) = 0 for lambda.
//   xi_trace: solves residual(xi, xi) = 0 for lambda.
SolitonReport soliton_residual(const FramedManifold& m, const Connection& conn,
                               const CurvatureTables& tables, const FrameVectorField& v,
                               const SolitonParams& params, ResidualMode mode);

// lambda = beta (r + 4 n^2) / 2 for the xi-potential soliton; requires a
// constant scalar curvature.
CoeffExpr xi_trace_lambda(const FramedManifold& m, const CurvatureTables& tables,
                          const CoeffExpr& beta);

// Laplacian forced on a gradient potential:
//   lap f = -((r + 4 n^2)/k) [alpha - beta (2n+1)/2] - lambda (2n+1)/k,
// requiring a nonzero rational k and a known lambda.
CoeffExpr laplacian_prediction(const FramedManifold& m, const CurvatureTables& tables,
                               const SolitonParams& params);

enum class ConformalKind { killing, homothetic, proper_homothetic, proper };

struct ConformalClassification {
  bool conformal = false;
  CoeffExpr omega;
  ConformalKind kind = ConformalKind::proper;
  // With params: the value forced on omega, and whether the eta-Einstein
  // conclusion applies (conformal potential with alpha != 0).
  std::optional<CoeffExpr> forced_omega;
  bool eta_einstein_conclusion = false;
};

ConformalClassification conformal_killing_classify(
    const FramedManifold& m, const Connection& conn, const FrameVectorField& v,
    const std::optional<SolitonParams>& params = std::nullopt,
    const CurvatureTables* tables = nullptr);

struct EtaEinsteinData {
  CoeffExpr a;
  CoeffExpr b;
};

// Solves S = a g + b eta (x) eta exactly; absent when S is not of that form.
std::optional<EtaEinsteinData> eta_einstein_analyze(const FramedManifold& m, const Tensor02& s);

// lambda = -a alpha - 2 n alpha + beta (r + 4 n^2)/2 - b alpha.
CoeffExpr lambda_eta_einstein(const FramedManifold& m, const EtaEinsteinData& data,
                              const CurvatureTables& tables, const SolitonParams& params);

enum class TorseSubtype {
  concircular,
  concurrent,
  recurrent,
  parallel,
  torqued,
  generic,
  not_torse_forming,
};

const char* torse_subtype_name(TorseSubtype t);

struct TorseFormingClassification {
  bool torse_forming = false;
  TorseSubtype subtype = TorseSubtype::not_torse_forming;
  CoeffExpr psi;
  std::vector<CoeffExpr> omega;  // omega(e_i) frame covector
  CoeffExpr omega_tau;           // omega(tau)
};

// Solves nabla_X tau = psi X + omega(X) tau over all frame X by linear
// elimination; the precondition that tau is nowhere vanishing is checked
// syntactically (some component a unit).
TorseFormingClassification torse_forming_classify(const FramedManifold& m, const Connection& conn,
                                                  const FrameVectorField& tau);

// lambda = beta (r + 4 n^2)/2 - k psi - alpha (2n-1) - (alpha r + alpha + k omega(tau))/(2n+1).
CoeffExpr lambda_torse(const FramedManifold& m, const CurvatureTables& tables,
                       const SolitonParams& params, const CoeffExpr& psi,
                       const CoeffExpr& omega_tau);

struct GradientData {
  CoeffExpr f;
  FrameVectorField gradient;
  Tensor02 hessian;
  CoeffExpr laplacian;
};

GradientData gradient_data(const FramedManifold& m, const Connection& conn, const CoeffExpr& f);

// Residual of the gradient soliton equation
//   k Hess f + alpha S^(*) + (lambda - beta r^(*)/2) g = 0
// (alpha = beta = 1 recovers the plain star form).
SolitonReport gradient_residual(const FramedManifold& m, const Connection& conn,
                                const CurvatureTables& tables, const CoeffExpr& f,
                                const SolitonParams& params);

// Rejects parameter expressions that depend on manifold coordinates and a
// zero k; trace modes additionally reject coordinate-dependent k.
void validate_soliton_params(const FramedManifold& m, const SolitonParams& params,
                             ResidualMode mode);

}  // namespace kenso

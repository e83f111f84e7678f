#pragma once

#include "kenso/dsl.hpp"
#include "kenso/report.hpp"
#include "kenso/soliton.hpp"
#include "kenso/verify.hpp"

#include <optional>
#include <string>

namespace kenso {

// Geometry computed once per manifold and shared by every front end. The
// star-Ricci tensor in `tables` always comes from the curvature trace, so it
// is valid whether or not the manifold is Kenmotsu; the closed form is kept
// separately once the verifier has passed.
struct GeometryAnalysis {
  ManifoldDocument doc;
  FramedManifold manifold;
  Connection connection;
  RiemannTensor riemann_tensor;
  CurvatureTables tables;
  std::optional<Tensor02> star_ricci_closed;
  std::vector<CheckResult> structure_checks;
  bool almost_contact = false;
  bool kenmotsu = false;
};

GeometryAnalysis analyze_geometry(const ManifoldDocument& doc, bool validate = true);
GeometryAnalysis analyze_geometry(const FramedManifold& manifold, ManifoldDocument doc = {});

struct SolitonQuery {
  SolitonParams params;
  ResidualMode mode = ResidualMode::exact;
  std::string vector_name = "xi";
  std::optional<std::string> function_name;  // gradient potential; overrides vector_name
  unsigned display_digits = 50;
};

Report run_check(const GeometryAnalysis& g);
Report run_curvature(const GeometryAnalysis& g);
Report run_soliton(const GeometryAnalysis& g, const SolitonQuery& q);
Report run_classify_vector(const GeometryAnalysis& g, const std::string& vector_name);
Report run_theorems(const GeometryAnalysis& g, const SolitonQuery& q);

// Resolves "xi", a frame field name, or a vector declared in the document.
FrameVectorField resolve_vector(const GeometryAnalysis& g, const std::string& name);
// Resolves a declared function name or parses the text as an expression over
// the manifold coordinates.
CoeffExpr resolve_function(const GeometryAnalysis& g, const std::string& name_or_expr);

// Rendering helpers shared with tests.
std::string vector_str(const FramedManifold& m, const FrameVectorField& v);
Json checks_json(const std::vector<CheckResult>& checks);

}  // namespace kenso

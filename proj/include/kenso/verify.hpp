#pragma once

#include "kenso/curvature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kenso {

// Pass/fail evidence for one structural identity. A failing check always
// carries the offending frame tuple and a nonzero residual in canonical form.
struct CheckWitness {
  std::vector<std::string> args;            // frame fields the check was evaluated at
  std::optional<std::string> component;     // frame slot for vector-valued residuals
  std::string residual;                     // canonical expression text
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<CheckWitness> witness;
};

bool all_passed(const std::vector<CheckResult>& results);

// Almost contact metric structure axioms: phi^2 = -id + eta (x) xi,
// eta(xi) = 1, eta(phi X) = 0, phi xi = 0, the phi-compatibility of g and the
// skew-adjointness of phi.
std::vector<CheckResult> verify_almost_contact(const FramedManifold& m);

// Kenmotsu defining conditions:
//   (nabla_X phi)Y = -g(X, phi Y) xi - eta(Y) phi X
//   nabla_X xi = X - eta(X) xi
std::vector<CheckResult> verify_kenmotsu(const FramedManifold& m, const Connection& conn);

// Standard Kenmotsu curvature and derivative identities, verified over all
// frame tuples (eta-contraction of R, R(.,.)xi, R(.,xi)., the Ricci
// contractions against xi and phi, nabla eta, and the xi Lie derivative of g).
std::vector<CheckResult> identity_suite(const FramedManifold& m, const Connection& conn,
                                        const RiemannTensor& r, const Tensor02& ricci_tensor);

// Derivative identities of the metric-raised star-Ricci operator:
//   (nabla_Y Q*) xi = nabla_Y xi,  (nabla_xi Q*) Y = 0,
//   (nabla_Y Q*) xi - (nabla_xi Q*) Y = nabla_Y xi.
std::vector<CheckResult> qstar_derivative_checks(const FramedManifold& m, const Connection& conn,
                                                 const Endomorphism& qstar);

}  // namespace kenso

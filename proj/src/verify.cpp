#include "kenso/verify.hpp"

#include "kenso/soliton.hpp"

namespace kenso {

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.passed) return false;
  return true;
}

namespace {

// Collects per-check evidence; the first offending tuple wins.
class Check {
 public:
  Check(const FramedManifold& m, std::string name) : m_(&m), result_{std::move(name), true, {}} {}

  void scalar_residual(std::initializer_list<std::size_t> args, const CoeffExpr& residual) {
    if (residual.is_zero() || !result_.passed) return;
    result_.passed = false;
    result_.witness = CheckWitness{names(args), std::nullopt, residual.str()};
  }

  void vector_residual(std::initializer_list<std::size_t> args, const FrameVectorField& residual) {
    if (!result_.passed || residual.is_zero()) return;
    for (std::size_t k = 0; k < residual.dim(); ++k) {
      if (residual.components[k].is_zero()) continue;
      result_.passed = false;
      result_.witness =
          CheckWitness{names(args), m_->frame_names()[k], residual.components[k].str()};
      return;
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  std::vector<std::string> names(std::initializer_list<std::size_t> args) const {
    std::vector<std::string> out;
    for (std::size_t a : args) out.push_back(m_->frame_names()[a]);
    return out;
  }

  const FramedManifold* m_;
  CheckResult result_;
};

}  // namespace

std::vector<CheckResult> verify_almost_contact(const FramedManifold& m) {
  const std::size_t dim = m.dim();
  std::vector<CheckResult> results;

  Check phi_square(m, "phi_square_identity");
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField x = m.basis_field(i);
    FrameVectorField residual =
        m.phi_apply(m.phi_apply(x)) + x - m.eta(x) * m.xi();
    phi_square.vector_residual({i}, residual);
  }
  results.push_back(phi_square.take());

  Check eta_xi(m, "eta_xi_normalization");
  eta_xi.scalar_residual({m.xi_index()}, m.eta(m.xi()) - CoeffExpr(1));
  results.push_back(eta_xi.take());

  Check eta_phi(m, "eta_phi_vanishes");
  for (std::size_t i = 0; i < dim; ++i)
    eta_phi.scalar_residual({i}, m.eta(m.phi_apply(m.basis_field(i))));
  results.push_back(eta_phi.take());

  Check phi_xi(m, "phi_xi_vanishes");
  phi_xi.vector_residual({m.xi_index()}, m.phi_apply(m.xi()));
  results.push_back(phi_xi.take());

  Check compat(m, "phi_metric_compatibility");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField x = m.basis_field(i), y = m.basis_field(j);
      CoeffExpr residual = m.metric_pairing(m.phi_apply(x), m.phi_apply(y)) -
                           m.metric_pairing(x, y) + m.eta(x) * m.eta(y);
      compat.scalar_residual({i, j}, residual);
    }
  results.push_back(compat.take());

  Check skew(m, "phi_skew_adjoint");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField x = m.basis_field(i), y = m.basis_field(j);
      CoeffExpr residual =
          m.metric_pairing(x, m.phi_apply(y)) + m.metric_pairing(m.phi_apply(x), y);
      skew.scalar_residual({i, j}, residual);
    }
  results.push_back(skew.take());

  return results;
}

std::vector<CheckResult> verify_kenmotsu(const FramedManifold& m, const Connection& conn) {
  const std::size_t dim = m.dim();
  std::vector<CheckResult> results;
  Endomorphism phi = Endomorphism::from_constant(m.phi_matrix());

  Check nabla_phi(m, "kenmotsu_nabla_phi");
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField x = m.basis_field(i);
    Endomorphism dphi = covariant_derivative_endomorphism(m, conn, x, phi);
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField y = m.basis_field(j);
      FrameVectorField expected =
          -(m.metric_pairing(x, m.phi_apply(y)) * m.xi()) - m.eta(y) * m.phi_apply(x);
      nabla_phi.vector_residual({i, j}, dphi.apply(y) - expected);
    }
  }
  results.push_back(nabla_phi.take());

  Check nabla_xi(m, "kenmotsu_nabla_xi");
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField x = m.basis_field(i);
    FrameVectorField residual =
        covariant_derivative(m, conn, x, m.xi()) - x + m.eta(x) * m.xi();
    nabla_xi.vector_residual({i}, residual);
  }
  results.push_back(nabla_xi.take());

  return results;
}

std::vector<CheckResult> identity_suite(const FramedManifold& m, const Connection& conn,
                                        const RiemannTensor& r, const Tensor02& ricci_tensor) {
  const std::size_t dim = m.dim();
  const Rational two_n(2 * static_cast<long>(m.n()));
  std::vector<CheckResult> results;

  Check eta_r(m, "curvature_eta_contraction");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        FrameVectorField x = m.basis_field(i), y = m.basis_field(j), z = m.basis_field(k);
        CoeffExpr residual = m.eta(r.at(i, j, k)) - m.metric_pairing(x, z) * m.eta(y) +
                             m.metric_pairing(y, z) * m.eta(x);
        eta_r.scalar_residual({i, j, k}, residual);
      }
  results.push_back(eta_r.take());

  Check r_xi_arg(m, "curvature_xi_argument");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField x = m.basis_field(i), y = m.basis_field(j);
      FrameVectorField expected = m.eta(x) * y - m.eta(y) * x;
      r_xi_arg.vector_residual({i, j}, r.at(i, j, m.xi_index()) - expected);
    }
  results.push_back(r_xi_arg.take());

  Check r_xi_slot(m, "curvature_xi_slot");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      FrameVectorField x = m.basis_field(i), y = m.basis_field(k);
      FrameVectorField expected = m.metric_pairing(x, y) * m.xi() - m.eta(y) * x;
      r_xi_slot.vector_residual({i, k}, r.at(i, m.xi_index(), k) - expected);
    }
  results.push_back(r_xi_slot.take());

  Check ricci_xi(m, "ricci_xi_contraction");
  for (std::size_t i = 0; i < dim; ++i) {
    CoeffExpr residual =
        ricci_tensor.at(i, m.xi_index()) + CoeffExpr(two_n * m.eta_frame(i));
    ricci_xi.scalar_residual({i}, residual);
  }
  results.push_back(ricci_xi.take());

  Check ricci_phi(m, "ricci_phi_invariance");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField x = m.basis_field(i), y = m.basis_field(j);
      CoeffExpr lhs = ricci_tensor.apply(m.phi_apply(x), m.phi_apply(y));
      CoeffExpr rhs = ricci_tensor.at(i, j) + (m.eta(x) * m.eta(y)).scaled(two_n);
      ricci_phi.scalar_residual({i, j}, lhs - rhs);
    }
  results.push_back(ricci_phi.take());

  Check nabla_eta(m, "nabla_eta_formula");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField x = m.basis_field(i), y = m.basis_field(j);
      // (nabla_X eta)(Y) = X(eta(Y)) - eta(nabla_X Y); eta(e_j) is constant.
      CoeffExpr lhs = -m.eta(conn.nabla(i, j));
      CoeffExpr rhs = m.metric_pairing(x, y) - m.eta(x) * m.eta(y);
      nabla_eta.scalar_residual({i, j}, lhs - rhs);
    }
  results.push_back(nabla_eta.take());

  Check xi_lie(m, "xi_lie_derivative_metric");
  Tensor02 lie = lie_derivative_metric(m, conn, m.xi());
  Tensor02 expected = CoeffExpr(2) * (m.metric_tensor() - m.eta_outer_eta());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      xi_lie.scalar_residual({i, j}, lie.at(i, j) - expected.at(i, j));
  results.push_back(xi_lie.take());

  return results;
}

std::vector<CheckResult> qstar_derivative_checks(const FramedManifold& m, const Connection& conn,
                                                 const Endomorphism& qstar) {
  const std::size_t dim = m.dim();
  std::vector<CheckResult> results;

  std::vector<Endomorphism> dq;
  dq.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    dq.push_back(covariant_derivative_endomorphism(m, conn, m.basis_field(i), qstar));
  const Endomorphism& dq_xi = dq[m.xi_index()];

  Check xi_slot(m, "qstar_derivative_xi_slot");
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField nabla_xi = covariant_derivative(m, conn, m.basis_field(i), m.xi());
    xi_slot.vector_residual({i}, dq[i].apply(m.xi()) - nabla_xi);
  }
  results.push_back(xi_slot.take());

  Check along_xi(m, "qstar_derivative_along_xi");
  for (std::size_t j = 0; j < dim; ++j)
    along_xi.vector_residual({j}, dq_xi.apply(m.basis_field(j)));
  results.push_back(along_xi.take());

  Check commutator(m, "qstar_derivative_commutator");
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField nabla_xi = covariant_derivative(m, conn, m.basis_field(i), m.xi());
    FrameVectorField lhs = dq[i].apply(m.xi()) - dq_xi.apply(m.basis_field(i));
    commutator.vector_residual({i}, lhs - nabla_xi);
  }
  results.push_back(commutator.take());

  return results;
}

}  // namespace kenso

#include "kenso/curvature.hpp"

#include "kenso/error.hpp"

namespace kenso {

RiemannTensor riemann(const FramedManifold& m, const Connection& conn) {
  const std::size_t dim = m.dim();
  RiemannTensor r(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    FrameVectorField ei = m.basis_field(i);
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVectorField ej = m.basis_field(j);
      FrameVectorField bracket(dim);
      for (std::size_t k = 0; k < dim; ++k) bracket.components[k] = m.structure_function(i, j, k);
      for (std::size_t k = 0; k < dim; ++k) {
        FrameVectorField value = covariant_derivative(m, conn, ei, conn.nabla(j, k)) -
                                 covariant_derivative(m, conn, ej, conn.nabla(i, k)) -
                                 covariant_derivative(m, conn, bracket, m.basis_field(k));
        r.at(i, j, k) = std::move(value);
      }
    }
  }
  return r;
}

FrameVectorField riemann_apply(const RiemannTensor& r, const FrameVectorField& x,
                               const FrameVectorField& y, const FrameVectorField& z) {
  const std::size_t dim = r.dim();
  FrameVectorField out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x.components[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y.components[j].is_zero()) continue;
      CoeffExpr xy = x.components[i] * y.components[j];
      for (std::size_t k = 0; k < dim; ++k) {
        if (z.components[k].is_zero()) continue;
        CoeffExpr weight = xy * z.components[k];
        const FrameVectorField& base = r.at(i, j, k);
        for (std::size_t l = 0; l < dim; ++l) {
          if (base.components[l].is_zero()) continue;
          out.components[l] = out.components[l] + weight * base.components[l];
        }
      }
    }
  }
  return out;
}

bool riemann_is_antisymmetric(const RiemannTensor& r) {
  const std::size_t dim = r.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (!(r.at(i, j, k) + r.at(j, i, k)).is_zero()) return false;
  return true;
}

bool riemann_first_bianchi(const RiemannTensor& r) {
  const std::size_t dim = r.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (!(r.at(i, j, k) + r.at(j, k, i) + r.at(k, i, j)).is_zero()) return false;
  return true;
}

bool riemann_pair_symmetric(const FramedManifold& m, const RiemannTensor& r) {
  const std::size_t dim = r.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          CoeffExpr lhs = m.metric_pairing(r.at(i, j, k), m.basis_field(l));
          CoeffExpr rhs = m.metric_pairing(r.at(k, l, i), m.basis_field(j));
          if (lhs != rhs) return false;
        }
  return true;
}

CoeffExpr trace_g(const FramedManifold& m, const Tensor02& t) {
  const RationalMatrix& ginv = m.metric_inverse();
  CoeffExpr acc;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (ginv[i][j] == 0 || t.at(i, j).is_zero()) continue;
      acc = acc + t.at(i, j).scaled(ginv[i][j]);
    }
  return acc;
}

Tensor02 ricci(const FramedManifold& m, const RiemannTensor& r) {
  const std::size_t dim = m.dim();
  const RationalMatrix& ginv = m.metric_inverse();
  Tensor02 s(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      CoeffExpr acc;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          if (ginv[i][j] == 0) continue;
          CoeffExpr piece = m.metric_pairing(r.at(i, a, b), m.basis_field(j));
          if (piece.is_zero()) continue;
          acc = acc + piece.scaled(ginv[i][j]);
        }
      s.at(a, b) = std::move(acc);
    }
  return s;
}

CoeffExpr scalar_curvature(const FramedManifold& m, const Tensor02& ricci_tensor) {
  return trace_g(m, ricci_tensor);
}

Tensor02 star_ricci_from_curvature(const FramedManifold& m, const RiemannTensor& r) {
  const std::size_t dim = m.dim();
  const RationalMatrix& ginv = m.metric_inverse();
  Tensor02 s(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      FrameVectorField phi_eb = m.phi_apply(m.basis_field(b));
      CoeffExpr acc;
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          if (ginv[k][l] == 0) continue;
          FrameVectorField twisted =
              m.phi_apply(riemann_apply(r, m.basis_field(a), phi_eb, m.basis_field(k)));
          CoeffExpr piece = m.metric_pairing(twisted, m.basis_field(l));
          if (piece.is_zero()) continue;
          acc = acc + piece.scaled(ginv[k][l]);
        }
      s.at(a, b) = acc.scaled(Rational(1, 2));
    }
  }
  return s;
}

Tensor02 star_ricci_kenmotsu_form(const FramedManifold& m, const Tensor02& ricci_tensor,
                                  bool kenmotsu_verified) {
  if (!kenmotsu_verified)
    fail(errc::not_kenmotsu,
         "the closed-form star-Ricci tensor is only asserted on Kenmotsu-verified manifolds");
  const std::size_t dim = m.dim();
  Rational shift(2 * static_cast<long>(m.n()) - 1);
  Tensor02 s(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      s.at(i, j) = ricci_tensor.at(i, j) +
                   CoeffExpr(shift * m.metric()[i][j] + m.eta_frame(i) * m.eta_frame(j));
  return s;
}

CoeffExpr star_scalar(const FramedManifold& m, const Tensor02& star_ricci) {
  return trace_g(m, star_ricci);
}

Endomorphism raise_index(const FramedManifold& m, const Tensor02& t) {
  const std::size_t dim = m.dim();
  const RationalMatrix& ginv = m.metric_inverse();
  Endomorphism q(dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t a = 0; a < dim; ++a) {
      CoeffExpr acc;
      for (std::size_t j = 0; j < dim; ++j) {
        if (ginv[k][j] == 0 || t.at(j, a).is_zero()) continue;
        acc = acc + t.at(j, a).scaled(ginv[k][j]);
      }
      q.at(k, a) = std::move(acc);
    }
  return q;
}

}  // namespace kenso

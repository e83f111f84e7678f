#include "kenso/connection.hpp"

namespace kenso {

FrameVectorField Connection::nabla(std::size_t i, std::size_t j) const {
  FrameVectorField out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out.components[k] = gamma(i, j, k);
  return out;
}

Connection koszul_connection(const FramedManifold& m) {
  const std::size_t dim = m.dim();
  const RationalMatrix& g = m.metric();
  const RationalMatrix& ginv = m.metric_inverse();

  // g(e_a, [e_b, e_c]) from the structure functions.
  auto pair_bracket = [&](std::size_t a, std::size_t b, std::size_t c) {
    CoeffExpr acc;
    for (std::size_t k = 0; k < dim; ++k) {
      const CoeffExpr& s = m.structure_function(b, c, k);
      if (s.is_zero() || g[a][k] == 0) continue;
      acc = acc + s.scaled(g[a][k]);
    }
    return acc;
  };

  Connection conn(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<CoeffExpr> lowered(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        CoeffExpr twice = -pair_bracket(i, j, k) - pair_bracket(j, i, k) + pair_bracket(k, i, j);
        lowered[k] = twice.scaled(Rational(1, 2));
      }
      for (std::size_t k = 0; k < dim; ++k) {
        CoeffExpr acc;
        for (std::size_t l = 0; l < dim; ++l) {
          if (ginv[k][l] == 0 || lowered[l].is_zero()) continue;
          acc = acc + lowered[l].scaled(ginv[k][l]);
        }
        conn.gamma(i, j, k) = std::move(acc);
      }
    }
  }
  return conn;
}

FrameVectorField covariant_derivative(const FramedManifold& m, const Connection& conn,
                                      const FrameVectorField& x, const FrameVectorField& w) {
  const std::size_t dim = m.dim();
  FrameVectorField out(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    CoeffExpr acc = m.directional_derivative(x, w.components[k]);
    for (std::size_t i = 0; i < dim; ++i) {
      if (x.components[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (w.components[j].is_zero() || conn.gamma(i, j, k).is_zero()) continue;
        acc = acc + x.components[i] * w.components[j] * conn.gamma(i, j, k);
      }
    }
    out.components[k] = std::move(acc);
  }
  return out;
}

Endomorphism covariant_derivative_endomorphism(const FramedManifold& m, const Connection& conn,
                                               const FrameVectorField& x, const Endomorphism& a) {
  const std::size_t dim = m.dim();
  Endomorphism out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    FrameVectorField ej = m.basis_field(j);
    FrameVectorField col = covariant_derivative(m, conn, x, a.column(j)) -
                           a.apply(covariant_derivative(m, conn, x, ej));
    for (std::size_t k = 0; k < dim; ++k) out.at(k, j) = std::move(col.components[k]);
  }
  return out;
}

bool connection_is_torsion_free(const FramedManifold& m, const Connection& conn) {
  const std::size_t dim = m.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (conn.gamma(i, j, k) - conn.gamma(j, i, k) != m.structure_function(i, j, k))
          return false;
  return true;
}

bool connection_is_metric_compatible(const FramedManifold& m, const Connection& conn) {
  const std::size_t dim = m.dim();
  const RationalMatrix& g = m.metric();
  // e_k(g_ij) = 0 for constant frame metrics, so compatibility reduces to
  // g(nabla_{e_k} e_i, e_j) + g(e_i, nabla_{e_k} e_j) = 0.
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        CoeffExpr acc;
        for (std::size_t l = 0; l < dim; ++l) {
          if (g[l][j] != 0) acc = acc + conn.gamma(k, i, l).scaled(g[l][j]);
          if (g[i][l] != 0) acc = acc + conn.gamma(k, j, l).scaled(g[i][l]);
        }
        if (!acc.is_zero()) return false;
      }
  return true;
}

}  // namespace kenso

#pragma once

#include "kenso/manifold.hpp"

namespace kenso {

// Frame connection coefficients: nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
class Connection {
 public:
  Connection() = default;
  explicit Connection(std::size_t dim) : dim_(dim), gamma_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const CoeffExpr& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  CoeffExpr& gamma(std::size_t i, std::size_t j, std::size_t k) {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }

  FrameVectorField nabla(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_ = 0;
  std::vector<CoeffExpr> gamma_;
};

// Levi-Civita connection from the Koszul formula. The frame metric is
// constant, so only the bracket terms survive:
//   2 g(nabla_{e_i} e_j, e_k) =
//     -g(e_i, [e_j, e_k]) - g(e_j, [e_i, e_k]) + g(e_k, [e_i, e_j]).
Connection koszul_connection(const FramedManifold& m);

FrameVectorField covariant_derivative(const FramedManifold& m, const Connection& conn,
                                      const FrameVectorField& x, const FrameVectorField& w);

// (nabla_X A)(W) = nabla_X (A W) - A(nabla_X W), evaluated on the frame.
Endomorphism covariant_derivative_endomorphism(const FramedManifold& m, const Connection& conn,
                                               const FrameVectorField& x, const Endomorphism& a);

bool connection_is_torsion_free(const FramedManifold& m, const Connection& conn);
bool connection_is_metric_compatible(const FramedManifold& m, const Connection& conn);

}  // namespace kenso

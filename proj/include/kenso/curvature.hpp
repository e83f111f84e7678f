#pragma once

#include "kenso/connection.hpp"

namespace kenso {

// Riemann (1,3) tensor stored as frame components: at(i, j, k) = R(e_i, e_j)e_k.
class RiemannTensor {
 public:
  RiemannTensor() = default;
  explicit RiemannTensor(std::size_t dim)
      : dim_(dim), entries_(dim * dim * dim, FrameVectorField(dim)) {}

  std::size_t dim() const { return dim_; }
  const FrameVectorField& at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dim_ + j) * dim_ + k];
  }
  FrameVectorField& at(std::size_t i, std::size_t j, std::size_t k) {
    return entries_[(i * dim_ + j) * dim_ + k];
  }

 private:
  std::size_t dim_ = 0;
  std::vector<FrameVectorField> entries_;
};

// R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X, Y]} Z.
RiemannTensor riemann(const FramedManifold& m, const Connection& conn);

// Function-linear extension of the stored frame components.
FrameVectorField riemann_apply(const RiemannTensor& r, const FrameVectorField& x,
                               const FrameVectorField& y, const FrameVectorField& z);

bool riemann_is_antisymmetric(const RiemannTensor& r);
bool riemann_first_bianchi(const RiemannTensor& r);
bool riemann_pair_symmetric(const FramedManifold& m, const RiemannTensor& r);

// Inverse-metric-weighted trace of a (0,2) tensor (plain trace on an
// orthonormal frame).
CoeffExpr trace_g(const FramedManifold& m, const Tensor02& t);

// S(X, Y) = sum_i g(R(e_i, X)Y, e_i) over the (inverse-metric-weighted) frame.
Tensor02 ricci(const FramedManifold& m, const RiemannTensor& r);
CoeffExpr scalar_curvature(const FramedManifold& m, const Tensor02& ricci_tensor);

// S*(X, Y) = 1/2 tr(Z -> phi(R(X, phi Y)Z)), the contraction fixed by the
// acceptance checks on the built-in example.
Tensor02 star_ricci_from_curvature(const FramedManifold& m, const RiemannTensor& r);

// S* = S + (2n-1) g + eta (x) eta; only asserted on Kenmotsu-verified
// manifolds. Pass kenmotsu_verified=true after the verifier has passed (or to
// deliberately override); otherwise throws NotKenmotsu.
Tensor02 star_ricci_kenmotsu_form(const FramedManifold& m, const Tensor02& ricci_tensor,
                                  bool kenmotsu_verified);

CoeffExpr star_scalar(const FramedManifold& m, const Tensor02& star_ricci);

// Metric-raised operator of a (0,2) tensor: g(raise(T) X, Y) = T(X, Y).
Endomorphism raise_index(const FramedManifold& m, const Tensor02& t);

// Bundle the soliton analysis consumes.
struct CurvatureTables {
  Tensor02 ricci;
  CoeffExpr scalar;
  Tensor02 star_ricci;
  CoeffExpr star_scalar;
};

}  // namespace kenso

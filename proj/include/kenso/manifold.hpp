#pragma once

#include "kenso/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kenso {

// Odd-dimensional manifold presented by an orthonormal-style moving frame and
// an almost contact metric structure (phi, xi, eta, g). Two frame forms are
// supported:
//
//   * diagonal form: e_i = scale_i * d/d coords[target_i] with unit scales and
//     target a permutation of the coordinates;
//   * structure form: only the bracket table [e_i, e_j] = c^k_ij e_k is known.
//
// The metric is a constant symmetric positive-definite matrix on frame
// indices (identity by default), xi is one of the frame fields, and eta is
// always derived as g(., xi). Instances are immutable after construction and
// every operation is pure, so unrestricted concurrent reads are safe.
class FramedManifold {
 public:
  // e_i = scale * d/d coords[target]
  struct FrameLeg {
    std::size_t target = 0;
    CoeffExpr scale;
  };

  static FramedManifold diagonal(std::vector<std::string> coords,
                                 std::vector<FrameLeg> frame,
                                 std::size_t xi_index,
                                 RationalMatrix phi,
                                 std::optional<RationalMatrix> metric = std::nullopt,
                                 std::vector<std::string> frame_names = {},
                                 bool validate = true);

  // structure[(i*dim + j)*dim + k] = c^k_ij
  static FramedManifold from_structure_functions(std::size_t dim,
                                                 std::vector<CoeffExpr> structure,
                                                 std::size_t xi_index,
                                                 RationalMatrix phi,
                                                 std::optional<RationalMatrix> metric = std::nullopt,
                                                 std::vector<std::string> frame_names = {},
                                                 bool validate = true);

  std::size_t dim() const { return dim_; }
  std::size_t n() const { return n_; }
  std::size_t xi_index() const { return xi_; }
  bool has_coordinate_frame() const { return !legs_.empty(); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<std::string>& frame_names() const { return frame_names_; }
  const RationalMatrix& metric() const { return metric_; }
  const RationalMatrix& metric_inverse() const { return metric_inv_; }
  const RationalMatrix& phi_matrix() const { return phi_; }
  const std::vector<FrameLeg>& frame_legs() const { return legs_; }

  // c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k.
  const CoeffExpr& structure_function(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }

  FrameVectorField basis_field(std::size_t i) const { return FrameVectorField::basis(dim_, i); }
  FrameVectorField xi() const { return basis_field(xi_); }

  // Directional derivative e_i(f); structure-form frames support only
  // constant coefficients.
  CoeffExpr frame_derivative(std::size_t i, const CoeffExpr& f) const;
  CoeffExpr directional_derivative(const FrameVectorField& x, const CoeffExpr& f) const;

  FrameVectorField lie_bracket(const FrameVectorField& x, const FrameVectorField& y) const;
  // Bracket through the structure-function expansion; for diagonal frames
  // this is an independent route against the coordinate-basis computation.
  FrameVectorField lie_bracket_via_structure(const FrameVectorField& x,
                                             const FrameVectorField& y) const;

  FrameVectorField to_frame_components(const CoordinateVectorField& w) const;
  CoordinateVectorField to_coordinate_components(const FrameVectorField& x) const;

  FrameVectorField phi_apply(const FrameVectorField& x) const;
  // eta(e_i) = g(e_i, xi), a constant.
  Rational eta_frame(std::size_t i) const { return metric_[i][xi_]; }
  CoeffExpr eta(const FrameVectorField& x) const;
  CoeffExpr metric_pairing(const FrameVectorField& x, const FrameVectorField& y) const;
  Tensor02 metric_tensor() const;
  Tensor02 eta_outer_eta() const;

  // True when a coordinate name is one of this manifold's coordinates; used
  // to separate manifold functions from free parameter symbols.
  bool coordinate_dependent(const CoeffExpr& f) const;

  // Jacobi cyclic sum over all frame triples; needs computable brackets.
  bool jacobi_identity_holds() const;

 private:
  FramedManifold() = default;

  void finish_construction(bool validate);
  void compute_structure_from_legs();

  std::size_t dim_ = 0;
  std::size_t n_ = 0;
  std::size_t xi_ = 0;
  std::vector<std::string> coords_;
  std::vector<std::string> frame_names_;
  std::vector<FrameLeg> legs_;
  std::vector<CoeffExpr> structure_;
  RationalMatrix metric_;
  RationalMatrix metric_inv_;
  RationalMatrix phi_;
};

}  // namespace kenso

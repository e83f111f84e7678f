#include "kenso/manifold.hpp"

#include "kenso/error.hpp"

#include <algorithm>

namespace kenso {

static std::vector<std::string> default_frame_names(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

FramedManifold FramedManifold::diagonal(std::vector<std::string> coords,
                                        std::vector<FrameLeg> frame,
                                        std::size_t xi_index,
                                        RationalMatrix phi,
                                        std::optional<RationalMatrix> metric,
                                        std::vector<std::string> frame_names,
                                        bool validate) {
  FramedManifold m;
  m.dim_ = coords.size();
  m.coords_ = std::move(coords);
  m.legs_ = std::move(frame);
  m.xi_ = xi_index;
  m.phi_ = std::move(phi);
  m.metric_ = metric ? std::move(*metric) : identity_matrix(m.dim_);
  m.frame_names_ = frame_names.empty() ? default_frame_names(m.dim_) : std::move(frame_names);

  if (m.legs_.size() != m.dim_)
    fail(errc::invalid_frame, "expected " + std::to_string(m.dim_) + " frame fields, got " +
                                  std::to_string(m.legs_.size()));
  if (validate) {
    std::vector<bool> used(m.dim_, false);
    for (std::size_t i = 0; i < m.dim_; ++i) {
      const FrameLeg& leg = m.legs_[i];
      if (leg.target >= m.dim_ || used[leg.target])
        fail(errc::invalid_frame,
             "frame targets must form a permutation of the coordinates");
      used[leg.target] = true;
      if (!leg.scale.is_unit())
        fail(errc::non_unit_frame_scale,
             "frame scale '" + leg.scale.str() + "' is not invertible in the algebra");
      std::set<std::string> vars;
      leg.scale.collect_variables(vars);
      for (const std::string& v : vars)
        if (std::find(m.coords_.begin(), m.coords_.end(), v) == m.coords_.end())
          fail(errc::undeclared_coordinate, "frame scale uses unknown coordinate '" + v + "'");
    }
  }
  m.compute_structure_from_legs();
  m.finish_construction(validate);
  return m;
}

FramedManifold FramedManifold::from_structure_functions(std::size_t dim,
                                                        std::vector<CoeffExpr> structure,
                                                        std::size_t xi_index,
                                                        RationalMatrix phi,
                                                        std::optional<RationalMatrix> metric,
                                                        std::vector<std::string> frame_names,
                                                        bool validate) {
  FramedManifold m;
  m.dim_ = dim;
  m.xi_ = xi_index;
  m.phi_ = std::move(phi);
  m.metric_ = metric ? std::move(*metric) : identity_matrix(dim);
  m.frame_names_ = frame_names.empty() ? default_frame_names(dim) : std::move(frame_names);
  if (structure.size() != dim * dim * dim)
    fail(errc::invalid_argument, "structure function table must have dim^3 entries");
  m.structure_ = std::move(structure);
  if (validate) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (m.structure_function(i, j, k) != -m.structure_function(j, i, k))
            fail(errc::invalid_argument, "structure functions must be antisymmetric in the lower indices");
  }
  m.finish_construction(validate);
  return m;
}

void FramedManifold::finish_construction(bool validate) {
  if (validate) {
    if (dim_ % 2 == 0) fail(errc::even_dimension, "dimension must be odd, got " + std::to_string(dim_));
    if (dim_ < 3) fail(errc::invalid_argument, "dimension must be at least 3");
  }
  n_ = dim_ >= 1 ? (dim_ - 1) / 2 : 0;
  if (xi_ >= dim_) fail(errc::invalid_argument, "xi index out of range");
  if (metric_.size() != dim_) fail(errc::bad_metric, "metric must be a dim x dim matrix");
  for (const auto& row : metric_)
    if (row.size() != dim_) fail(errc::bad_metric, "metric must be a dim x dim matrix");
  if (validate) {
    if (!matrix_is_symmetric(metric_)) fail(errc::bad_metric, "metric must be symmetric");
    if (!matrix_is_positive_definite(metric_))
      fail(errc::bad_metric, "metric must be positive definite");
    if (metric_[xi_][xi_] != 1)
      fail(errc::xi_not_unit, "eta(xi) = " + rational_str(metric_[xi_][xi_]) + ", expected 1");
  }
  metric_inv_ = matrix_inverse(metric_);
  if (phi_.size() != dim_) fail(errc::bad_phi_shape, "phi must be a dim x dim matrix");
  for (const auto& row : phi_)
    if (row.size() != dim_) fail(errc::bad_phi_shape, "phi must be a dim x dim matrix");
  if (frame_names_.size() != dim_)
    fail(errc::invalid_argument, "expected one frame name per dimension");
}

void FramedManifold::compute_structure_from_legs() {
  structure_.assign(dim_ * dim_ * dim_, CoeffExpr());
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j) continue;
      // [e_i, e_j] = u_i d_a(u_j)/u_j e_j - u_j d_b(u_i)/u_i e_i
      // with e_i = u_i d_a, e_j = u_j d_b.
      const FrameLeg& li = legs_[i];
      const FrameLeg& lj = legs_[j];
      CoeffExpr cj = li.scale * lj.scale.derivative(coords_[li.target]) * lj.scale.inverted_unit();
      CoeffExpr ci = lj.scale * li.scale.derivative(coords_[lj.target]) * li.scale.inverted_unit();
      structure_[(i * dim_ + j) * dim_ + j] = structure_[(i * dim_ + j) * dim_ + j] + cj;
      structure_[(i * dim_ + j) * dim_ + i] = structure_[(i * dim_ + j) * dim_ + i] - ci;
    }
  }
}

CoeffExpr FramedManifold::frame_derivative(std::size_t i, const CoeffExpr& f) const {
  if (!has_coordinate_frame()) {
    if (f.as_rational()) return CoeffExpr();
    fail(errc::structure_only_frame,
         "frame has no coordinate presentation; cannot differentiate '" + f.str() + "'");
  }
  const FrameLeg& leg = legs_[i];
  return leg.scale * f.derivative(coords_[leg.target]);
}

CoeffExpr FramedManifold::directional_derivative(const FrameVectorField& x,
                                                 const CoeffExpr& f) const {
  CoeffExpr out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.components[i].is_zero()) continue;
    out = out + x.components[i] * frame_derivative(i, f);
  }
  return out;
}

FrameVectorField FramedManifold::lie_bracket(const FrameVectorField& x,
                                             const FrameVectorField& y) const {
  if (!has_coordinate_frame()) return lie_bracket_via_structure(x, y);
  // Pass through the coordinate basis: [X, Y]^a = X^b d_b Y^a - Y^b d_b X^a.
  CoordinateVectorField cx = to_coordinate_components(x);
  CoordinateVectorField cy = to_coordinate_components(y);
  CoordinateVectorField bracket(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    CoeffExpr acc;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (!cx.components[b].is_zero())
        acc = acc + cx.components[b] * cy.components[a].derivative(coords_[b]);
      if (!cy.components[b].is_zero())
        acc = acc - cy.components[b] * cx.components[a].derivative(coords_[b]);
    }
    bracket.components[a] = std::move(acc);
  }
  return to_frame_components(bracket);
}

FrameVectorField FramedManifold::lie_bracket_via_structure(const FrameVectorField& x,
                                                           const FrameVectorField& y) const {
  FrameVectorField out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    CoeffExpr acc = directional_derivative(x, y.components[k]) -
                    directional_derivative(y, x.components[k]);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x.components[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y.components[j].is_zero()) continue;
        const CoeffExpr& c = structure_function(i, j, k);
        if (c.is_zero()) continue;
        acc = acc + x.components[i] * y.components[j] * c;
      }
    }
    out.components[k] = std::move(acc);
  }
  return out;
}

FrameVectorField FramedManifold::to_frame_components(const CoordinateVectorField& w) const {
  if (!has_coordinate_frame())
    fail(errc::structure_only_frame, "frame has no coordinate presentation");
  if (w.dim() != dim_) fail(errc::invalid_argument, "coordinate field has wrong dimension");
  FrameVectorField out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const FrameLeg& leg = legs_[i];
    const CoeffExpr& wa = w.components[leg.target];
    if (!wa.is_zero()) out.components[i] = wa * leg.scale.inverted_unit();
  }
  return out;
}

CoordinateVectorField FramedManifold::to_coordinate_components(const FrameVectorField& x) const {
  if (!has_coordinate_frame())
    fail(errc::structure_only_frame, "frame has no coordinate presentation");
  CoordinateVectorField out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.components[i].is_zero()) continue;
    const FrameLeg& leg = legs_[i];
    out.components[leg.target] = out.components[leg.target] + x.components[i] * leg.scale;
  }
  return out;
}

FrameVectorField FramedManifold::phi_apply(const FrameVectorField& x) const {
  FrameVectorField out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    CoeffExpr acc;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (phi_[k][j] == 0 || x.components[j].is_zero()) continue;
      acc = acc + x.components[j].scaled(phi_[k][j]);
    }
    out.components[k] = std::move(acc);
  }
  return out;
}

CoeffExpr FramedManifold::eta(const FrameVectorField& x) const {
  CoeffExpr out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.components[i].is_zero()) continue;
    out = out + x.components[i].scaled(eta_frame(i));
  }
  return out;
}

CoeffExpr FramedManifold::metric_pairing(const FrameVectorField& x,
                                         const FrameVectorField& y) const {
  CoeffExpr out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.components[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (metric_[i][j] == 0 || y.components[j].is_zero()) continue;
      out = out + (x.components[i] * y.components[j]).scaled(metric_[i][j]);
    }
  }
  return out;
}

Tensor02 FramedManifold::metric_tensor() const {
  Tensor02 g(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (metric_[i][j] != 0) g.at(i, j) = CoeffExpr(metric_[i][j]);
  return g;
}

Tensor02 FramedManifold::eta_outer_eta() const {
  Tensor02 t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Rational v = eta_frame(i) * eta_frame(j);
      if (v != 0) t.at(i, j) = CoeffExpr(v);
    }
  return t;
}

bool FramedManifold::coordinate_dependent(const CoeffExpr& f) const {
  for (const std::string& c : coords_)
    if (f.depends_on(c)) return true;
  return false;
}

bool FramedManifold::jacobi_identity_holds() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        FrameVectorField ei = basis_field(i), ej = basis_field(j), ek = basis_field(k);
        FrameVectorField sum = lie_bracket(ei, lie_bracket(ej, ek)) +
                               lie_bracket(ej, lie_bracket(ek, ei)) +
                               lie_bracket(ek, lie_bracket(ei, ej));
        if (!sum.is_zero()) return false;
      }
  return true;
}

}  // namespace kenso

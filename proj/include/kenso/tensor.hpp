#pragma once

#include "kenso/coeff_expr.hpp"

#include <cstddef>
#include <vector>

namespace kenso {

// Vector field expressed by its coefficients against the moving frame.
struct FrameVectorField {
  std::vector<CoeffExpr> components;

  FrameVectorField() = default;
  explicit FrameVectorField(std::size_t dim) : components(dim) {}

  std::size_t dim() const { return components.size(); }
  bool is_zero() const;

  static FrameVectorField basis(std::size_t dim, std::size_t index);
};

FrameVectorField operator+(const FrameVectorField& a, const FrameVectorField& b);
FrameVectorField operator-(const FrameVectorField& a, const FrameVectorField& b);
FrameVectorField operator-(const FrameVectorField& a);
FrameVectorField operator*(const CoeffExpr& f, const FrameVectorField& a);
bool operator==(const FrameVectorField& a, const FrameVectorField& b);
inline bool operator!=(const FrameVectorField& a, const FrameVectorField& b) { return !(a == b); }

// Vector field expressed against the coordinate basis (d/d coord_i).
struct CoordinateVectorField {
  std::vector<CoeffExpr> components;

  CoordinateVectorField() = default;
  explicit CoordinateVectorField(std::size_t dim) : components(dim) {}
  std::size_t dim() const { return components.size(); }
};

// Symmetric-by-use (0,2) tensor on frame indices (metric, Ricci, Lie
// derivatives, Hessians). Symmetry is a checkable property, not an enforced
// storage constraint.
class Tensor02 {
 public:
  Tensor02() = default;
  explicit Tensor02(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const CoeffExpr& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  CoeffExpr& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  CoeffExpr apply(const FrameVectorField& x, const FrameVectorField& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<CoeffExpr> entries_;
};

Tensor02 operator+(const Tensor02& a, const Tensor02& b);
Tensor02 operator-(const Tensor02& a, const Tensor02& b);
Tensor02 operator*(const CoeffExpr& f, const Tensor02& a);
bool operator==(const Tensor02& a, const Tensor02& b);
inline bool operator!=(const Tensor02& a, const Tensor02& b) { return !(a == b); }

// (1,1) tensor field: A(e_j) = sum_k at(k, j) e_k.
class Endomorphism {
 public:
  Endomorphism() = default;
  explicit Endomorphism(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static Endomorphism identity(std::size_t dim);
  static Endomorphism from_constant(const RationalMatrix& m);

  std::size_t dim() const { return dim_; }
  const CoeffExpr& at(std::size_t k, std::size_t j) const { return entries_[k * dim_ + j]; }
  CoeffExpr& at(std::size_t k, std::size_t j) { return entries_[k * dim_ + j]; }

  FrameVectorField apply(const FrameVectorField& x) const;
  FrameVectorField column(std::size_t j) const;

 private:
  std::size_t dim_ = 0;
  std::vector<CoeffExpr> entries_;
};

Endomorphism operator-(const Endomorphism& a, const Endomorphism& b);
bool operator==(const Endomorphism& a, const Endomorphism& b);
inline bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

}  // namespace kenso

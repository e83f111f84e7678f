#include "kenso/tensor.hpp"

namespace kenso {

bool FrameVectorField::is_zero() const {
  for (const CoeffExpr& c : components)
    if (!c.is_zero()) return false;
  return true;
}

FrameVectorField FrameVectorField::basis(std::size_t dim, std::size_t index) {
  FrameVectorField v(dim);
  v.components[index] = CoeffExpr(1);
  return v;
}

FrameVectorField operator+(const FrameVectorField& a, const FrameVectorField& b) {
  FrameVectorField out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.components[i] = a.components[i] + b.components[i];
  return out;
}

FrameVectorField operator-(const FrameVectorField& a, const FrameVectorField& b) {
  FrameVectorField out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.components[i] = a.components[i] - b.components[i];
  return out;
}

FrameVectorField operator-(const FrameVectorField& a) {
  FrameVectorField out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.components[i] = -a.components[i];
  return out;
}

FrameVectorField operator*(const CoeffExpr& f, const FrameVectorField& a) {
  FrameVectorField out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.components[i] = f * a.components[i];
  return out;
}

bool operator==(const FrameVectorField& a, const FrameVectorField& b) {
  return a.components == b.components;
}

bool Tensor02::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Tensor02::is_zero() const {
  for (const CoeffExpr& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

CoeffExpr Tensor02::apply(const FrameVectorField& x, const FrameVectorField& y) const {
  CoeffExpr out;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.components[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y.components[j].is_zero()) continue;
      out = out + at(i, j) * x.components[i] * y.components[j];
    }
  }
  return out;
}

Tensor02 operator+(const Tensor02& a, const Tensor02& b) {
  Tensor02 out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

Tensor02 operator-(const Tensor02& a, const Tensor02& b) {
  Tensor02 out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

Tensor02 operator*(const CoeffExpr& f, const Tensor02& a) {
  Tensor02 out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = f * a.at(i, j);
  return out;
}

bool operator==(const Tensor02& a, const Tensor02& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

Endomorphism Endomorphism::identity(std::size_t dim) {
  Endomorphism e(dim);
  for (std::size_t i = 0; i < dim; ++i) e.at(i, i) = CoeffExpr(1);
  return e;
}

Endomorphism Endomorphism::from_constant(const RationalMatrix& m) {
  Endomorphism e(m.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[k][j] != 0) e.at(k, j) = CoeffExpr(m[k][j]);
  return e;
}

FrameVectorField Endomorphism::apply(const FrameVectorField& x) const {
  FrameVectorField out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    CoeffExpr acc;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x.components[j].is_zero() || at(k, j).is_zero()) continue;
      acc = acc + at(k, j) * x.components[j];
    }
    out.components[k] = std::move(acc);
  }
  return out;
}

FrameVectorField Endomorphism::column(std::size_t j) const {
  FrameVectorField out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out.components[k] = at(k, j);
  return out;
}

Endomorphism operator-(const Endomorphism& a, const Endomorphism& b) {
  Endomorphism out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t j = 0; j < a.dim(); ++j) out.at(k, j) = a.at(k, j) - b.at(k, j);
  return out;
}

bool operator==(const Endomorphism& a, const Endomorphism& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.at(k, j) != b.at(k, j)) return false;
  return true;
}

}  // namespace kenso

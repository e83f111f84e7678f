#include "kenso/rational.hpp"

#include "kenso/error.hpp"

#include <sstream>

namespace kenso {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational rational_pow(const Rational& base, std::uint64_t exp) {
  Rational result = 1;
  Rational b = base;
  std::uint64_t e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

RationalMatrix identity_matrix(std::size_t dim) {
  RationalMatrix m(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

bool matrix_is_symmetric(const RationalMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

static Rational leading_minor(const RationalMatrix& m, std::size_t k) {
  // Determinant of the top-left k-by-k block by fraction-free elimination on
  // a working copy; dimensions here are tiny.
  RationalMatrix a(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
  Rational det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < k; ++row) {
      if (a[row][col] == 0) continue;
      Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < k; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return det;
}

bool matrix_is_positive_definite(const RationalMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k)
    if (leading_minor(m, k) <= 0) return false;
  return true;
}

RationalMatrix matrix_inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(errc::bad_metric, "matrix is singular");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
    }
    Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace kenso

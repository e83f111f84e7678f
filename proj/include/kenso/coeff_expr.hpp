#pragma once

#include "kenso/error.hpp"
#include "kenso/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kenso {

// One summand of a CoeffExpr:
//
//   coeff * prod_i coord_i^power_i * exp(sum_j weight_j * coord_j)
//
// with a nonzero rational coeff; powers and exp_weights never store zero
// entries. The pair (powers, exp_weights) is the merge key.
struct Term {
  Rational coeff;
  std::map<std::string, std::uint64_t> powers;
  std::map<std::string, Rational> exp_weights;
};

bool same_shape(const Term& a, const Term& b);
bool shape_less(const Term& a, const Term& b);

// Value of an expression at a rational point. The result is exact whenever
// every exponential argument collapses to zero; otherwise it carries a
// high-precision decimal approximation.
struct EvalResult {
  bool exact = false;
  Rational exact_value;
  BigFloat approx_value;

  // Decimal rendering with the given significant digits (display only).
  std::string decimal(unsigned digits) const;
};

// Element of the closed function algebra used for every tensor component:
// finite sums of rational * monomial * exponential terms, kept in a unique
// canonical form (shape-sorted, merged, no zero terms). Empty term list is
// the zero element. Values are immutable; all operations are pure.
class CoeffExpr {
 public:
  CoeffExpr() = default;
  explicit CoeffExpr(const Rational& constant);
  explicit CoeffExpr(long constant);

  static CoeffExpr coordinate(const std::string& name);
  static CoeffExpr exponential(const std::string& coord, const Rational& weight);
  static CoeffExpr from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Engaged iff the expression is a rational constant (possibly zero).
  std::optional<Rational> as_rational() const;
  // A unit of the algebra: exactly one term with no polynomial powers.
  bool is_unit() const;
  bool depends_on(const std::string& coord) const;
  void collect_variables(std::set<std::string>& out) const;

  CoeffExpr derivative(const std::string& coord) const;
  // Exact inverse of a unit; throws NotAUnit / ZeroElement otherwise.
  CoeffExpr inverted_unit() const;
  EvalResult evaluate(const std::map<std::string, Rational>& point) const;

  CoeffExpr scaled(const Rational& c) const;

  // Canonical surface-syntax rendering; parse(str()) reproduces the value.
  std::string str() const;
  static CoeffExpr parse(std::string_view text);

  friend CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b);
  friend CoeffExpr operator-(const CoeffExpr& a);
  friend bool operator==(const CoeffExpr& a, const CoeffExpr& b);
  friend bool operator!=(const CoeffExpr& a, const CoeffExpr& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;

  static std::vector<Term> normalized(std::vector<Term> terms);
};

class TokenCursor;
// Token-level expression parser shared with the manifold definition language.
CoeffExpr parse_expression(TokenCursor& cursor);

}  // namespace kenso

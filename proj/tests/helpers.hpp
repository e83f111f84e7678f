#pragma once

#include "kenso/pipeline.hpp"

#include <random>
#include <string>
#include <vector>

namespace kenso::testing {

inline const GeometryAnalysis& kenmotsu5() {
  static const GeometryAnalysis g =
      analyze_geometry(parse_manifold_dsl(builtin_source("kenmotsu5")));
  return g;
}

inline const GeometryAnalysis& kenmotsu3() {
  static const GeometryAnalysis g =
      analyze_geometry(parse_manifold_dsl(builtin_source("kenmotsu3")));
  return g;
}

// Deterministic random expressions over a small coordinate pool.
class ExprGen {
 public:
  explicit ExprGen(unsigned seed) : rng_(seed) {}

  std::mt19937& rng() { return rng_; }

  Rational rational(int lo = -9, int hi = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

  Rational nonzero_rational() {
    Rational r = rational();
    return r == 0 ? Rational(1) : r;
  }

  std::string coord() {
    static const std::vector<std::string> pool{"x", "y", "v"};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng_)];
  }

  Term term() {
    Term t;
    t.coeff = nonzero_rational();
    std::uniform_int_distribution<int> count(0, 2);
    std::uniform_int_distribution<int> power(1, 3);
    for (int i = count(rng_); i > 0; --i) t.powers[coord()] += power(rng_);
    for (int i = count(rng_); i > 0; --i) {
      Rational w = rational(-2, 2, 2);
      if (w != 0) t.exp_weights[coord()] += w;
    }
    for (auto it = t.exp_weights.begin(); it != t.exp_weights.end();)
      it = (it->second == 0) ? t.exp_weights.erase(it) : std::next(it);
    return t;
  }

  CoeffExpr expr(int max_terms = 4) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::vector<Term> terms;
    for (int i = count(rng_); i > 0; --i) terms.push_back(term());
    return CoeffExpr::from_terms(std::move(terms));
  }

  CoeffExpr nonzero_expr(int max_terms = 4) {
    CoeffExpr e = expr(max_terms);
    return e.is_zero() ? CoeffExpr(1) : e;
  }

  CoeffExpr unit() {
    Term t;
    t.coeff = nonzero_rational();
    std::uniform_int_distribution<int> count(0, 2);
    for (int i = count(rng_); i > 0; --i) {
      Rational w = rational(-2, 2, 2);
      if (w != 0) t.exp_weights[coord()] += w;
    }
    for (auto it = t.exp_weights.begin(); it != t.exp_weights.end();)
      it = (it->second == 0) ? t.exp_weights.erase(it) : std::next(it);
    return CoeffExpr::from_terms({t});
  }

 private:
  std::mt19937 rng_;
};

}  // namespace kenso::testing

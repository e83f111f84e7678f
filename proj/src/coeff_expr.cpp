#include "kenso/coeff_expr.hpp"

#include "kenso/lexer.hpp"

#include <algorithm>
#include <sstream>

namespace kenso {

bool same_shape(const Term& a, const Term& b) {
  return a.powers == b.powers && a.exp_weights == b.exp_weights;
}

bool shape_less(const Term& a, const Term& b) {
  if (a.powers != b.powers) return a.powers < b.powers;
  return a.exp_weights < b.exp_weights;
}

std::string EvalResult::decimal(unsigned digits) const {
  if (digits == 0) digits = 50;
  digits = std::min(digits, 95u);
  if (exact) return static_cast<BigFloat>(exact_value).str(digits);
  return approx_value.str(digits);
}

CoeffExpr::CoeffExpr(const Rational& constant) {
  if (constant != 0) terms_.push_back({constant, {}, {}});
}

CoeffExpr::CoeffExpr(long constant) : CoeffExpr(Rational(constant)) {}

CoeffExpr CoeffExpr::coordinate(const std::string& name) {
  CoeffExpr e;
  e.terms_.push_back({Rational(1), {{name, 1}}, {}});
  return e;
}

CoeffExpr CoeffExpr::exponential(const std::string& coord, const Rational& weight) {
  CoeffExpr e;
  if (weight == 0) return CoeffExpr(Rational(1));
  e.terms_.push_back({Rational(1), {}, {{coord, weight}}});
  return e;
}

CoeffExpr CoeffExpr::from_terms(std::vector<Term> terms) {
  CoeffExpr e;
  e.terms_ = normalized(std::move(terms));
  return e;
}

std::vector<Term> CoeffExpr::normalized(std::vector<Term> terms) {
  for (Term& t : terms) {
    for (auto it = t.powers.begin(); it != t.powers.end();)
      it = (it->second == 0) ? t.powers.erase(it) : std::next(it);
    for (auto it = t.exp_weights.begin(); it != t.exp_weights.end();)
      it = (it->second == 0) ? t.exp_weights.erase(it) : std::next(it);
  }
  std::sort(terms.begin(), terms.end(), shape_less);
  std::vector<Term> out;
  for (Term& t : terms) {
    if (t.coeff == 0) continue;
    if (!out.empty() && same_shape(out.back(), t)) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool CoeffExpr::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].powers.empty() &&
         terms_[0].exp_weights.empty();
}

std::optional<Rational> CoeffExpr::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].powers.empty() && terms_[0].exp_weights.empty())
    return terms_[0].coeff;
  return std::nullopt;
}

bool CoeffExpr::is_unit() const {
  return terms_.size() == 1 && terms_[0].powers.empty();
}

bool CoeffExpr::depends_on(const std::string& coord) const {
  for (const Term& t : terms_)
    if (t.powers.count(coord) || t.exp_weights.count(coord)) return true;
  return false;
}

void CoeffExpr::collect_variables(std::set<std::string>& out) const {
  for (const Term& t : terms_) {
    for (const auto& [name, p] : t.powers) out.insert(name);
    for (const auto& [name, w] : t.exp_weights) out.insert(name);
  }
}

CoeffExpr CoeffExpr::derivative(const std::string& coord) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    auto pit = t.powers.find(coord);
    if (pit != t.powers.end()) {
      Term d = t;
      d.coeff *= Rational(BigInt(pit->second));
      if (pit->second == 1)
        d.powers.erase(coord);
      else
        d.powers[coord] = pit->second - 1;
      out.push_back(std::move(d));
    }
    auto wit = t.exp_weights.find(coord);
    if (wit != t.exp_weights.end()) {
      Term d = t;
      d.coeff *= wit->second;
      out.push_back(std::move(d));
    }
  }
  return from_terms(std::move(out));
}

CoeffExpr CoeffExpr::inverted_unit() const {
  if (terms_.empty()) fail(errc::zero_element, "cannot invert the zero element");
  if (!is_unit())
    fail(errc::not_a_unit, "only single terms without polynomial factors are invertible: " + str());
  Term inv;
  inv.coeff = Rational(1) / terms_[0].coeff;
  for (const auto& [coord, w] : terms_[0].exp_weights) inv.exp_weights[coord] = -w;
  CoeffExpr e;
  e.terms_.push_back(std::move(inv));
  return e;
}

EvalResult CoeffExpr::evaluate(const std::map<std::string, Rational>& point) const {
  auto lookup = [&](const std::string& coord) -> const Rational& {
    auto it = point.find(coord);
    if (it == point.end())
      fail(errc::missing_coordinate, "no value assigned to coordinate '" + coord + "'");
    return it->second;
  };
  Rational exact_sum = 0;
  BigFloat approx_sum = 0;
  bool any_approx = false;
  for (const Term& t : terms_) {
    Rational value = t.coeff;
    for (const auto& [coord, p] : t.powers) value *= rational_pow(lookup(coord), p);
    Rational exp_arg = 0;
    for (const auto& [coord, w] : t.exp_weights) exp_arg += w * lookup(coord);
    if (exp_arg == 0) {
      exact_sum += value;
    } else {
      any_approx = true;
      approx_sum += static_cast<BigFloat>(value) * exp(static_cast<BigFloat>(exp_arg));
    }
  }
  EvalResult result;
  result.exact = !any_approx;
  result.exact_value = exact_sum;
  result.approx_value = approx_sum + static_cast<BigFloat>(exact_sum);
  return result;
}

CoeffExpr CoeffExpr::scaled(const Rational& c) const {
  if (c == 0) return CoeffExpr();
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff *= c;
  CoeffExpr e;
  e.terms_ = std::move(out);  // scaling preserves shapes and order
  return e;
}

CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return CoeffExpr::from_terms(std::move(terms));
}

CoeffExpr operator-(const CoeffExpr& a) { return a.scaled(Rational(-1)); }

CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b) { return a + (-b); }

CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) {
      Term t;
      t.coeff = ta.coeff * tb.coeff;
      t.powers = ta.powers;
      for (const auto& [coord, p] : tb.powers) t.powers[coord] += p;
      t.exp_weights = ta.exp_weights;
      for (const auto& [coord, w] : tb.exp_weights) t.exp_weights[coord] += w;
      out.push_back(std::move(t));
    }
  }
  return CoeffExpr::from_terms(std::move(out));
}

bool operator==(const CoeffExpr& a, const CoeffExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (!same_shape(a.terms_[i], b.terms_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rendering

static void render_term(std::ostringstream& os, const Term& t, bool leading) {
  Rational c = t.coeff;
  if (leading) {
    if (c < 0) {
      os << "-";
      c = -c;
    }
  } else {
    os << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
  }
  std::vector<std::string> factors;
  for (const auto& [coord, p] : t.powers) {
    if (p == 1)
      factors.push_back(coord);
    else
      factors.push_back(coord + "^" + std::to_string(p));
  }
  for (const auto& [coord, w] : t.exp_weights)
    factors.push_back("exp(" + rational_str(w) + "*" + coord + ")");
  if (factors.empty()) {
    os << rational_str(c);
    return;
  }
  bool first = true;
  if (c != 1) {
    os << rational_str(c);
    first = false;
  }
  for (const std::string& f : factors) {
    if (!first) os << "*";
    os << f;
    first = false;
  }
}

std::string CoeffExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const Term& t : terms_) {
    render_term(os, t, leading);
    leading = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing
//
//   expr    := ['+'|'-'] product { ('+'|'-') product }
//   product := factor { '*' factor }
//   factor  := rational | IDENT ['^' INT] | 'exp' '(' signed_rational '*' IDENT ')'

static Rational parse_rational_tokens(TokenCursor& cur) {
  const Token& num = cur.expect(TokenKind::integer, "a number");
  BigInt n(num.text);
  if (cur.accept(TokenKind::slash)) {
    const Token& den = cur.expect(TokenKind::integer, "a denominator");
    BigInt d(den.text);
    if (d == 0) fail_at(errc::parse_error, "zero denominator", den.pos);
    return Rational(n, d);
  }
  return Rational(n);
}

static Rational parse_signed_rational(TokenCursor& cur) {
  bool negative = false;
  if (cur.accept(TokenKind::minus))
    negative = true;
  else
    cur.accept(TokenKind::plus);
  Rational r = parse_rational_tokens(cur);
  return negative ? Rational(-r) : r;
}

static CoeffExpr parse_factor(TokenCursor& cur) {
  const Token& t = cur.peek();
  if (t.kind == TokenKind::integer) return CoeffExpr(parse_rational_tokens(cur));
  if (t.kind != TokenKind::ident)
    fail_at(errc::parse_error, "expected a number, coordinate, or exp(...)", t.pos);
  if (t.text == "exp") {
    cur.next();
    cur.expect(TokenKind::lparen, "'('");
    Rational weight = parse_signed_rational(cur);
    cur.expect(TokenKind::star, "'*'");
    const Token& coord = cur.expect(TokenKind::ident, "a coordinate name");
    cur.expect(TokenKind::rparen, "')'");
    return CoeffExpr::exponential(coord.text, weight);
  }
  std::string name = cur.next().text;
  std::uint64_t power = 1;
  if (cur.accept(TokenKind::caret)) {
    const Token& p = cur.expect(TokenKind::integer, "an integer exponent");
    if (p.text.size() > 9) fail_at(errc::parse_error, "exponent too large", p.pos);
    power = std::stoull(p.text);
  }
  Term term;
  term.coeff = 1;
  if (power > 0) term.powers[name] = power;
  return CoeffExpr::from_terms({term});
}

static CoeffExpr parse_product(TokenCursor& cur) {
  CoeffExpr result = parse_factor(cur);
  while (cur.accept(TokenKind::star)) result = result * parse_factor(cur);
  return result;
}

CoeffExpr parse_expression(TokenCursor& cur) {
  bool negative = false;
  if (cur.accept(TokenKind::minus))
    negative = true;
  else
    cur.accept(TokenKind::plus);
  CoeffExpr result = parse_product(cur);
  if (negative) result = -result;
  while (true) {
    if (cur.accept(TokenKind::plus))
      result = result + parse_product(cur);
    else if (cur.accept(TokenKind::minus))
      result = result - parse_product(cur);
    else
      break;
  }
  return result;
}

CoeffExpr CoeffExpr::parse(std::string_view text) {
  std::vector<Token> tokens = lex_line(text, 1);
  TokenCursor cur(tokens);
  if (cur.at_end()) fail_at(errc::parse_error, "empty expression", cur.peek().pos);
  CoeffExpr e = parse_expression(cur);
  if (!cur.at_end())
    fail_at(errc::parse_error, "unexpected trailing input '" + cur.peek().text + "'",
            cur.peek().pos);
  return e;
}

}  // namespace kenso

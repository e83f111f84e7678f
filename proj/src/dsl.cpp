#include "kenso/dsl.hpp"

#include "kenso/error.hpp"
#include "kenso/lexer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kenso {

std::optional<std::size_t> ManifoldDocument::frame_index(const std::string& name) const {
  for (std::size_t i = 0; i < frames.size(); ++i)
    if (frames[i].name == name) return i;
  return std::nullopt;
}

const VectorLine* ManifoldDocument::find_vector(const std::string& name) const {
  for (const VectorLine& v : vectors)
    if (v.name == name) return &v;
  return nullptr;
}

const CoeffExpr* ManifoldDocument::find_function(const std::string& name) const {
  for (const auto& [fname, expr] : functions)
    if (fname == name) return &expr;
  return nullptr;
}

namespace {

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) { doc_.source = std::string(text); }

  ManifoldDocument run() {
    std::istringstream in(doc_.source);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::vector<Token> tokens = lex_line(line, line_no);
      TokenCursor cur(tokens);
      if (cur.at_end()) continue;
      dispatch(cur);
    }
    finish();
    return std::move(doc_);
  }

 private:
  void dispatch(TokenCursor& cur) {
    const Token& head = cur.expect(TokenKind::ident, "a directive");
    if (head.text == "dim") return parse_dim(cur);
    if (head.text == "coords") return parse_coords(cur, head.pos);
    if (head.text == "frame") return parse_vector_line(cur, head.pos, /*is_frame=*/true);
    if (head.text == "metric") return parse_metric(cur, head.pos);
    if (head.text == "xi") return parse_xi(cur, head.pos);
    if (head.text == "phi") return parse_phi(cur, head.pos);
    if (head.text == "vector") return parse_vector_line(cur, head.pos, /*is_frame=*/false);
    if (head.text == "function") return parse_function(cur, head.pos);
    fail_at(errc::parse_error, "unknown directive '" + head.text + "'", head.pos);
  }

  void end_of_line(TokenCursor& cur) {
    if (!cur.at_end())
      fail_at(errc::parse_error, "unexpected trailing input '" + cur.peek().text + "'",
              cur.peek().pos);
  }

  void parse_dim(TokenCursor& cur) {
    if (have_dim_)
      fail_at(errc::duplicate_directive, "dim was already declared", cur.peek().pos);
    const Token& value = cur.expect(TokenKind::integer, "the dimension");
    if (value.text.size() > 2)
      fail_at(errc::parse_error, "dimension out of range", value.pos);
    doc_.dim = static_cast<std::size_t>(std::stoul(value.text));
    have_dim_ = true;
    end_of_line(cur);
  }

  void parse_coords(TokenCursor& cur, SourcePos pos) {
    if (!have_dim_) fail_at(errc::parse_error, "coords requires dim to be declared first", pos);
    if (!doc_.coords.empty())
      fail_at(errc::duplicate_directive, "coords was already declared", pos);
    std::set<std::string> seen;
    while (!cur.at_end()) {
      const Token& name = cur.expect(TokenKind::ident, "a coordinate name");
      check_name(name);
      if (!seen.insert(name.text).second)
        fail_at(errc::duplicate_directive, "coordinate '" + name.text + "' repeats", name.pos);
      doc_.coords.push_back(name.text);
    }
    if (doc_.coords.size() != doc_.dim)
      fail_at(errc::parse_error,
              "expected " + std::to_string(doc_.dim) + " coordinates, got " +
                  std::to_string(doc_.coords.size()),
              pos);
  }

  // frame/vector NAME = EXPR d COORD [+ EXPR d COORD ...].  A '+'/'-' right
  // after a completed `d COORD` starts the next term; earlier signs belong to
  // the coefficient expression.
  void parse_vector_line(TokenCursor& cur, SourcePos pos, bool is_frame) {
    require_coords(pos);
    const Token& name = cur.expect(TokenKind::ident, "a field name");
    check_name(name);
    if (doc_.frame_index(name.text) ||
        (!is_frame && doc_.find_vector(name.text)))
      fail_at(errc::duplicate_directive, "'" + name.text + "' was already declared", name.pos);
    cur.expect(TokenKind::equals, "'='");

    VectorLine line;
    line.name = name.text;
    bool negate_next = false;
    while (true) {
      DirectedTerm term;
      term.coeff = parse_directed_coefficient(cur);
      if (negate_next) term.coeff = -term.coeff;
      const Token& coord = cur.expect(TokenKind::ident, "a coordinate name after 'd'");
      auto it = std::find(doc_.coords.begin(), doc_.coords.end(), coord.text);
      if (it == doc_.coords.end())
        fail_at(errc::undeclared_coordinate, "unknown coordinate '" + coord.text + "'", coord.pos);
      term.coord = static_cast<std::size_t>(it - doc_.coords.begin());
      line.terms.push_back(std::move(term));
      if (cur.at_end()) break;
      if (cur.accept(TokenKind::plus)) {
        negate_next = false;
      } else if (cur.accept(TokenKind::minus)) {
        negate_next = true;
      } else {
        fail_at(errc::parse_error, "expected '+', '-', or end of line", cur.peek().pos);
      }
    }
    validate_expression_coords(line, pos);
    (is_frame ? doc_.frames : doc_.vectors).push_back(std::move(line));
  }

  // Consumes an expression up to and including the 'd' keyword.
  CoeffExpr parse_directed_coefficient(TokenCursor& cur) {
    // 'd COORD' with no explicit coefficient means coefficient 1.
    if (cur.peek().kind == TokenKind::ident && cur.peek().text == "d") {
      cur.next();
      return CoeffExpr(1);
    }
    CoeffExpr expr = parse_expression_until_d(cur);
    return expr;
  }

  CoeffExpr parse_expression_until_d(TokenCursor& cur) {
    // Collect tokens up to a top-level 'd' and parse them as one expression.
    std::vector<Token> slice;
    int depth = 0;
    while (!cur.at_end()) {
      const Token& t = cur.peek();
      if (depth == 0 && t.kind == TokenKind::ident && t.text == "d") {
        cur.next();
        break;
      }
      if (t.kind == TokenKind::lparen) ++depth;
      if (t.kind == TokenKind::rparen) --depth;
      slice.push_back(cur.next());
    }
    if (slice.empty())
      fail_at(errc::parse_error, "expected a coefficient expression", cur.peek().pos);
    slice.push_back({TokenKind::end, "", slice.back().pos});
    TokenCursor sub(slice);
    CoeffExpr expr = parse_expression(sub);
    if (!sub.at_end())
      fail_at(errc::parse_error, "unexpected input '" + sub.peek().text + "' before 'd'",
              sub.peek().pos);
    return expr;
  }

  void parse_metric(TokenCursor& cur, SourcePos pos) {
    require_coords(pos);
    if (doc_.metric || metric_identity_)
      fail_at(errc::duplicate_directive, "metric was already declared", pos);
    if (cur.peek().kind == TokenKind::ident && cur.peek().text == "identity") {
      cur.next();
      metric_identity_ = true;
      end_of_line(cur);
      return;
    }
    RationalMatrix rows;
    std::vector<Rational> row;
    while (!cur.at_end()) {
      if (cur.accept(TokenKind::semicolon)) {
        rows.push_back(row);
        row.clear();
        continue;
      }
      row.push_back(parse_signed_rational(cur));
    }
    if (!row.empty()) rows.push_back(row);
    if (rows.size() != doc_.dim)
      fail_at(errc::parse_error,
              "expected " + std::to_string(doc_.dim) + " metric rows, got " +
                  std::to_string(rows.size()),
              pos);
    for (const auto& r : rows)
      if (r.size() != doc_.dim)
        fail_at(errc::parse_error, "metric rows must have " + std::to_string(doc_.dim) + " entries",
                pos);
    doc_.metric = std::move(rows);
  }

  Rational parse_signed_rational(TokenCursor& cur) {
    bool negative = cur.accept(TokenKind::minus);
    if (!negative) cur.accept(TokenKind::plus);
    const Token& num = cur.expect(TokenKind::integer, "a rational entry");
    BigInt n(num.text);
    BigInt d(1);
    if (cur.accept(TokenKind::slash)) {
      const Token& den = cur.expect(TokenKind::integer, "a denominator");
      d = BigInt(den.text);
      if (d == 0) fail_at(errc::parse_error, "zero denominator", den.pos);
    }
    Rational r(n, d);
    return negative ? Rational(-r) : r;
  }

  void parse_xi(TokenCursor& cur, SourcePos pos) {
    require_frames(pos);
    if (!doc_.xi_name.empty())
      fail_at(errc::duplicate_directive, "xi was already declared", pos);
    const Token& name = cur.expect(TokenKind::ident, "a frame field name");
    if (!doc_.frame_index(name.text))
      fail_at(errc::undeclared_frame_field, "unknown frame field '" + name.text + "'", name.pos);
    doc_.xi_name = name.text;
    end_of_line(cur);
  }

  void parse_phi(TokenCursor& cur, SourcePos pos) {
    require_frames(pos);
    const Token& source = cur.expect(TokenKind::ident, "a frame field name");
    if (!doc_.frame_index(source.text))
      fail_at(errc::undeclared_frame_field, "unknown frame field '" + source.text + "'",
              source.pos);
    for (const PhiLine& p : doc_.phi)
      if (p.source == source.text)
        fail_at(errc::duplicate_directive, "phi for '" + source.text + "' was already declared",
                source.pos);
    cur.expect(TokenKind::arrow, "'->'");
    PhiLine line;
    line.source = source.text;
    if (cur.peek().kind == TokenKind::integer && cur.peek().text == "0") {
      cur.next();
    } else {
      line.negated = cur.accept(TokenKind::minus);
      const Token& target = cur.expect(TokenKind::ident, "a frame field name or 0");
      if (!doc_.frame_index(target.text))
        fail_at(errc::undeclared_frame_field, "unknown frame field '" + target.text + "'",
                target.pos);
      line.target = target.text;
    }
    doc_.phi.push_back(std::move(line));
    end_of_line(cur);
  }

  void parse_function(TokenCursor& cur, SourcePos pos) {
    require_coords(pos);
    const Token& name = cur.expect(TokenKind::ident, "a function name");
    check_name(name);
    if (doc_.find_function(name.text))
      fail_at(errc::duplicate_directive, "function '" + name.text + "' was already declared",
              name.pos);
    cur.expect(TokenKind::equals, "'='");
    CoeffExpr expr = parse_expression(cur);
    end_of_line(cur);
    check_expression_coords(expr, pos);
    doc_.functions.emplace_back(name.text, std::move(expr));
  }

  void require_coords(SourcePos pos) const {
    if (doc_.coords.empty())
      fail_at(errc::parse_error, "this directive requires coords to be declared first", pos);
  }

  void require_frames(SourcePos pos) const {
    if (doc_.frames.empty())
      fail_at(errc::parse_error, "this directive requires frame fields to be declared first", pos);
  }

  void check_name(const Token& name) const {
    if (name.text == "exp" || name.text == "d" || name.text == "identity")
      fail_at(errc::parse_error, "'" + name.text + "' is reserved", name.pos);
  }

  void check_expression_coords(const CoeffExpr& expr, SourcePos pos) const {
    std::set<std::string> vars;
    expr.collect_variables(vars);
    for (const std::string& v : vars)
      if (std::find(doc_.coords.begin(), doc_.coords.end(), v) == doc_.coords.end())
        fail_at(errc::undeclared_coordinate, "unknown coordinate '" + v + "'", pos);
  }

  void validate_expression_coords(const VectorLine& line, SourcePos pos) const {
    for (const DirectedTerm& t : line.terms) check_expression_coords(t.coeff, pos);
  }

  void finish() const {
    if (!have_dim_) fail_at(errc::parse_error, "missing dim directive", SourcePos{1, 1});
    if (doc_.coords.empty()) fail_at(errc::parse_error, "missing coords directive", SourcePos{1, 1});
    if (doc_.frames.empty()) fail_at(errc::parse_error, "missing frame directives", SourcePos{1, 1});
    if (doc_.xi_name.empty()) fail_at(errc::parse_error, "missing xi directive", SourcePos{1, 1});
  }

  ManifoldDocument doc_;
  bool have_dim_ = false;
  bool metric_identity_ = false;
};

}  // namespace

ManifoldDocument parse_manifold_dsl(std::string_view text) {
  return DocumentParser(text).run();
}

std::string ManifoldDocument::to_dsl() const {
  std::ostringstream os;
  os << "dim " << dim << "\n";
  os << "coords";
  for (const std::string& c : coords) os << " " << c;
  os << "\n";
  auto emit_vector = [&](const char* directive, const VectorLine& line) {
    os << directive << " " << line.name << " =";
    bool first = true;
    for (const DirectedTerm& t : line.terms) {
      os << (first ? " " : " + ") << t.coeff.str() << " d " << coords[t.coord];
      first = false;
    }
    os << "\n";
  };
  for (const VectorLine& f : frames) emit_vector("frame", f);
  if (metric) {
    os << "metric ";
    for (std::size_t i = 0; i < metric->size(); ++i) {
      if (i) os << " ; ";
      for (std::size_t j = 0; j < (*metric)[i].size(); ++j) {
        if (j) os << " ";
        os << rational_str((*metric)[i][j]);
      }
    }
    os << "\n";
  } else {
    os << "metric identity\n";
  }
  os << "xi " << xi_name << "\n";
  for (const PhiLine& p : phi) {
    os << "phi " << p.source << " -> ";
    if (!p.target)
      os << "0";
    else
      os << (p.negated ? "-" : "") << *p.target;
    os << "\n";
  }
  for (const VectorLine& v : vectors) emit_vector("vector", v);
  for (const auto& [name, expr] : functions) os << "function " << name << " = " << expr.str() << "\n";
  return os.str();
}

bool ManifoldDocument::structurally_equal(const ManifoldDocument& other) const {
  if (dim != other.dim || coords != other.coords || xi_name != other.xi_name) return false;
  auto lines_equal = [](const std::vector<VectorLine>& a, const std::vector<VectorLine>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].name != b[i].name || a[i].terms.size() != b[i].terms.size()) return false;
      for (std::size_t t = 0; t < a[i].terms.size(); ++t)
        if (a[i].terms[t].coord != b[i].terms[t].coord ||
            a[i].terms[t].coeff != b[i].terms[t].coeff)
          return false;
    }
    return true;
  };
  if (!lines_equal(frames, other.frames) || !lines_equal(vectors, other.vectors)) return false;
  if (metric.has_value() != other.metric.has_value()) return false;
  if (metric && *metric != *other.metric) return false;
  if (phi.size() != other.phi.size()) return false;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i].source != other.phi[i].source || phi[i].target != other.phi[i].target ||
        phi[i].negated != other.phi[i].negated)
      return false;
  if (functions.size() != other.functions.size()) return false;
  for (std::size_t i = 0; i < functions.size(); ++i)
    if (functions[i].first != other.functions[i].first ||
        functions[i].second != other.functions[i].second)
      return false;
  return true;
}

FramedManifold build_manifold(const ManifoldDocument& doc, bool validate) {
  std::vector<FramedManifold::FrameLeg> legs;
  std::vector<std::string> names;
  for (const VectorLine& f : doc.frames) {
    if (f.terms.size() != 1)
      fail(errc::invalid_frame,
           "frame field '" + f.name + "' must be a single scaled coordinate direction");
    legs.push_back({f.terms[0].coord, f.terms[0].coeff});
    names.push_back(f.name);
  }
  auto xi = doc.frame_index(doc.xi_name);
  if (!xi) fail(errc::undeclared_frame_field, "unknown xi field '" + doc.xi_name + "'");

  const std::size_t dim = doc.frames.size();
  RationalMatrix phi(dim, std::vector<Rational>(dim, 0));
  std::vector<bool> has_phi(dim, false);
  for (const PhiLine& p : doc.phi) {
    std::size_t source = *doc.frame_index(p.source);
    has_phi[source] = true;
    if (p.target) {
      std::size_t target = *doc.frame_index(*p.target);
      phi[target][source] = p.negated ? -1 : 1;
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (!has_phi[i])
      fail(errc::bad_phi_shape, "missing phi image for frame field '" + doc.frames[i].name + "'");

  return FramedManifold::diagonal(doc.coords, std::move(legs), *xi, std::move(phi), doc.metric,
                                  std::move(names), validate);
}

CoordinateVectorField coordinate_field(const ManifoldDocument& doc, const VectorLine& line) {
  CoordinateVectorField w(doc.coords.size());
  for (const DirectedTerm& t : line.terms)
    w.components[t.coord] = w.components[t.coord] + t.coeff;
  return w;
}

// ---------------------------------------------------------------------------
// Built-in examples

static const char* const kKenmotsu5 =
    "# 5-dimensional warped-product Kenmotsu manifold on coordinates (x,y,z,u,v).\n"
    "dim 5\n"
    "coords x y z u v\n"
    "frame e1 = exp(-1*v) d x\n"
    "frame e2 = exp(-1*v) d y\n"
    "frame e3 = exp(-1*v) d z\n"
    "frame e4 = exp(-1*v) d u\n"
    "frame e5 = 1 d v\n"
    "metric identity\n"
    "xi e5\n"
    "phi e1 -> e3\n"
    "phi e2 -> e4\n"
    "phi e3 -> -e1\n"
    "phi e4 -> -e2\n"
    "phi e5 -> 0\n"
    "vector V = x d x + y d y + z d z + u d u + 1 d v\n"
    "vector dx = 1 d x\n"
    "function f = v\n";

static const char* const kKenmotsu3 =
    "# 3-dimensional analogue of kenmotsu5.\n"
    "dim 3\n"
    "coords x y v\n"
    "frame e1 = exp(-1*v) d x\n"
    "frame e2 = exp(-1*v) d y\n"
    "frame e3 = 1 d v\n"
    "metric identity\n"
    "xi e3\n"
    "phi e1 -> e2\n"
    "phi e2 -> -e1\n"
    "phi e3 -> 0\n"
    "vector V = x d x + y d y + 1 d v\n"
    "function f = v\n";

const std::map<std::string, std::string>& builtin_manifolds() {
  static const std::map<std::string, std::string> builtins = {
      {"kenmotsu5", kKenmotsu5},
      {"kenmotsu3", kKenmotsu3},
  };
  return builtins;
}

const std::string& builtin_source(const std::string& name) {
  const auto& builtins = builtin_manifolds();
  auto it = builtins.find(name);
  if (it == builtins.end()) {
    std::string known;
    for (const auto& [key, value] : builtins) known += (known.empty() ? "" : ", ") + key;
    fail(errc::unknown_name, "no builtin manifold '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

}  // namespace kenso

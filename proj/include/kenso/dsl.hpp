#pragma once

#include "kenso/manifold.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kenso {

// Parsed form of the line-oriented manifold definition language.
//
//   dim N
//   coords NAME...
//   frame NAME = EXPR d COORD [+ EXPR d COORD ...]
//   metric identity | metric ROW ; ROW ; ...
//   xi NAME
//   phi NAME -> [-]NAME | 0
//   vector NAME = EXPR d COORD [+ ...]
//   function NAME = EXPR
//
// '#' starts a comment. dim must precede coords; coords must precede frame,
// vector and function lines; frames must precede xi and phi.
struct DirectedTerm {
  CoeffExpr coeff;
  std::size_t coord = 0;  // index into coords
};

struct VectorLine {
  std::string name;
  std::vector<DirectedTerm> terms;
};

struct PhiLine {
  std::string source;
  std::optional<std::string> target;  // absent means phi(source) = 0
  bool negated = false;
};

struct ManifoldDocument {
  std::string source;
  std::size_t dim = 0;
  std::vector<std::string> coords;
  std::vector<VectorLine> frames;
  std::optional<RationalMatrix> metric;  // absent = identity
  std::string xi_name;
  std::vector<PhiLine> phi;
  std::vector<VectorLine> vectors;
  std::vector<std::pair<std::string, CoeffExpr>> functions;

  // Canonical re-emission of the parsed directives; reparsing the output
  // yields a structurally identical document.
  std::string to_dsl() const;
  bool structurally_equal(const ManifoldDocument& other) const;

  std::optional<std::size_t> frame_index(const std::string& name) const;
  const VectorLine* find_vector(const std::string& name) const;
  const CoeffExpr* find_function(const std::string& name) const;
};

ManifoldDocument parse_manifold_dsl(std::string_view text);

FramedManifold build_manifold(const ManifoldDocument& doc, bool validate = true);

CoordinateVectorField coordinate_field(const ManifoldDocument& doc, const VectorLine& line);

// Shipped example manifolds, stored as definition-language source so the
// parser runs on every use.
const std::map<std::string, std::string>& builtin_manifolds();
const std::string& builtin_source(const std::string& name);  // throws UnknownName

}  // namespace kenso

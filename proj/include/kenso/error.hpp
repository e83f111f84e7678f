#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace kenso {

// Machine-readable failure kinds shared by the C++ core and the C API.
enum class errc {
  // coefficient algebra
  not_a_unit,
  zero_element,
  missing_coordinate,
  // manifold construction
  even_dimension,
  non_unit_frame_scale,
  xi_not_unit,
  bad_phi_shape,
  invalid_frame,
  bad_metric,
  structure_only_frame,
  // curvature
  not_kenmotsu,
  // soliton analysis
  non_constant_k,
  unknown_lambda,
  non_constant_scalar_curvature,
  not_nowhere_vanishing,
  // manifold definition language
  parse_error,
  duplicate_directive,
  undeclared_coordinate,
  undeclared_frame_field,
  // misc
  invalid_argument,
  unknown_name,
};

const char* errc_name(errc code);

// 1-based position inside a manifold definition document.
struct SourcePos {
  int line = 0;
  int column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  Error(errc code, const std::string& message, SourcePos pos);

  errc code() const { return code_; }
  const std::optional<SourcePos>& pos() const { return pos_; }

 private:
  errc code_;
  std::optional<SourcePos> pos_;
};

[[noreturn]] void fail(errc code, const std::string& message);
[[noreturn]] void fail_at(errc code, const std::string& message, SourcePos pos);

}  // namespace kenso

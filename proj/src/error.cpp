#include "kenso/error.hpp"

namespace kenso {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_a_unit: return "NotAUnit";
    case errc::zero_element: return "ZeroElement";
    case errc::missing_coordinate: return "MissingCoordinate";
    case errc::even_dimension: return "EvenDimension";
    case errc::non_unit_frame_scale: return "NonUnitFrameScale";
    case errc::xi_not_unit: return "XiNotUnit";
    case errc::bad_phi_shape: return "BadPhiShape";
    case errc::invalid_frame: return "InvalidFrame";
    case errc::bad_metric: return "BadMetric";
    case errc::structure_only_frame: return "StructureOnlyFrame";
    case errc::not_kenmotsu: return "NotKenmotsu";
    case errc::non_constant_k: return "NonConstantK";
    case errc::unknown_lambda: return "UnknownLambda";
    case errc::non_constant_scalar_curvature: return "NonConstantScalarCurvature";
    case errc::not_nowhere_vanishing: return "NotNowhereVanishing";
    case errc::parse_error: return "ParseError";
    case errc::duplicate_directive: return "DuplicateDirective";
    case errc::undeclared_coordinate: return "UndeclaredCoordinate";
    case errc::undeclared_frame_field: return "UndeclaredFrameField";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::unknown_name: return "UnknownName";
  }
  return "UnknownError";
}

static std::string decorate(errc code, const std::string& message) {
  return std::string(errc_name(code)) + ": " + message;
}

static std::string decorate(errc code, const std::string& message, SourcePos pos) {
  return std::string(errc_name(code)) + " at line " + std::to_string(pos.line) +
         ", column " + std::to_string(pos.column) + ": " + message;
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(decorate(code, message)), code_(code) {}

Error::Error(errc code, const std::string& message, SourcePos pos)
    : std::runtime_error(decorate(code, message, pos)), code_(code), pos_(pos) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

void fail_at(errc code, const std::string& message, SourcePos pos) {
  throw Error(code, message, pos);
}

}  // namespace kenso

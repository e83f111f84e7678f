#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kenso {

// Exact scalar types. Every constant in the engine (metric entries, phi
// entries, soliton parameters, fitted lambdas) is a Rational; BigFloat only
// appears in numeric spot checks of reports and never feeds back into
// symbolic results.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_dec_float_100;

std::string rational_str(const Rational& r);
Rational rational_pow(const Rational& base, std::uint64_t exp);

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t dim);
bool matrix_is_symmetric(const RationalMatrix& m);
bool matrix_is_positive_definite(const RationalMatrix& m);
// Throws errc::bad_metric when the matrix is singular.
RationalMatrix matrix_inverse(const RationalMatrix& m);

}  // namespace kenso

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tlg {

/// Exact rational scalar used wherever a result is an algebraic identity
/// (APV formulas, eigen-identity checks, inverse design). Long matrix
/// products use doubles instead; see stoch.hpp.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q" or a plain integer "p".
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

std::vector<double> to_doubles(const std::vector<Rational>& v);

}  // namespace tlg

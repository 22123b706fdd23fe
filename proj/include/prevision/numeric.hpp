#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace prevision {

/// Exact rational scalar used throughout the coherence engine.
using Rational = boost::multiprecision::mpq_rational;

/// High-precision float for the generic Frank family (never an Eigen scalar).
using Float50 = boost::multiprecision::cpp_bin_float_50;

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "p/q", "p", or a plain decimal ("0.35", "-1.5", ".5") into an
/// exact rational. Throws InputError on anything else (including exponents
/// and zero denominators).
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_string(const Rational& value);

double to_double(const Rational& value);
Float50 to_float50(const Rational& value);

}  // namespace prevision

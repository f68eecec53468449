#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace primcover {

/// Exact ratios (fixed point ratios, rho values). Always kept in lowest terms
/// with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Renders as "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& r);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// Largest integer not exceeding r.
std::int64_t floor(const Rational& r);

}  // namespace primcover

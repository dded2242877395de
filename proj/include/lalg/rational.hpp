#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lalg {

/// Exact probability value. Measures stay rational until an entropy term is
/// evaluated.
using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or an integer string. Throws StructuralError on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace lalg

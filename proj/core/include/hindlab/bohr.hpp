#pragma once

// Bohr sets {n : frac(n * alpha) in [a, b)} on the one-dimensional torus.
//
// alpha is either an exact rational or a decimal approximation of a real. In
// the decimal case the true value is only known to lie within half a unit of
// the last given digit, so frac(n * alpha) is known up to |n| times that
// radius; bohr_set throws Errc::precision_loss when that uncertainty reaches
// an arc endpoint for some n in the window.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hindlab/intset.hpp"

namespace hindlab {

using BigRational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal such as "-0.618".
[[nodiscard]] BigRational parse_rational(std::string_view text);

struct Rotation {
  BigRational alpha;
  BigRational radius;  ///< uncertainty of alpha; zero for exact values

  static Rotation exact(BigRational value) { return {std::move(value), 0}; }
  /// Decimal approximation: radius is half a unit in the last digit given.
  static Rotation from_decimal(std::string_view text);
};

/// Half-open arc [lo, hi) with 0 <= lo < hi <= 1.
struct Arc {
  BigRational lo;
  BigRational hi;
};

[[nodiscard]] WindowedSet bohr_set(const Rotation& rotation, const Arc& arc, std::int64_t lo,
                                   std::int64_t hi);

}  // namespace hindlab

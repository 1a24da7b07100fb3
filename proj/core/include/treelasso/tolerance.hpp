#pragma once

#include <algorithm>
#include <cmath>

namespace treelasso {

/// Relative tolerance used for every floating point comparison of distances.
/// Two values a, b are equal when |a - b| <= epsilon * max(1, |a|, |b|).
struct Tolerance {
  static constexpr double kDefaultEpsilon = 1e-9;

  double epsilon = kDefaultEpsilon;

  double scale(double a, double b) const {
    return epsilon * std::max({1.0, std::abs(a), std::abs(b)});
  }
  bool equal(double a, double b) const { return std::abs(a - b) <= scale(a, b); }
  /// a < b by more than the tolerance.
  bool less(double a, double b) const { return b - a > scale(a, b); }

  /// Reads LASSO_EPSILON; falls back to the default when unset. A set but
  /// unparsable or non-positive value throws InputError.
  static Tolerance from_environment();
};

}  // namespace treelasso

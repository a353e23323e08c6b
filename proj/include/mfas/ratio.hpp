#pragma once

#include <compare>
#include <string>

#include "mfas/types.hpp"

namespace mfas {

/// Non-negative fraction compared by cross-multiplication.
///
/// A zero numerator orders as 0 whatever the denominator; a positive
/// numerator over a zero denominator orders as +infinity.
struct ExactRatio {
  Count numerator = 0;
  Count denominator = 1;

  bool is_zero() const { return numerator == 0; }
  bool is_infinite() const { return numerator != 0 && denominator == 0; }

  /// (m - 2) * numerator <= denominator, i.e. ratio <= 1/(m-2).
  bool within_bound(int m) const {
    return static_cast<WideCount>(m - 2) * numerator <= denominator;
  }

  std::string str() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }

  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    const int ca = a.is_zero() ? 0 : (a.is_infinite() ? 2 : 1);
    const int cb = b.is_zero() ? 0 : (b.is_infinite() ? 2 : 1);
    if (ca != cb || ca != 1) return ca <=> cb;
    const WideCount lhs = static_cast<WideCount>(a.numerator) * b.denominator;
    const WideCount rhs = static_cast<WideCount>(b.numerator) * a.denominator;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return (a <=> b) == 0; }
};

}  // namespace mfas

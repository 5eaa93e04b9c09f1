#pragma once

#include <cmath>

#include "drwedge/rational.hpp"

namespace drwedge {

/// sin(pi*x) for exact rational x. Half-integer multiples produce exact
/// 0.0 / +-1.0; all other arguments are reduced modulo 2 before a single
/// float sin call, so there is no precision loss for large x.
double sin_pi(const Rational& x);
double cos_pi(const Rational& x);

/// sin/cos of (base + n*pi/2) by quarter-turn lookup from one evaluation of
/// the base angle. Exact zeros in the base survive the lookup, which is what
/// keeps structurally zero matrix entries exactly 0.0 in assembled systems.
struct QuarterPhase {
  double s{0.0};  // sin(base)
  double c{1.0};  // cos(base)

  static QuarterPhase of_pi(const Rational& x) { return {sin_pi(x), cos_pi(x)}; }
  static QuarterPhase of(double radians) {
    return {std::sin(radians), std::cos(radians)};
  }

  double sin_at(int quarter_turns) const {
    switch (quarter_turns & 3) {
      case 0: return s;
      case 1: return c;
      case 2: return -s;
      default: return -c;
    }
  }
  double cos_at(int quarter_turns) const {
    switch (quarter_turns & 3) {
      case 0: return c;
      case 1: return -s;
      case 2: return -c;
      default: return s;
    }
  }
};

}  // namespace drwedge

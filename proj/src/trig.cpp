#include "drwedge/trig.hpp"

#include <numbers>

namespace drwedge {

namespace {

// sin(pi * t) for t in [0, 2), folded into [0, 1/2] before the float call.
double sin_pi_reduced(const Rational& t) {
  if (t.is_integer()) return 0.0;            // t in {0, 1}
  if (t.is_half_integer()) {                 // t in {1/2, 3/2}
    return t.num() == 1 ? 1.0 : -1.0;
  }
  double sign = 1.0;
  Rational u = t;
  if (u > Rational(1)) {                     // fold [1,2) onto [0,1)
    u -= Rational(1);
    sign = -1.0;
  }
  if (u > Rational(1, 2)) {                  // fold (1/2,1) onto (0,1/2)
    u = Rational(1) - u;
  }
  return sign * std::sin(std::numbers::pi * u.to_double());
}

}  // namespace

double sin_pi(const Rational& x) { return sin_pi_reduced(x.mod(2)); }

double cos_pi(const Rational& x) {
  return sin_pi_reduced((x + Rational(1, 2)).mod(2));
}

}  // namespace drwedge

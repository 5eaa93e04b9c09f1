#include "drwedge/config.hpp"

#include <numbers>
#include <stdexcept>

namespace drwedge {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(Approach a) {
  switch (a) {
    case Approach::DN: return "dn";
    case Approach::DD: return "dd";
    default: return "closed_form_alpha_minus1";
  }
}

AngleSpec AngleSpec::exact(const Rational& omega_over_pi) {
  if (omega_over_pi <= Rational(0) || omega_over_pi > Rational(2)) {
    throw std::invalid_argument("omega/pi must lie in (0, 2]");
  }
  AngleSpec a;
  a.over_pi_ = omega_over_pi;
  a.radians_ = omega_over_pi.to_double() * kPi;
  return a;
}

AngleSpec AngleSpec::declared_irrational(double omega) {
  if (!(omega > 0.0) || omega > 2.0 * kPi) {
    throw std::invalid_argument("omega must lie in (0, 2*pi]");
  }
  AngleSpec a;
  a.radians_ = omega;
  return a;
}

const Rational& AngleSpec::over_pi() const {
  if (!over_pi_) throw std::logic_error("angle is declared irrational");
  return *over_pi_;
}

AlphaSpec AlphaSpec::exact(const Rational& alpha) {
  AlphaSpec s;
  s.exact_ = alpha;
  s.value_ = alpha.to_double();
  return s;
}

AlphaSpec AlphaSpec::declared_irrational(double alpha) {
  AlphaSpec s;
  s.value_ = alpha;
  return s;
}

const Rational& AlphaSpec::exact_value() const {
  if (!exact_) throw std::logic_error("alpha is declared irrational");
  return *exact_;
}

CornerConfig::CornerConfig(AngleSpec angle_, AlphaSpec alpha_, double gamma_,
                           Approach approach_)
    : angle(angle_), alpha(alpha_), gamma(gamma_), approach(approach_) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (approach == Approach::ClosedFormAlphaMinus1 && !alpha.is_minus_one()) {
    throw std::invalid_argument(
        "the closed-form approach requires alpha = -1 exactly");
  }
}

ExactOrIrrational CornerConfig::rho() const {
  if (alpha.is_minus_one()) return {Rational(0), 0.0};
  if (angle.is_exact() && alpha.is_exact()) {
    Rational r = angle.over_pi() * (alpha.exact_value() + Rational(1));
    return {r, r.to_double()};
  }
  return {std::nullopt, angle.radians() / kPi * (alpha.value() + 1.0)};
}

double CornerConfig::lambda(int j) const {
  double w = angle.radians();
  if (approach == Approach::DD) return j * kPi / w;
  return (2.0 * j - 1.0) * kPi / (2.0 * w);
}

double CornerConfig::exponent(int j, int k) const {
  ExactOrIrrational x = scaled_exponent(j, k);
  // Divide exactly before rounding; a vanishing shift must come out as an
  // exact 0.0 or the augmented systems lose their zero borders.
  if (x.is_exact() && angle.is_exact()) {
    return (*x.exact / angle.over_pi()).to_double();
  }
  double shift = k * (alpha.value() + 1.0);
  return approach == Approach::DD ? lambda(j) - shift : lambda(j) + shift;
}

ExactOrIrrational CornerConfig::scaled_exponent(int j, int k) const {
  ExactOrIrrational r = rho();
  if (r.is_exact() && angle.is_exact()) {
    Rational base = approach == Approach::DD
                        ? Rational(j) - Rational(k) * *r.exact
                        : Rational(2 * j - 1, 2) + Rational(k) * *r.exact;
    return {base, base.to_double()};
  }
  double shift = k * (alpha.value() + 1.0);
  double lam = approach == Approach::DD ? lambda(j) - shift : lambda(j) + shift;
  return {std::nullopt, lam * angle.radians() / kPi};
}

}  // namespace drwedge

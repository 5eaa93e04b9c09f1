#pragma once

#include <optional>

#include "drwedge/rational.hpp"

namespace drwedge {

/// Which auxiliary corner problem generates the recursion: Dirichlet-Neumann
/// (natural for alpha > -1), Dirichlet-Dirichlet (natural for alpha < -1),
/// or the transcendental closed form reserved for alpha = -1.
enum class Approach { DN, DD, ClosedFormAlphaMinus1 };

const char* to_string(Approach a);

/// A value that is either an exact rational or declared irrational by the
/// caller. Rationality is an input property here: it branches the whole
/// series classification and can never be inferred from a float.
struct ExactOrIrrational {
  std::optional<Rational> exact;  // nullopt == irrational marker
  double value{};                 // numeric value in both cases

  bool is_exact() const { return exact.has_value(); }
};

/// Inner angle of the sector, 0 < omega <= 2*pi, either an exact rational
/// multiple of pi or a declared-irrational number of radians.
class AngleSpec {
 public:
  static AngleSpec exact(const Rational& omega_over_pi);
  static AngleSpec declared_irrational(double omega);

  bool is_exact() const { return over_pi_.has_value(); }
  const Rational& over_pi() const;
  double radians() const { return radians_; }

 private:
  AngleSpec() = default;
  std::optional<Rational> over_pi_;
  double radians_{};
};

/// Exponent of the power-law Robin coefficient gamma * r^alpha.
class AlphaSpec {
 public:
  static AlphaSpec exact(const Rational& alpha);
  static AlphaSpec declared_irrational(double alpha);

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact_value() const;
  double value() const { return value_; }
  bool is_minus_one() const { return is_exact() && exact_value() == Rational(-1); }

 private:
  AlphaSpec() = default;
  std::optional<Rational> exact_;
  double value_{};
};

/// Full parameter set of one Dirichlet-Robin corner problem: u = 0 on the
/// theta = 0 side, (1/r) du/dtheta + gamma r^alpha u = 0 on theta = omega.
struct CornerConfig {
  AngleSpec angle;
  AlphaSpec alpha;
  double gamma{1.0};
  Approach approach{Approach::DN};

  CornerConfig(AngleSpec angle, AlphaSpec alpha, double gamma, Approach approach);

  /// rho = (omega/pi)(alpha+1), the single quantity whose rationality and
  /// parity decomposition drive every structural decision. Exact whenever
  /// both inputs are exact, and also when alpha = -1 (rho = 0 regardless of
  /// the angle). A rational product of two declared irrationals cannot be
  /// detected; such callers must supply exact inputs instead.
  ExactOrIrrational rho() const;

  /// Main-term eigenvalue: (2j-1)pi/(2 omega) for D-N, j pi/omega for D-D.
  double lambda(int j) const;

  /// Exponent of the k-th term, lambda_j + k(alpha+1) (D-N) or
  /// lambda_j - k(alpha+1) (D-D).
  double exponent(int j, int k) const;

  /// The same exponent scaled by omega/pi: (2j-1)/2 +- k*rho (D-N/D-D).
  /// All zero tests and sign tests happen on this quantity.
  ExactOrIrrational scaled_exponent(int j, int k) const;
};

}  // namespace drwedge

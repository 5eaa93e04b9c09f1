#pragma once

#include "drwedge/eval.hpp"
#include "drwedge/series.hpp"

namespace drwedge {

/// Tip-neighborhood energy of a truncated eigensolution on the sector of
/// radius R: value = (1/2)*bulk + gamma*boundary with
///   bulk     = integral over the sector of r u_r^2 + (1/r) u_theta^2,
///   boundary = integral of r^(alpha+1) |u(r, omega)|^2 along the Robin side.
/// eps_used = 0 means the analytic eps -> 0 limit was taken (every surviving
/// antiderivative exponent is positive, so the lower end contributes nothing).
struct EnergyResult {
  double value{};
  double bulk{};
  double boundary{};
  double eps_used{};
};

/// Antiderivative of r^a log^n(r), evaluated at r. The a = -1 case (tested
/// as an exact double) integrates to log^(n+1)(r)/(n+1); otherwise repeated
/// integration by parts gives a finite sum in log powers.
double radial_antiderivative(double a, int n, double r);

struct PairEnergy {
  double bulk{};
  double boundary{};
};

/// Cross energy of two terms: angular Gauss-Legendre quadrature times
/// closed-form radial integrals of the r^a log^n monomials between eps and R.
/// Arguments commute exactly (the pair is canonicalized internally).
/// eps = 0 takes the analytic limit and throws std::domain_error if any
/// surviving monomial diverges there.
PairEnergy term_pair_energy(const ShadowTerm& t1, const ShadowTerm& t2,
                            const CornerConfig& config, double R, double eps,
                            int angular_nodes = 64);

enum class EnergyFiniteness { Finite, Infinite };

/// Exact finiteness test. Finite series are checked term by term: the bulk
/// integrals need every exponent positive, the boundary integral needs
/// 2*exponent + alpha + 2 positive except for terms whose Robin-side trace
/// vanishes identically. Regimes with infinitely many terms of decreasing
/// exponent are infinite outright.
EnergyFiniteness energy_finite(const AsymptoticSeries& series);

/// Sum of term_pair_energy over all ordered term pairs.
/// Throws std::domain_error for eps = 0 on an energy-infinite series.
EnergyResult series_energy(const AsymptoticSeries& series, double R,
                           double eps, int angular_nodes = 64);

}  // namespace drwedge

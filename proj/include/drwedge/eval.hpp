#pragma once

#include <span>
#include <utility>

#include "drwedge/series.hpp"

namespace drwedge {

/// Value and polar gradient components of an eigensolution at one point.
/// On the Dirichlet side (theta = 0) u and u_r vanish exactly by
/// construction, not by rounding.
struct PointEval {
  double u{};
  double u_r{};
  double u_theta_over_r{};  // (1/r) du/dtheta
};

/// Angular profile of one term per log power: u^(k)(r, theta) =
/// r^b * sum_m log^m(r) * value[m](theta), and the same decomposition of
/// (1/r) du/dtheta without the r^(b-1) factor in dtheta[m].
struct AngularProfile {
  Eigen::VectorXd value;   // A_m(theta), m = 0..L
  Eigen::VectorXd dtheta;  // A'_m(theta)
};

/// Profiles at an arbitrary angle (float trig).
AngularProfile angular_profile(const ShadowTerm& term, double theta);

/// Profiles on the Robin side theta = omega. For exact configurations the
/// angular phase b*omega is a rational multiple of pi and identically
/// vanishing traces come out as exact zeros, which the error and energy
/// formulas rely on.
AngularProfile boundary_profile(const ShadowTerm& term,
                                const CornerConfig& config);

double eval_term(const ShadowTerm& term, double r, double theta);
/// (du/dr, (1/r) du/dtheta) of one term.
std::pair<double, double> grad_term(const ShadowTerm& term, double r,
                                    double theta);

/// Sum over all stored terms. r = 0 is allowed as a limit when the smallest
/// exponent is positive (gradients additionally need it > 1); otherwise the
/// point is singular and a std::domain_error is thrown.
PointEval eval_series(const AsymptoticSeries& series, double r, double theta);

/// Residual of the Robin condition left by the truncated series, via the
/// telescoped closed form: gamma r^alpha u^(S)(r, omega) for D-N,
/// (1/r) d u^(S)/dtheta (r, omega) for D-D. For a closed-form series this is
/// the directly evaluated Robin residual of its single term.
double abs_error(const AsymptoticSeries& series, double r);

/// Relative Robin residual: -(last-term contribution) / (whole-series
/// contribution) on theta = omega. Throws when the denominator underflows.
double rel_error(const AsymptoticSeries& series, double r);

/// Max over the given interior points of |five-point FD Laplacian| * r^2,
/// scaled by the largest |u| over the same points. Second order: halving h
/// divides the result by about four wherever truncation error dominates.
double harmonicity_check(const AsymptoticSeries& series,
                         std::span<const std::pair<double, double>> points,
                         double h);

}  // namespace drwedge

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "drwedge/series.hpp"

namespace drwedge::testing {

inline CornerConfig exact_config(const char* omega_pi, const char* alpha,
                                 Approach approach, double gamma = 1.0) {
  return CornerConfig(AngleSpec::exact(Rational::parse(omega_pi)),
                      AlphaSpec::exact(Rational::parse(alpha)), gamma, approach);
}

// Magnitude scale of the Robin residual at radius r: the residual sums a
// gradient piece (1/r) du/dtheta and a weighted trace gamma r^alpha u per
// term, so its floating-point noise floor is epsilon times the sum of both
// families of magnitudes, not of their (possibly cancelling) total.
double robin_scale(const AsymptoticSeries& s, double r);

// Adaptive Simpson on [a, b].
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol, int depth = 28) {
  std::function<double(double, double, double, double, double, double, int)> go =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole,
          int d) -> double {
    double mid = 0.5 * (lo + hi);
    double lm = f(0.5 * (lo + mid));
    double rm = f(0.5 * (mid + hi));
    double left = (mid - lo) / 6.0 * (flo + 4.0 * lm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * rm + fhi);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
      return left + right + (left + right - whole) / 15.0;
    }
    return go(lo, mid, flo, lm, fmid, left, d - 1) +
           go(mid, hi, fmid, rm, fhi, right, d - 1);
  };
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return go(a, b, fa, fm, fb, whole, depth);
}

// Coarse magnitude bound of one term (and its first derivatives, up to a
// factor) at radius r, for building relative tolerances.
inline double term_abs_scale(const ShadowTerm& t, double r, double omega) {
  const double lr = std::abs(std::log(r));
  double base = 0.0;
  double f = 1.0;
  for (int l = 0; l <= t.log_degree(); ++l) {
    base += std::abs(t.coeffs(l)) * f;
    f *= 2.0 * (omega + lr + 1.0);
  }
  return std::pow(r, t.exponent) * base *
         (std::abs(t.exponent) + t.log_degree() + 1.0);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eedu);
  return gen;
}

inline double robin_scale(const AsymptoticSeries& s, double r) {
  const double w = s.config.angle.radians();
  double sum = 0.0;
  for (const auto& t : s.terms) {
    double m = term_abs_scale(t, r, w);
    sum += m / r + s.config.gamma * std::pow(r, s.config.alpha.value()) * m;
  }
  return sum + 1e-300;
}

}  // namespace drwedge::testing

#include "drwedge/eval.hpp"

namespace drwedge::testing {

// Independent energy oracle built on point evaluation only: nested adaptive
// Simpson over theta and over t after the substitution r = R e^(-t), which
// removes the integrable endpoint behavior at the origin. Returns
// (1/2)*bulk + gamma*boundary like the production path, at ~1e-9 accuracy.
inline double oracle_energy_value(const AsymptoticSeries& series, double R,
                                  double eps) {
  const CornerConfig& cfg = series.config;
  const double w = cfg.angle.radians();
  const double lo = eps > 0.0 ? eps : R * 1e-26;
  const double T = std::log(R / lo);

  auto grad_density = [&](double r) {
    auto f = [&](double th) {
      PointEval p = eval_series(series, r, th);
      return r * (p.u_r * p.u_r + p.u_theta_over_r * p.u_theta_over_r);
    };
    double rough = (std::abs(f(0.25 * w)) + std::abs(f(0.5 * w)) +
                    std::abs(f(0.85 * w))) * w;
    return adaptive_simpson(f, 0.0, w, 1e-13 * (1.0 + rough));
  };
  auto boundary_density = [&](double r) {
    PointEval p = eval_series(series, r, w);
    return std::pow(r, cfg.alpha.value() + 1.0) * p.u * p.u;
  };

  auto bulk_t = [&](double t) {
    double r = R * std::exp(-t);
    return grad_density(r) * r;
  };
  auto bnd_t = [&](double t) {
    double r = R * std::exp(-t);
    return boundary_density(r) * r;
  };
  double rough_bulk = (std::abs(bulk_t(0.1)) + std::abs(bulk_t(1.0))) * T;
  double rough_bnd = (std::abs(bnd_t(0.1)) + std::abs(bnd_t(1.0))) * T;
  double bulk = adaptive_simpson(bulk_t, 0.0, T, 1e-12 * (1.0 + rough_bulk));
  double boundary = adaptive_simpson(bnd_t, 0.0, T, 1e-12 * (1.0 + rough_bnd));
  return 0.5 * bulk + cfg.gamma * boundary;
}

}  // namespace drwedge::testing

#include "drwedge/eval.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "drwedge/trig.hpp"

namespace drwedge {

namespace {

double binom(int l, int m) {
  double b = 1.0;
  for (int i = 0; i < m; ++i) b = b * (l - i) / (i + 1);
  return b;
}

AngularProfile profile_from_phase(const ShadowTerm& term, double theta,
                                  const QuarterPhase& ph) {
  const int L = term.log_degree();
  AngularProfile p;
  p.value = Eigen::VectorXd::Zero(L + 1);
  p.dtheta = Eigen::VectorXd::Zero(L + 1);

  // theta powers built iteratively so theta = 0 stays exact.
  std::vector<double> tp(L + 1, 1.0);
  for (int i = 1; i <= L; ++i) tp[i] = tp[i - 1] * theta;

  const double b = term.exponent;
  for (int m = 0; m <= L; ++m) {
    for (int l = m; l <= L; ++l) {
      const int d = l - m;
      const double c = term.coeffs(l) * binom(l, m);
      p.value(m) += c * tp[d] * ph.sin_at(d);
      p.dtheta(m) += c * (b * tp[d] * ph.cos_at(d) +
                          (d > 0 ? d * tp[d - 1] * ph.sin_at(d) : 0.0));
    }
  }
  return p;
}

// log powers of r, 0..L.
std::vector<double> log_powers(double r, int L) {
  std::vector<double> lp(L + 1, 1.0);
  if (L > 0) {
    const double lr = std::log(r);
    for (int i = 1; i <= L; ++i) lp[i] = lp[i - 1] * lr;
  }
  return lp;
}

double robin_denominator(const AsymptoticSeries& series, double r,
                         std::vector<AngularProfile> const& traces) {
  // D-N: gamma r^alpha u(r, omega); D-D: (1/r) du/dtheta (r, omega).
  const bool dd = series.config.approach == Approach::DD;
  double den = 0.0;
  for (std::size_t i = 0; i < series.terms.size(); ++i) {
    const auto& t = series.terms[i];
    const auto lp = log_powers(r, t.log_degree());
    double s = 0.0;
    for (int m = 0; m <= t.log_degree(); ++m) {
      s += lp[m] * (dd ? traces[i].dtheta(m) : traces[i].value(m));
    }
    den += std::pow(r, dd ? t.exponent - 1.0 : t.exponent) * s;
  }
  if (!dd) den *= series.config.gamma * std::pow(r, series.config.alpha.value());
  return den;
}

}  // namespace

AngularProfile angular_profile(const ShadowTerm& term, double theta) {
  return profile_from_phase(term, theta,
                            QuarterPhase::of(term.exponent * theta));
}

AngularProfile boundary_profile(const ShadowTerm& term,
                                const CornerConfig& config) {
  const double w = config.angle.radians();
  // b*omega = pi * scaled_exponent: go through the exact rational when we
  // have it so that mathematically zero traces are zero in the doubles too.
  QuarterPhase ph = term.scaled_exponent
                        ? QuarterPhase::of_pi(*term.scaled_exponent)
                        : QuarterPhase::of(term.exponent * w);
  return profile_from_phase(term, w, ph);
}

double eval_term(const ShadowTerm& term, double r, double theta) {
  if (!(r > 0.0)) throw std::domain_error("eval_term needs r > 0");
  AngularProfile p = angular_profile(term, theta);
  const auto lp = log_powers(r, term.log_degree());
  double s = 0.0;
  for (int m = 0; m <= term.log_degree(); ++m) s += lp[m] * p.value(m);
  return std::pow(r, term.exponent) * s;
}

std::pair<double, double> grad_term(const ShadowTerm& term, double r,
                                    double theta) {
  if (!(r > 0.0)) throw std::domain_error("grad_term needs r > 0");
  AngularProfile p = angular_profile(term, theta);
  const int L = term.log_degree();
  const auto lp = log_powers(r, L);
  const double b = term.exponent;
  double ur = 0.0;
  double ut = 0.0;
  for (int m = 0; m <= L; ++m) {
    // d/dr (r^b log^m r) = r^(b-1) (b log^m r + m log^(m-1) r)
    double radial = b * p.value(m) + (m < L ? (m + 1) * p.value(m + 1) : 0.0);
    ur += lp[m] * radial;
    ut += lp[m] * p.dtheta(m);
  }
  const double rpow = std::pow(r, b - 1.0);
  return {rpow * ur, rpow * ut};
}

PointEval eval_series(const AsymptoticSeries& series, double r, double theta) {
  if (series.terms.empty()) throw std::domain_error("empty series");
  if (r == 0.0) {
    const double mn = series.min_exponent();
    if (!(mn > 0.0)) {
      throw std::domain_error("series is singular at the origin");
    }
    if (!(mn > 1.0)) {
      throw std::domain_error(
          "gradient at the origin needs every exponent above 1");
    }
    return {0.0, 0.0, 0.0};
  }
  if (!(r > 0.0)) throw std::domain_error("r must be nonnegative");

  PointEval out;
  for (const auto& t : series.terms) {
    out.u += eval_term(t, r, theta);
    auto [ur, ut] = grad_term(t, r, theta);
    out.u_r += ur;
    out.u_theta_over_r += ut;
  }
  return out;
}

double abs_error(const AsymptoticSeries& series, double r) {
  if (series.terms.empty()) throw std::domain_error("empty series");
  if (!(r > 0.0)) throw std::domain_error("abs_error needs r > 0");
  const auto& cfg = series.config;
  const auto& last = series.terms.back();
  AngularProfile tr = boundary_profile(last, cfg);
  const auto lp = log_powers(r, last.log_degree());

  if (cfg.approach == Approach::ClosedFormAlphaMinus1) {
    // Single exact term; the residual is whatever the root solve left over.
    double s = tr.dtheta(0) + cfg.gamma * tr.value(0);
    return std::pow(r, last.exponent - 1.0) * s;
  }
  if (cfg.approach == Approach::DD) {
    double s = 0.0;
    for (int m = 0; m <= last.log_degree(); ++m) s += lp[m] * tr.dtheta(m);
    return std::pow(r, last.exponent - 1.0) * s;
  }
  double s = 0.0;
  for (int m = 0; m <= last.log_degree(); ++m) s += lp[m] * tr.value(m);
  return cfg.gamma * std::pow(r, last.exponent + cfg.alpha.value()) * s;
}

double rel_error(const AsymptoticSeries& series, double r) {
  if (series.terms.empty()) throw std::domain_error("empty series");
  if (!(r > 0.0)) throw std::domain_error("rel_error needs r > 0");
  const auto& cfg = series.config;
  if (cfg.approach == Approach::ClosedFormAlphaMinus1) {
    throw std::domain_error("relative error is not defined for the closed form");
  }
  std::vector<AngularProfile> traces;
  traces.reserve(series.terms.size());
  for (const auto& t : series.terms) {
    traces.push_back(boundary_profile(t, cfg));
  }
  const double den = robin_denominator(series, r, traces);
  if (std::abs(den) < 1e-300) {
    throw std::domain_error("relative error undefined at this r");
  }
  return -abs_error(series, r) / den;
}

double harmonicity_check(const AsymptoticSeries& series,
                         std::span<const std::pair<double, double>> points,
                         double h) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");

  // Evaluate at a Cartesian offset, unwrapping atan2 toward the reference
  // angle so wedges wider than pi do not fold across the branch cut.
  auto value_at = [&](double x, double y, double theta_ref) {
    double rr = std::hypot(x, y);
    double th = std::atan2(y, x);
    if (th < theta_ref - 3.0) th += 2.0 * std::numbers::pi;
    if (th > theta_ref + 3.0) th -= 2.0 * std::numbers::pi;
    double u = 0.0;
    for (const auto& t : series.terms) u += eval_term(t, rr, th);
    return u;
  };

  double scale = 0.0;
  std::vector<double> residuals;
  residuals.reserve(points.size());
  for (const auto& [r, theta] : points) {
    const double x = r * std::cos(theta);
    const double y = r * std::sin(theta);
    const double uc = value_at(x, y, theta);
    const double lap = (value_at(x + h, y, theta) + value_at(x - h, y, theta) +
                        value_at(x, y + h, theta) + value_at(x, y - h, theta) -
                        4.0 * uc) /
                       (h * h);
    residuals.push_back(std::abs(lap) * r * r);
    scale = std::max(scale, std::abs(uc));
  }
  if (scale < 1e-100) scale = 1.0;  // identically zero input: report raw
  double worst = 0.0;
  for (double res : residuals) worst = std::max(worst, res / scale);
  return worst;
}

}  // namespace drwedge

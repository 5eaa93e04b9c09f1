#include "drwedge/robin_root.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace drwedge {

namespace {
constexpr double kPi = std::numbers::pi;
}

RobinEigenvalue lambda_robin(int j, double omega, double gamma) {
  if (j < 1) throw std::invalid_argument("j must be a positive integer");
  if (!(omega > 0.0) || omega > 2.0 * kPi) {
    throw std::invalid_argument("omega must lie in (0, 2*pi]");
  }
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");

  auto f = [&](double lam) {
    return gamma * std::sin(lam * omega) + lam * std::cos(lam * omega);
  };
  auto fp = [&](double lam) {
    return (gamma * omega + 1.0) * std::cos(lam * omega) -
           lam * omega * std::sin(lam * omega);
  };

  double lo = (2.0 * j - 1.0) * kPi / (2.0 * omega);
  double hi = j * kPi / omega;
  // f(lo) = gamma*(-1)^(j-1), f(hi) = (j pi/omega)*(-1)^j: signs known.
  double flo = (j % 2 == 1) ? gamma : -gamma;

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) break;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  // One Newton polish inside the bracket.
  double lam = 0.5 * (lo + hi);
  double d = fp(lam);
  if (d != 0.0) {
    double step = f(lam) / d;
    double cand = lam - step;
    if (cand > (2.0 * j - 1.0) * kPi / (2.0 * omega) && cand < j * kPi / omega) {
      lam = cand;
    }
  }

  RobinEigenvalue out{j, lam, gamma, omega, std::abs(f(lam))};
  if (out.residual > 1e-12 * (gamma + lam)) {
    throw std::runtime_error("eigenvalue residual out of tolerance");
  }
  return out;
}

AsymptoticSeries closed_form_series(int j, const CornerConfig& config) {
  if (config.approach != Approach::ClosedFormAlphaMinus1) {
    throw std::invalid_argument(
        "closed_form_series requires the closed-form approach");
  }
  RobinEigenvalue eig = lambda_robin(j, config.angle.radians(), config.gamma);

  ShadowTerm t;
  t.k = 0;
  t.exponent = eig.lambda;
  t.coeffs = Eigen::VectorXd::Ones(1);

  AsymptoticSeries series{j, config, {t}, {}, false};
  series.status.kind = SeriesStatus::Kind::ClosedForm;
  series.status.lambda = eig.lambda;
  return series;
}

}  // namespace drwedge

#include "drwedge/series.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "drwedge/trig.hpp"

namespace drwedge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroVectorTol = 1e-14;

double binom(int l, int m) {
  double b = 1.0;
  for (int i = 0; i < m; ++i) b = b * (l - i) / (i + 1);
  return b;
}

// Everything the k-th step needs, with structural decisions made exactly.
struct Step {
  int size{};          // L+1 after the augmentation decision
  bool augment{};
  double shift{};      // lambda_j +- k(alpha+1)
  double lambda_km1{}; // lambda_j -+ (k-1)(alpha+1) (D-D right-hand side)
  QuarterPhase at_k;   // D-N: omega*k*(alpha+1); D-D: -omega*k*(alpha+1)
  QuarterPhase at_km1; // same at k-1
  QuarterPhase at_1;   // same at 1 (the recursion's fixed rotation)
};

QuarterPhase phase_of(const ExactOrIrrational& rho, int k, bool dd) {
  if (rho.is_exact()) {
    Rational x = Rational(k) * *rho.exact;
    return QuarterPhase::of_pi(dd ? -x : x);
  }
  double ang = k * rho.value * kPi;
  return QuarterPhase::of(dd ? -ang : ang);
}

Step plan_step(int j, int k, int prev_size, const CornerConfig& cfg) {
  const bool dd = cfg.approach == Approach::DD;
  ExactOrIrrational rho = cfg.rho();

  const bool sin_zero = is_sin_zero(k, rho);
  const bool shift_zero = is_lambda_shift_zero(j, k, rho, cfg.approach);
  if (dd) {
    // A vanishing D-D exponent forces k*rho integral, so the sine test
    // already covers it; the system is enlarged by the sine condition alone.
    assert(!shift_zero || sin_zero);
  } else if (sin_zero && shift_zero) {
    // Impossible: the shift can only vanish where the sine does not.
    throw std::logic_error("both augmentation triggers fired at once");
  }

  Step s;
  s.augment = dd ? sin_zero : (sin_zero || shift_zero);
  s.size = prev_size + (s.augment ? 1 : 0);
  s.shift = cfg.exponent(j, k);
  s.lambda_km1 = cfg.exponent(j, k - 1);
  s.at_k = phase_of(rho, k, dd);
  s.at_km1 = phase_of(rho, k - 1, dd);
  s.at_1 = phase_of(rho, 1, dd);
  return s;
}

Eigen::VectorXd extend(const Eigen::VectorXd& a, int size) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(size);
  out.head(a.size()) = a;
  return out;
}

}  // namespace

double AsymptoticSeries::min_exponent() const {
  double m = terms.empty() ? 0.0 : terms.front().exponent;
  for (const auto& t : terms) m = std::min(m, t.exponent);
  return m;
}

ShadowTerm main_term(int j, const CornerConfig& config) {
  if (j < 1) throw std::invalid_argument("j must be a positive integer");
  ShadowTerm t;
  t.k = 0;
  t.exponent = config.exponent(j, 0);
  ExactOrIrrational x = config.scaled_exponent(j, 0);
  if (x.is_exact()) t.scaled_exponent = *x.exact;
  t.coeffs = Eigen::VectorXd::Ones(1);
  return t;
}

TriangularSystem build_system_direct(int j, int k,
                                     const Eigen::VectorXd& prev_coeffs,
                                     const CornerConfig& config) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const bool dd = config.approach == Approach::DD;
  const double w = config.angle.radians();
  Step st = plan_step(j, k, static_cast<int>(prev_coeffs.size()), config);
  const int n = st.size;
  const Eigen::VectorXd prev = extend(prev_coeffs, n);

  TriangularSystem sys;
  sys.augmented = st.augment;
  sys.M = Eigen::MatrixXd::Zero(n, n);
  sys.g = Eigen::VectorXd::Zero(n);

  for (int m = 0; m < n; ++m) {
    double wn = 1.0;  // omega^(l-m)
    for (int l = m; l < n; ++l) {
      const int d = l - m;
      const double bw = binom(l, m) * wn;
      if (dd) {
        sys.M(m, l) = bw * st.at_k.sin_at(d);
        sys.g(m) -= prev(l) / config.gamma * bw *
                    (d / w * st.at_km1.sin_at(d) +
                     st.lambda_km1 * st.at_km1.cos_at(d));
      } else {
        sys.M(m, l) =
            bw * (d / w * st.at_k.cos_at(d) - st.shift * st.at_k.sin_at(d));
        sys.g(m) -= config.gamma * prev(l) * bw * st.at_km1.cos_at(d);
      }
      wn *= w;
    }
  }
  return sys;
}

TriangularSystem build_system_recursive(int j, int k,
                                        const Eigen::VectorXd& prev_coeffs,
                                        const CornerConfig& config) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const bool dd = config.approach == Approach::DD;
  const double w = config.angle.radians();
  Step st = plan_step(j, k, static_cast<int>(prev_coeffs.size()), config);
  const int n = st.size;
  const Eigen::VectorXd prev = extend(prev_coeffs, n);

  // Phase matrices at step k: S from sines, C from cosines, and their
  // "tilde" companions scaled by l-m (the theta-derivative bookkeeping).
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd St = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd Ct = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    double wn = 1.0;
    for (int l = m; l < n; ++l) {
      const int d = l - m;
      const double bw = binom(l, m) * wn;
      S(m, l) = bw * st.at_k.sin_at(d);
      C(m, l) = bw * st.at_k.cos_at(d);
      St(m, l) = d * S(m, l);
      Ct(m, l) = d * C(m, l);
      wn *= w;
    }
  }

  TriangularSystem sys;
  sys.augmented = st.augment;
  if (dd) {
    const double c1 = st.at_1.cos_at(0);  // cos(omega(alpha+1))
    const double s1 = -st.at_1.sin_at(0); // sin(omega(alpha+1))
    sys.M = S;
    sys.g = -(c1 / config.gamma) * (St / w + st.lambda_km1 * C) * prev -
            (s1 / config.gamma) * (Ct / w - st.lambda_km1 * S) * prev;
  } else {
    const double c1 = st.at_1.cos_at(0);
    const double s1 = st.at_1.sin_at(0);
    sys.M = Ct / w - st.shift * S;
    sys.g = -config.gamma * (c1 * C + s1 * S) * prev;
  }
  return sys;
}

Eigen::VectorXd solve_triangular(const TriangularSystem& sys) {
  const int n = static_cast<int>(sys.g.size());
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);

  if (!sys.augmented) {
    for (int i = n - 1; i >= 0; --i) {
      if (sys.M(i, i) == 0.0) {
        throw std::domain_error(
            "inconsistent system: structural zero diagonal without "
            "augmentation");
      }
      double rhs = sys.g(i);
      for (int l = i + 1; l < n; ++l) rhs -= sys.M(i, l) * a(l);
      a(i) = rhs / sys.M(i, i);
    }
  } else {
    // First column and last row are structurally zero; the last equation is
    // 0 = 0 and coeff 0 is pinned to zero by convention.
    if (!(sys.M.col(0).isZero(0.0) && sys.M.row(n - 1).isZero(0.0) &&
          sys.g(n - 1) == 0.0)) {
      throw std::logic_error("augmented system lacks its zero border");
    }
    a(0) = 0.0;
    for (int i = n - 2; i >= 0; --i) {
      if (sys.M(i, i + 1) == 0.0) {
        throw std::domain_error("augmented system has a zero subdiagonal pivot");
      }
      double rhs = sys.g(i);
      for (int l = i + 2; l < n; ++l) rhs -= sys.M(i, l) * a(l);
      a(i + 1) = rhs / sys.M(i, i + 1);
    }
  }

  const double resid = (sys.M * a - sys.g).lpNorm<Eigen::Infinity>();
  if (resid > 1e-12 * (1.0 + sys.g.lpNorm<Eigen::Infinity>())) {
    throw std::runtime_error("triangular solve residual out of tolerance");
  }
  return a;
}

AsymptoticSeries build_series(int j, const CornerConfig& config,
                              int max_terms) {
  if (config.approach == Approach::ClosedFormAlphaMinus1) {
    throw std::invalid_argument(
        "alpha = -1 series are produced by closed_form_series");
  }
  if (config.alpha.is_minus_one()) {
    throw std::domain_error(
        "alpha = -1 has no convergent recursion; use the closed-form branch");
  }
  if (max_terms < 1) throw std::invalid_argument("max_terms must be >= 1");

  std::optional<Classification> cls;
  if (config.rho().is_exact()) cls = classify(config, j);
  const bool finite_exact =
      cls && cls->kind == Classification::SeriesKind::FiniteExact;

  AsymptoticSeries series{j, config, {}, {}, false};
  series.terms.push_back(main_term(j, config));
  double coeff_scale = 1.0;

  for (int k = 1;; ++k) {
    const bool expect_zero = finite_exact && k == cls->terminates_at + 1;
    if (!expect_zero &&
        static_cast<int>(series.terms.size()) >= max_terms) {
      series.status.kind = SeriesStatus::Kind::Truncated;
      series.status.truncated_at = static_cast<int>(series.terms.size());
      break;
    }

    TriangularSystem sys =
        build_system_direct(j, k, series.terms.back().coeffs, config);
    Eigen::VectorXd a = solve_triangular(sys);
    const bool vanished =
        a.lpNorm<Eigen::Infinity>() <= kZeroVectorTol * coeff_scale;

    if (expect_zero && !vanished) {
      throw std::runtime_error(
          "series did not terminate where the exact classification says it "
          "must");
    }
    if (vanished) {
      if (finite_exact && !expect_zero) {
        throw std::runtime_error(
            "series terminated earlier than the exact classification allows");
      }
      series.status.kind = SeriesStatus::Kind::Terminated;
      series.status.terminated_after = k - 1;
      series.numeric_termination = !finite_exact;
      break;
    }

    ShadowTerm t;
    t.k = k;
    t.exponent = config.exponent(j, k);
    ExactOrIrrational x = config.scaled_exponent(j, k);
    if (x.is_exact()) t.scaled_exponent = *x.exact;
    t.coeffs = std::move(a);
    coeff_scale =
        std::max(coeff_scale, t.coeffs.lpNorm<Eigen::Infinity>());
    series.terms.push_back(std::move(t));
  }
  return series;
}

}  // namespace drwedge

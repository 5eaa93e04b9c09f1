#include "drwedge/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "drwedge/quadrature.hpp"

namespace drwedge {

namespace {

double antideriv_pow(double a, int n, double r) {
  // r^(a+1) * sum_i (-1)^i n!/(n-i)! log^(n-i)(r) / (a+1)^(i+1)
  const double a1 = a + 1.0;
  const double lr = n > 0 ? std::log(r) : 0.0;
  double falling = 1.0;  // n!/(n-i)!
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) falling *= n - i + 1;
    double logpow = 1.0;
    for (int m = 0; m < n - i; ++m) logpow *= lr;
    sum += (i % 2 == 0 ? 1.0 : -1.0) * falling * logpow /
           std::pow(a1, i + 1);
  }
  return std::pow(r, a1) * sum;
}

double antideriv_log(int n, double r) {
  double lp = 1.0;
  const double lr = std::log(r);
  for (int m = 0; m <= n; ++m) lp *= lr;
  return lp / (n + 1);
}

// One radial monomial family r^a log^n(r), with the a = -1 branch and the
// validity of the eps -> 0 limit decided exactly whenever possible.
struct RadialExponent {
  double a{};
  bool log_branch{};   // a == -1
  bool limit_ok{};     // a + 1 > 0: the antiderivative vanishes at 0
};

double integrate_radial(const RadialExponent& e, int n, double R, double eps) {
  if (eps == 0.0) {
    if (e.log_branch || !e.limit_ok) {
      throw std::domain_error("radial integral divergent as eps -> 0");
    }
    return antideriv_pow(e.a, n, R);
  }
  if (e.log_branch) return antideriv_log(n, R) - antideriv_log(n, eps);
  return antideriv_pow(e.a, n, R) - antideriv_pow(e.a, n, eps);
}

// a + 1 = (X1 + X2)/(omega/pi) for the bulk integrals.
RadialExponent bulk_exponent(const ShadowTerm& t1, const ShadowTerm& t2,
                             const CornerConfig& cfg) {
  RadialExponent e;
  if (t1.scaled_exponent && t2.scaled_exponent && cfg.angle.is_exact()) {
    Rational x = *t1.scaled_exponent + *t2.scaled_exponent;
    e.log_branch = x.is_zero();
    e.limit_ok = x > Rational(0);
    e.a = (x / cfg.angle.over_pi()).to_double() - 1.0;
  } else {
    e.a = t1.exponent + t2.exponent - 1.0;
    e.log_branch = e.a == -1.0;
    e.limit_ok = e.a + 1.0 > 0.0;
  }
  return e;
}

// a + 1 = (X1 + X2)/(omega/pi) + alpha + 2 for the Robin-side integral.
RadialExponent boundary_exponent(const ShadowTerm& t1, const ShadowTerm& t2,
                                 const CornerConfig& cfg) {
  RadialExponent e;
  if (t1.scaled_exponent && t2.scaled_exponent && cfg.angle.is_exact() &&
      cfg.alpha.is_exact()) {
    const Rational& rw = cfg.angle.over_pi();
    Rational x = *t1.scaled_exponent + *t2.scaled_exponent +
                 rw * (cfg.alpha.exact_value() + Rational(2));
    e.log_branch = x.is_zero();
    e.limit_ok = x > Rational(0);
    e.a = (x / rw).to_double() - 1.0;
  } else {
    e.a = t1.exponent + t2.exponent + cfg.alpha.value() + 1.0;
    e.log_branch = e.a == -1.0;
    e.limit_ok = e.a + 1.0 > 0.0;
  }
  return e;
}

}  // namespace

double radial_antiderivative(double a, int n, double r) {
  if (!(r > 0.0)) throw std::domain_error("antiderivative needs r > 0");
  if (n < 0) throw std::invalid_argument("log power must be nonnegative");
  return a == -1.0 ? antideriv_log(n, r) : antideriv_pow(a, n, r);
}

PairEnergy term_pair_energy(const ShadowTerm& t1, const ShadowTerm& t2,
                            const CornerConfig& config, double R, double eps,
                            int angular_nodes) {
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (eps < 0.0 || eps > R) throw std::invalid_argument("need 0 <= eps <= R");

  // Canonical order makes term_pair_energy(a, b) == term_pair_energy(b, a)
  // bit for bit.
  const ShadowTerm* first = &t1;
  const ShadowTerm* second = &t2;
  if (t2.k < t1.k ||
      (t2.k == t1.k && t2.log_degree() < t1.log_degree())) {
    std::swap(first, second);
  }
  const ShadowTerm& u = *first;
  const ShadowTerm& v = *second;

  const double w = config.angle.radians();
  const int Lu = u.log_degree();
  const int Lv = v.log_degree();

  // Angular integrals per log-power pair: radial-derivative profiles
  // B_m = b*A_m + (m+1)*A_(m+1) against each other, and A'_m against A'_m.
  Eigen::MatrixXd bulk_ang = Eigen::MatrixXd::Zero(Lu + 1, Lv + 1);
  const GaussRule& rule = gauss_legendre(angular_nodes);
  for (int i = 0; i < angular_nodes; ++i) {
    const double theta = 0.5 * w * (rule.x(i) + 1.0);
    const double wt = 0.5 * w * rule.w(i);
    AngularProfile pu = angular_profile(u, theta);
    AngularProfile pv = angular_profile(v, theta);
    for (int mu = 0; mu <= Lu; ++mu) {
      const double bu = u.exponent * pu.value(mu) +
                        (mu < Lu ? (mu + 1) * pu.value(mu + 1) : 0.0);
      for (int mv = 0; mv <= Lv; ++mv) {
        const double bv = v.exponent * pv.value(mv) +
                          (mv < Lv ? (mv + 1) * pv.value(mv + 1) : 0.0);
        bulk_ang(mu, mv) += wt * (bu * bv + pu.dtheta(mu) * pv.dtheta(mv));
      }
    }
  }

  AngularProfile tru = boundary_profile(u, config);
  AngularProfile trv = boundary_profile(v, config);

  const RadialExponent eb = bulk_exponent(u, v, config);
  const RadialExponent es = boundary_exponent(u, v, config);

  PairEnergy out;
  for (int mu = 0; mu <= Lu; ++mu) {
    for (int mv = 0; mv <= Lv; ++mv) {
      const int n = mu + mv;
      if (bulk_ang(mu, mv) != 0.0) {
        out.bulk += bulk_ang(mu, mv) * integrate_radial(eb, n, R, eps);
      }
      const double ctrace = tru.value(mu) * trv.value(mv);
      if (ctrace != 0.0) {
        out.boundary += ctrace * integrate_radial(es, n, R, eps);
      }
    }
  }
  return out;
}

EnergyFiniteness energy_finite(const AsymptoticSeries& series) {
  const CornerConfig& cfg = series.config;
  if (cfg.approach == Approach::ClosedFormAlphaMinus1) {
    // Single term r^lambda sin(lambda theta) with lambda > 0 and boundary
    // exponent 2*lambda + 1 > 0.
    return EnergyFiniteness::Finite;
  }

  Classification cls = classify(cfg, series.j);
  if (cls.kind != Classification::SeriesKind::FiniteExact) {
    return cls.energy.finite_for(series.j) ? EnergyFiniteness::Finite
                                           : EnergyFiniteness::Infinite;
  }

  // Exact finite series: test the stored terms one by one.
  for (const auto& t : series.terms) {
    if (t.scaled_exponent && cfg.angle.is_exact() && cfg.alpha.is_exact()) {
      const Rational& x = *t.scaled_exponent;
      if (!(x > Rational(0))) return EnergyFiniteness::Infinite;
      const bool trace_vanishes = t.log_degree() == 0 && x.is_integer();
      if (!trace_vanishes) {
        Rational bnd = Rational(2) * x +
                       cfg.angle.over_pi() * (cfg.alpha.exact_value() + Rational(2));
        if (!(bnd > Rational(0))) return EnergyFiniteness::Infinite;
      }
    } else {
      if (!(t.exponent > 0.0)) return EnergyFiniteness::Infinite;
      if (!(2.0 * t.exponent + cfg.alpha.value() + 2.0 > 0.0)) {
        return EnergyFiniteness::Infinite;
      }
    }
  }
  return EnergyFiniteness::Finite;
}

EnergyResult series_energy(const AsymptoticSeries& series, double R,
                           double eps, int angular_nodes) {
  if (series.terms.empty()) throw std::domain_error("empty series");
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (eps < 0.0 || eps > R) throw std::invalid_argument("need 0 <= eps <= R");
  if (eps == 0.0 && energy_finite(series) == EnergyFiniteness::Infinite) {
    throw std::domain_error("energy divergent as eps -> 0; supply eps > 0");
  }

  EnergyResult out;
  out.eps_used = eps;
  for (const auto& ti : series.terms) {
    for (const auto& tl : series.terms) {
      PairEnergy pe = term_pair_energy(ti, tl, series.config, R, eps,
                                       angular_nodes);
      out.bulk += pe.bulk;
      out.boundary += pe.boundary;
    }
  }
  out.value = 0.5 * out.bulk + series.config.gamma * out.boundary;
  return out;
}

}  // namespace drwedge

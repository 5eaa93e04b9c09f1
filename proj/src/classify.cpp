#include "drwedge/classify.hpp"

#include <stdexcept>

namespace drwedge {

FractionForm fraction_form(const Rational& r) {
  if (r.is_zero()) {
    throw std::domain_error("fraction_form is undefined for zero");
  }
  FractionForm f;
  std::int64_t num = r.num();
  std::int64_t den = r.den();
  if (den % 2 == 0) {
    // |num| odd is automatic: the fraction is reduced.
    f.kind = FractionForm::Kind::OddOverEven;
    f.negative = num < 0;
    std::int64_t a = num < 0 ? -num : num;
    f.p = (a + 1) / 2;
    f.q = den / 2;
  } else {
    f.kind = FractionForm::Kind::AnyOverOdd;
    f.p = num;
    f.q = (den + 1) / 2;
  }
  return f;
}

bool is_sin_zero(std::int64_t k, const ExactOrIrrational& rho) {
  if (!rho.is_exact()) return false;
  return (Rational(k) * *rho.exact).is_integer();
}

bool is_cos_zero(std::int64_t k, const ExactOrIrrational& rho) {
  if (!rho.is_exact()) return false;
  return (Rational(k) * *rho.exact - Rational(1, 2)).is_integer();
}

bool is_lambda_shift_zero(std::int64_t j, std::int64_t k,
                          const ExactOrIrrational& rho, Approach approach) {
  if (!rho.is_exact()) return false;
  if (approach == Approach::DD) {
    return Rational(j) - Rational(k) * *rho.exact == Rational(0);
  }
  return Rational(2 * j - 1, 2) + Rational(k) * *rho.exact == Rational(0);
}

std::string Classification::describe() const {
  std::string s;
  switch (kind) {
    case SeriesKind::FiniteExact:
      s = "apparent critical, S=" + std::to_string(terminates_at) +
          ", no log terms";
      break;
    case SeriesKind::InfiniteNoLog:
      s = rho_form ? "actual critical, infinite series, no log terms"
                   : "infinite series, no log terms";
      break;
    case SeriesKind::InfiniteWithLog:
      s = "actual critical, infinite series with log terms (period " +
          std::to_string(log_period) + ")";
      if (log_extra_step) {
        s += ", extra log step at k=" + std::to_string(*log_extra_step);
      }
      break;
  }
  s += converges_near_zero ? ", converges" : ", diverges near zero";
  switch (energy.kind) {
    case EnergyRule::Kind::Finite: s += ", energy finite"; break;
    case EnergyRule::Kind::Infinite: s += ", energy infinite"; break;
    case EnergyRule::Kind::FiniteIff:
      s += ", energy finite iff j ";
      s += energy.strict ? ">" : ">=";
      s += " " + std::to_string(energy.j_threshold);
      break;
  }
  return s;
}

Classification classify(const CornerConfig& config, int j) {
  if (config.approach == Approach::ClosedFormAlphaMinus1) {
    throw std::domain_error("classify expects the D-N or D-D approach");
  }
  if (config.alpha.is_minus_one()) {
    throw std::domain_error(
        "alpha = -1 has no recursive series; use the closed-form branch");
  }
  if (j < 1) throw std::invalid_argument("j must be a positive integer");

  const bool dn = config.approach == Approach::DN;
  const bool alpha_above = config.alpha.value() > -1.0;
  // "Natural" pairings D-N/alpha>-1 and D-D/alpha<-1 converge near zero and
  // have finite energy; the crossed pairings generally do not.
  const bool natural = dn == alpha_above;

  Classification c;
  ExactOrIrrational rho = config.rho();

  using SK = Classification::SeriesKind;
  using EK = Classification::EnergyRule::Kind;

  if (!rho.is_exact()) {
    c.kind = SK::InfiniteNoLog;
    c.converges_near_zero = natural;
    c.energy.kind = natural ? EK::Finite : EK::Infinite;
    return c;
  }

  FractionForm f = fraction_form(*rho.exact);
  c.rho_form = f;

  if (f.kind == FractionForm::Kind::OddOverEven) {
    const auto q = static_cast<int>(f.q);
    if (natural) {
      c.kind = SK::FiniteExact;
      c.terminates_at = q;
      c.converges_near_zero = true;
      c.energy.kind = EK::Finite;
    } else if (dn) {
      // alpha < -1. The exponent of term k = q vanishes when j = p, which
      // forces an extra log power there and an infinite series.
      if (j == f.p) {
        c.kind = SK::InfiniteWithLog;
        c.log_period = 2 * q;
        c.log_extra_step = q;
        c.converges_near_zero = false;
        c.energy.kind = EK::Infinite;
      } else {
        c.kind = SK::FiniteExact;
        c.terminates_at = q;
        c.converges_near_zero = true;
        c.energy = {EK::FiniteIff, f.p, /*strict=*/true};
      }
    } else {
      // D-D with alpha > -1: still an exact finite series, but the late
      // terms have small (possibly negative) exponents.
      c.kind = SK::FiniteExact;
      c.terminates_at = q;
      c.converges_near_zero = true;
      c.energy = {EK::FiniteIff, f.p, /*strict=*/false};
    }
    return c;
  }

  // AnyOverOdd: log powers appear every 2q-1 steps and the series is infinite.
  c.kind = SK::InfiniteWithLog;
  c.log_period = static_cast<int>(2 * f.q - 1);
  c.converges_near_zero = natural;
  c.energy.kind = natural ? EK::Finite : EK::Infinite;
  return c;
}

}  // namespace drwedge

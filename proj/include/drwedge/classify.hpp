#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "drwedge/config.hpp"

namespace drwedge {

/// Parity decomposition of a reduced nonzero fraction. Every reduced rational
/// is exactly one of
///   +-(2p-1)/(2q)  -- odd numerator over even denominator, sign flag kept
///                     separately (OddOverEven), or
///   p/(2q-1)       -- anything over an odd denominator, sign carried on p
///                     (AnyOverOdd).
/// The first kind makes the recursion stop after q terms; the second makes it
/// run forever, picking up a log power every 2q-1 steps.
struct FractionForm {
  enum class Kind { OddOverEven, AnyOverOdd };
  Kind kind{};
  std::int64_t p{};
  std::int64_t q{};
  bool negative{};  // used by OddOverEven; AnyOverOdd signs p itself
};

/// Throws std::domain_error for r = 0 (the alpha = -1 branch is handled by
/// the closed form, not here).
FractionForm fraction_form(const Rational& r);

/// Exact test of sin(k*omega*(alpha+1)) == 0, i.e. k*rho integer. Always
/// false for irrational rho. This is the only way structural zeros are
/// decided; float trig is never consulted for it.
bool is_sin_zero(std::int64_t k, const ExactOrIrrational& rho);

/// Exact test of cos(k*omega*(alpha+1)) == 0, i.e. k*rho - 1/2 integer.
bool is_cos_zero(std::int64_t k, const ExactOrIrrational& rho);

/// Exact test of lambda_j + k(alpha+1) == 0 for D-N ((2j-1)/2 + k*rho == 0)
/// or lambda_j - k(alpha+1) == 0 for D-D (j - k*rho == 0).
bool is_lambda_shift_zero(std::int64_t j, std::int64_t k,
                          const ExactOrIrrational& rho, Approach approach);

/// Structure of the series of shadow terms for one (omega, alpha, approach, j):
/// whether it terminates, where log powers appear, whether the truncation
/// error shrinks near the tip, and whether the tip energy is finite.
struct Classification {
  enum class SeriesKind { FiniteExact, InfiniteNoLog, InfiniteWithLog };

  SeriesKind kind{};
  int terminates_at{};                // S (== q) when FiniteExact
  int log_period{};                   // InfiniteWithLog: L grows when period | k
  std::optional<int> log_extra_step;  // one extra growth step (j == p resonance)

  bool converges_near_zero{};

  struct EnergyRule {
    enum class Kind { Finite, Infinite, FiniteIff };
    Kind kind{};
    std::int64_t j_threshold{};  // FiniteIff: finite iff j > threshold
    bool strict{};               //            (strict) or j >= threshold
    bool finite_for(std::int64_t j) const {
      switch (kind) {
        case Kind::Finite: return true;
        case Kind::Infinite: return false;
        default: return strict ? j > j_threshold : j >= j_threshold;
      }
    }
  };
  EnergyRule energy{};

  std::optional<FractionForm> rho_form;  // set when rho is rational, nonzero

  std::string describe() const;
};

/// Requires approach DN or DD and alpha != -1; alpha = -1 throws
/// std::domain_error pointing at the closed-form branch.
Classification classify(const CornerConfig& config, int j);

}  // namespace drwedge

#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "drwedge/classify.hpp"

namespace drwedge {

/// One term u^(k) of an asymptotic eigensolution,
///   u^(k)(r, theta) = r^exponent * sum_l coeffs[l] * Im{ e^(i b theta)
///                     (log r + i theta)^l } with b = exponent,
/// i.e. a power of r times a polynomial in log r with trigonometric-
/// polynomial angular profiles. k = 0 is the main term with coeffs = [1].
struct ShadowTerm {
  int k{};
  double exponent{};
  /// exponent * omega/pi, kept exact when the configuration is exact; the
  /// energy module branches on its sign and integrality.
  std::optional<Rational> scaled_exponent;
  Eigen::VectorXd coeffs;  // a^(0..L)

  int log_degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct SeriesStatus {
  enum class Kind { Terminated, Truncated, ClosedForm };
  Kind kind{};
  int terminated_after{};  // S: index of the last nonzero term
  int truncated_at{};      // number of stored terms when the cap was hit
  double lambda{};         // ClosedForm eigenvalue
};

struct AsymptoticSeries {
  int j{};
  CornerConfig config;
  std::vector<ShadowTerm> terms;  // k = 0..n, in order
  SeriesStatus status{};
  /// Set when termination was detected by numeric vanishing alone, without an
  /// exact finite classification backing it up.
  bool numeric_termination{};

  double min_exponent() const;
};

/// Upper-triangular system M a = g determining one term's coefficient vector.
/// When a structural zero lands on the diagonal the system is enlarged by one
/// (one more log power); the enlarged, "augmented" system has a first column
/// and last row of zeros and is solved with the leading coefficient pinned to
/// zero, which keeps the expansion complete (the dropped pure-power piece is
/// another shifted main term).
struct TriangularSystem {
  Eigen::MatrixXd M;
  Eigen::VectorXd g;
  bool augmented{};
};

ShadowTerm main_term(int j, const CornerConfig& config);

/// Assembles the k-th step system entry by entry from the boundary-condition
/// recursion. prev_coeffs is the (k-1)-th coefficient vector.
TriangularSystem build_system_direct(int j, int k,
                                     const Eigen::VectorXd& prev_coeffs,
                                     const CornerConfig& config);

/// Same system assembled from the matrix recursion (combinations of the
/// rotation-phase matrices applied to the previous coefficient vector).
/// Agrees with build_system_direct entrywise to float rounding.
TriangularSystem build_system_recursive(int j, int k,
                                        const Eigen::VectorXd& prev_coeffs,
                                        const CornerConfig& config);

/// Back substitution from the last unknown. Augmented systems pin coeffs[0]
/// to zero and solve the remaining block. Throws std::domain_error on a
/// structural zero pivot in a non-augmented system (a classification bug,
/// not a user error).
Eigen::VectorXd solve_triangular(const TriangularSystem& sys);

/// Runs the recursion from the main term until it terminates (the next
/// coefficient vector vanishes) or max_terms terms (main term included) are
/// stored. For exactly classified finite series, termination is verified to
/// land at exactly S = q and a mismatch throws. alpha = -1 and the
/// closed-form approach are rejected here; see closed_form_series.
AsymptoticSeries build_series(int j, const CornerConfig& config,
                              int max_terms = 25);

}  // namespace drwedge

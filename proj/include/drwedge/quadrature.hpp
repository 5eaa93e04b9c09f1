#pragma once

#include <Eigen/Core>

namespace drwedge {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  Eigen::VectorXd x;
  Eigen::VectorXd w;
};

/// n-point rule, computed once by Newton iteration on the Legendre
/// polynomial and cached.
const GaussRule& gauss_legendre(int n);

}  // namespace drwedge

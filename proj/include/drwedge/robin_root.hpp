#pragma once

#include "drwedge/series.hpp"

namespace drwedge {

/// A root of tan(lambda*omega) + lambda/gamma = 0, the eigenvalue equation of
/// the alpha = -1 corner. Solved through the pole-free reformulation
/// f(lambda) = gamma*sin(lambda*omega) + lambda*cos(lambda*omega), which has
/// opposite signs at the bracket ends (2j-1)pi/(2 omega) and j pi/omega.
struct RobinEigenvalue {
  int j{};
  double lambda{};
  double gamma{};
  double omega{};
  double residual{};  // |f(lambda)|
};

RobinEigenvalue lambda_robin(int j, double omega, double gamma);

/// The alpha = -1 eigensolution r^lambda sin(lambda theta) packaged as a
/// one-term series. Exact up to the root residual.
AsymptoticSeries closed_form_series(int j, const CornerConfig& config);

}  // namespace drwedge

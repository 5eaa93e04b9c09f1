#pragma once

#include <string>
#include <vector>

namespace drwedge {

/// Evaluation grid for the export command: n_r radii from r_min to r_max
/// (optionally log spaced) times theta_points angles spanning [0, omega].
struct GridSpec {
  double r_min{};
  double r_max{};
  int n_r{};
  int theta_points{};
  bool log_spaced_r{};

  void validate() const;
};

/// Runs one CLI invocation (args excludes the program name) and returns the
/// process exit code: 0 success, 2 usage error, 3 domain or I/O error.
int run_cli(const std::vector<std::string>& args);

}  // namespace drwedge

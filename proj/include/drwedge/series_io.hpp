#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "drwedge/series.hpp"

namespace drwedge {

/// Interchange document for a built series:
/// {
///   "j": 1, "approach": "dn", "gamma": 1.0,
///   "omega_over_pi": "1/2"  (exact)  |  "omega": 1.0471...  (irrational),
///   "alpha": "3/2"          (exact)  |  "alpha": 1.5        (irrational),
///   "terms": [{"k": 0, "exponent": 1.0, "L": 0, "coeffs": [1.0]}, ...],
///   "status": {"kind": "terminated", "S": 2}
///            | {"kind": "truncated", "at": 4}
///            | {"kind": "closed_form", "lambda": 1.39...}
/// }
/// Exact rationals travel as strings, declared irrationals as numbers, so a
/// round trip preserves both the values and their exactness.
nlohmann::json to_json(const AsymptoticSeries& series);
AsymptoticSeries series_from_json(const nlohmann::json& doc);

void save_series(const AsymptoticSeries& series, const std::string& path);
AsymptoticSeries load_series(const std::string& path);

}  // namespace drwedge

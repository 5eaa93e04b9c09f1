#include "drwedge/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "drwedge/energy.hpp"
#include "drwedge/robin_root.hpp"
#include "drwedge/series_io.hpp"

namespace drwedge {

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size()) throw UsageError("malformed number \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list \"" + s + "\"");
  return out;
}

// Writes rows of 17-significant-digit CSV with LF endings, to a file or stdout.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open \"" + path + "\"");
    }
  }
  void header(const std::vector<std::string>& cols) {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) line += ',';
      line += cols[i];
    }
    stream() << line << "\n";
  }
  void row(const std::vector<double>& vals) {
    std::string line;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) line += ',';
      line += g17(vals[i]);
    }
    stream() << line << "\n";
  }
 private:
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  std::ofstream file_;
};

// Shared --omega-pi/--omega/--alpha/... option block.
struct ConfigOpts {
  std::string omega_pi;
  double omega = std::nan("");
  bool irrational = false;
  std::string alpha;
  double alpha_irr = std::nan("");
  double gamma = 1.0;
  std::string approach;

  void attach(CLI::App* cmd, bool with_approach = true) {
    cmd->add_option("--omega-pi", omega_pi,
                    "inner angle as a rational multiple of pi, e.g. 3/2");
    cmd->add_option("--omega", omega,
                    "inner angle in radians (requires --irrational)");
    cmd->add_flag("--irrational", irrational,
                  "declare float inputs irrational instead of silently "
                  "guessing rationality");
    cmd->add_option("--alpha", alpha, "Robin exponent as a rational, e.g. -3/2");
    cmd->add_option("--alpha-irr", alpha_irr,
                    "Robin exponent as a declared-irrational real");
    cmd->add_option("--gamma", gamma, "Robin coefficient scale, positive")
        ->capture_default_str();
    if (with_approach) {
      cmd->add_option("--approach", approach, "dn | dd | closed-form");
    }
  }

  AngleSpec make_angle() const {
    if (!omega_pi.empty()) {
      if (!std::isnan(omega)) throw UsageError("give --omega-pi or --omega, not both");
      try {
        return AngleSpec::exact(Rational::parse(omega_pi));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (!std::isnan(omega)) {
      if (!irrational) {
        throw UsageError(
            "float --omega needs --irrational (or use --omega-pi p/q)");
      }
      try {
        return AngleSpec::declared_irrational(omega);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    throw UsageError("an angle is required: --omega-pi p/q or --omega x --irrational");
  }

  AlphaSpec make_alpha() const {
    if (!alpha.empty()) {
      if (!std::isnan(alpha_irr)) throw UsageError("give --alpha or --alpha-irr, not both");
      try {
        return AlphaSpec::exact(Rational::parse(alpha));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (!std::isnan(alpha_irr)) return AlphaSpec::declared_irrational(alpha_irr);
    throw UsageError("an exponent is required: --alpha p/q or --alpha-irr x");
  }

  Approach make_approach(const AlphaSpec& a) const {
    if (approach.empty()) {
      if (a.is_minus_one()) return Approach::ClosedFormAlphaMinus1;
      throw UsageError("--approach dn|dd is required when alpha != -1");
    }
    if (approach == "dn") return Approach::DN;
    if (approach == "dd") return Approach::DD;
    if (approach == "closed-form" || approach == "closed") {
      return Approach::ClosedFormAlphaMinus1;
    }
    throw UsageError("unknown approach \"" + approach + "\"");
  }

  CornerConfig make() const {
    AngleSpec ang = make_angle();
    AlphaSpec al = make_alpha();
    try {
      return CornerConfig(ang, al, gamma, make_approach(al));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

void print_classification(const CornerConfig& cfg, int j, bool as_json) {
  if (cfg.alpha.is_minus_one() ||
      cfg.approach == Approach::ClosedFormAlphaMinus1) {
    RobinEigenvalue eig = lambda_robin(j, cfg.angle.radians(), cfg.gamma);
    if (as_json) {
      nlohmann::json doc{{"branch", "closed_form"},
                         {"j", j},
                         {"lambda", eig.lambda},
                         {"residual", eig.residual}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "alpha = -1: closed-form branch\n"
                << "lambda_" << j << " = " << g17(eig.lambda)
                << "  (bracket (" << g17((2.0 * j - 1.0) * kPi / (2.0 * cfg.angle.radians()))
                << ", " << g17(j * kPi / cfg.angle.radians()) << "), residual "
                << g17(eig.residual) << ")\n";
    }
    return;
  }

  Classification c = classify(cfg, j);
  ExactOrIrrational rho = cfg.rho();
  if (as_json) {
    nlohmann::json doc;
    doc["rho"] = rho.is_exact() ? nlohmann::json(rho.exact->str())
                                : nlohmann::json(rho.value);
    doc["rho_rational"] = rho.is_exact();
    switch (c.kind) {
      case Classification::SeriesKind::FiniteExact:
        doc["series"] = "finite_exact";
        doc["S"] = c.terminates_at;
        break;
      case Classification::SeriesKind::InfiniteNoLog:
        doc["series"] = "infinite_no_log";
        break;
      case Classification::SeriesKind::InfiniteWithLog:
        doc["series"] = "infinite_with_log";
        doc["log_period"] = c.log_period;
        if (c.log_extra_step) doc["log_extra_step"] = *c.log_extra_step;
        break;
    }
    doc["converges_near_zero"] = c.converges_near_zero;
    doc["energy_finite"] = c.energy.finite_for(j);
    std::cout << doc.dump(2) << "\n";
  } else {
    if (rho.is_exact()) {
      std::cout << "rho = " << rho.exact->str();
      if (c.rho_form) {
        const auto& f = *c.rho_form;
        if (f.kind == FractionForm::Kind::OddOverEven) {
          std::cout << " = " << (f.negative ? "-" : "") << "(2p-1)/(2q), p="
                    << f.p << ", q=" << f.q;
        } else {
          std::cout << " = p/(2q-1), p=" << f.p << ", q=" << f.q;
        }
      }
      std::cout << "\n";
    } else {
      std::cout << "rho = " << g17(rho.value) << " (declared irrational)\n";
    }
    std::cout << c.describe() << "\n";
    std::cout << "for j = " << j << ": energy "
              << (c.energy.finite_for(j) ? "finite" : "infinite") << "\n";
  }
}

AsymptoticSeries build_from_opts(const ConfigOpts& opts, int j, int max_terms) {
  CornerConfig cfg = opts.make();
  if (cfg.approach == Approach::ClosedFormAlphaMinus1) {
    return closed_form_series(j, cfg);
  }
  if (cfg.alpha.is_minus_one()) {
    throw UsageError("alpha = -1 needs --approach closed-form");
  }
  return build_series(j, cfg, max_terms);
}

double traction_at(const AsymptoticSeries& series, double x) {
  // Robin side at theta = omega carries the spring traction gamma r^alpha u;
  // the Dirichlet side theta = 0 carries (1/r) du/dtheta.
  const CornerConfig& cfg = series.config;
  if (x >= 0.0) {
    if (x == 0.0) x = 1e-300;  // one-sided limit marker; exponents >= 1 here
    return eval_series(series, x, 0.0).u_theta_over_r;
  }
  double r = -x;
  PointEval p = eval_series(series, r, cfg.angle.radians());
  return cfg.gamma * std::pow(r, cfg.alpha.value()) * p.u;
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Dirichlet-Robin corner eigensolutions: classification, "
               "recursive series, evaluation, errors, energy"};
  app.require_subcommand(1);

  // classify
  auto* c_classify = app.add_subcommand(
      "classify", "classify the series of shadow terms for (omega, alpha, j)");
  ConfigOpts cl_opts;
  int cl_j = 1;
  bool cl_json = false;
  cl_opts.attach(c_classify);
  c_classify->add_option("--j", cl_j, "eigensolution index, j >= 1");
  c_classify->add_flag("--json", cl_json, "emit JSON instead of text");

  // build
  auto* c_build = app.add_subcommand(
      "build", "build the series and write it as a JSON document");
  ConfigOpts b_opts;
  int b_j = 1;
  int b_max = 25;
  std::string b_out;
  b_opts.attach(c_build);
  c_build->add_option("--j", b_j, "eigensolution index, j >= 1");
  c_build->add_option("--max-terms", b_max, "cap on stored terms, main included")
      ->capture_default_str();
  c_build->add_option("-o,--out", b_out, "output path")->required();

  // eval
  auto* c_eval = app.add_subcommand("eval", "evaluate a series at points");
  std::string e_series, e_r, e_theta, e_out;
  c_eval->add_option("--series", e_series, "series JSON file")->required();
  c_eval->add_option("--r", e_r, "comma-separated radii")->required();
  c_eval->add_option("--theta", e_theta, "comma-separated angles")->required();
  c_eval->add_option("-o,--out", e_out, "CSV path (default stdout)");

  // error
  auto* c_error = app.add_subcommand(
      "error", "absolute and relative Robin-boundary errors over radii");
  std::string er_series, er_r, er_out;
  c_error->add_option("--series", er_series, "series JSON file")->required();
  c_error->add_option("--r", er_r, "comma-separated radii")->required();
  c_error->add_option("-o,--out", er_out, "CSV path (default stdout)");

  // energy
  auto* c_energy = app.add_subcommand(
      "energy", "tip-neighborhood energy of the truncated eigensolution");
  std::string en_series, en_out;
  double en_R = 1.0, en_eps = 0.0;
  c_energy->add_option("--series", en_series, "series JSON file")->required();
  c_energy->add_option("--radius", en_R, "outer radius R")->capture_default_str();
  c_energy->add_option("--eps", en_eps, "inner cutoff (0 = analytic limit)")
      ->capture_default_str();
  c_energy->add_option("-o,--out", en_out, "CSV path (default stdout)");

  // eig
  auto* c_eig = app.add_subcommand(
      "eig", "alpha = -1 eigenvalue table over gamma and j");
  std::string g_omega_pi, g_gammas = "1";
  double g_omega = std::nan("");
  int g_jmax = 5;
  std::string g_out;
  c_eig->add_option("--omega-pi", g_omega_pi, "angle as rational multiple of pi");
  c_eig->add_option("--omega", g_omega, "angle in radians");
  c_eig->add_option("--gammas", g_gammas, "comma-separated gamma values")
      ->capture_default_str();
  c_eig->add_option("--j-max", g_jmax, "solve j = 1..j_max")->capture_default_str();
  c_eig->add_option("-o,--out", g_out, "CSV path (default stdout)");

  // crack
  auto* c_crack = app.add_subcommand(
      "crack", "bridged-crack regime report for the half-plane (omega = pi)");
  ConfigOpts k_opts;
  std::string k_x, k_out;
  k_opts.attach(c_crack, /*with_approach=*/false);
  c_crack->add_option("--x", k_x, "traction sample points along the crack line");
  c_crack->add_option("-o,--out", k_out, "CSV path for the traction trace");

  // export
  auto* c_export = app.add_subcommand(
      "export", "evaluate a series over an (r, theta) grid and emit CSV");
  std::string x_series, x_out;
  GridSpec grid{0.01, 1.0, 50, 33, false};
  c_export->add_option("--series", x_series, "series JSON file")->required();
  c_export->add_option("--r-min", grid.r_min, "smallest radius")->capture_default_str();
  c_export->add_option("--r-max", grid.r_max, "largest radius")->capture_default_str();
  c_export->add_option("--nr", grid.n_r, "number of radii")->capture_default_str();
  c_export->add_option("--ntheta", grid.theta_points, "number of angles")
      ->capture_default_str();
  c_export->add_flag("--log-r", grid.log_spaced_r, "log-spaced radii");
  c_export->add_option("-o,--out", x_out, "CSV path (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*c_classify) {
    print_classification(cl_opts.make(), cl_j, cl_json);
    return 0;
  }

  if (*c_build) {
    AsymptoticSeries s = build_from_opts(b_opts, b_j, b_max);
    save_series(s, b_out);
    switch (s.status.kind) {
      case SeriesStatus::Kind::Terminated:
        std::cout << "terminated after S = " << s.status.terminated_after
                  << " shadow terms\n";
        if (s.numeric_termination) {
          std::cerr << "note: termination detected numerically, without an "
                       "exact finite classification\n";
        }
        break;
      case SeriesStatus::Kind::Truncated:
        std::cout << "truncated at " << s.status.truncated_at << " terms\n";
        break;
      case SeriesStatus::Kind::ClosedForm:
        std::cout << "closed form, lambda = " << g17(s.status.lambda) << "\n";
        break;
    }
    return 0;
  }

  if (*c_eval) {
    AsymptoticSeries s = load_series(e_series);
    CsvSink csv(e_out);
    csv.header({"r", "theta", "u", "u_r", "u_theta_over_r"});
    for (double r : parse_list(e_r)) {
      for (double th : parse_list(e_theta)) {
        PointEval p = eval_series(s, r, th);
        csv.row({r, th, p.u, p.u_r, p.u_theta_over_r});
      }
    }
    return 0;
  }

  if (*c_error) {
    AsymptoticSeries s = load_series(er_series);
    CsvSink csv(er_out);
    csv.header({"r", "E", "e"});
    for (double r : parse_list(er_r)) {
      double E = abs_error(s, r);
      double e;
      try {
        e = rel_error(s, r);
      } catch (const std::domain_error&) {
        e = std::nan("");  // isolated denominator zero: flag the point only
      }
      csv.row({r, E, e});
    }
    return 0;
  }

  if (*c_energy) {
    AsymptoticSeries s = load_series(en_series);
    EnergyResult res = series_energy(s, en_R, en_eps);
    CsvSink csv(en_out);
    csv.header({"R", "eps", "value", "bulk", "boundary"});
    csv.row({en_R, res.eps_used, res.value, res.bulk, res.boundary});
    return 0;
  }

  if (*c_eig) {
    double omega;
    if (!g_omega_pi.empty()) {
      omega = Rational::parse(g_omega_pi).to_double() * kPi;
    } else if (!std::isnan(g_omega)) {
      omega = g_omega;
    } else {
      throw UsageError("eig needs --omega-pi or --omega");
    }
    if (g_jmax < 1) throw UsageError("--j-max must be >= 1");
    CsvSink csv(g_out);
    csv.header({"gamma", "j", "lambda", "residual"});
    for (double gam : parse_list(g_gammas)) {
      for (int j = 1; j <= g_jmax; ++j) {
        RobinEigenvalue eig = lambda_robin(j, omega, gam);
        csv.row({gam, static_cast<double>(j), eig.lambda, eig.residual});
      }
    }
    return 0;
  }

  if (*c_crack) {
    ConfigOpts opts = k_opts;
    opts.omega_pi = "1";  // half plane
    opts.omega = std::nan("");
    AlphaSpec al = opts.make_alpha();
    const double av = al.value();

    std::optional<AsymptoticSeries> series;
    if (al.is_minus_one()) {
      RobinEigenvalue eig = lambda_robin(1, kPi, opts.gamma);
      std::cout << "alpha = -1: weak stress singularity at the crack tip, "
                << "lambda_1 = " << g17(eig.lambda) << " in (1/2, 1), residual "
                << g17(eig.residual) << "\n";
      CornerConfig cfg(AngleSpec::exact(Rational(1)), al, opts.gamma,
                       Approach::ClosedFormAlphaMinus1);
      series = closed_form_series(1, cfg);
    } else if (av > -1.0) {
      std::cout << "alpha > -1: classical square-root stress singularity, "
                   "lambda_1 = 0.5\n";
      opts.approach = "dn";
      series = build_from_opts(opts, 1, 25);
    } else {
      std::cout << "alpha < -1: no stress singularity, stresses continuous, "
                   "lambda_1 = 1\n";
      opts.approach = "dd";
      series = build_from_opts(opts, 1, 25);
    }
    if (!k_x.empty()) {
      CsvSink csv(k_out);
      csv.header({"x", "sigma_yz"});
      for (double x : parse_list(k_x)) csv.row({x, traction_at(*series, x)});
    }
    return 0;
  }

  if (*c_export) {
    AsymptoticSeries s = load_series(x_series);
    grid.validate();
    CsvSink csv(x_out);
    csv.header({"r", "theta", "u", "u_r", "u_theta_over_r"});
    const double w = s.config.angle.radians();
    for (int i = 0; i < grid.n_r; ++i) {
      double t = grid.n_r == 1 ? 0.0 : static_cast<double>(i) / (grid.n_r - 1);
      double r = grid.log_spaced_r
                     ? grid.r_min * std::pow(grid.r_max / grid.r_min, t)
                     : grid.r_min + (grid.r_max - grid.r_min) * t;
      for (int q = 0; q < grid.theta_points; ++q) {
        double th = grid.theta_points == 1
                        ? 0.0
                        : w * q / (grid.theta_points - 1);
        PointEval p = eval_series(s, r, th);
        csv.row({r, th, p.u, p.u_r, p.u_theta_over_r});
      }
    }
    return 0;
  }

  return 0;
}

}  // namespace

void GridSpec::validate() const {
  if (!(r_min > 0.0) || !(r_min < r_max)) {
    throw UsageError("grid needs 0 < r_min < r_max");
  }
  if (n_r < 2 || theta_points < 2) {
    throw UsageError("grid needs at least two radii and two angles");
  }
}

int run_cli(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace drwedge

#include "drwedge/series_io.hpp"

#include <fstream>
#include <stdexcept>

namespace drwedge {

namespace {

Approach approach_from_string(const std::string& s) {
  if (s == "dn") return Approach::DN;
  if (s == "dd") return Approach::DD;
  if (s == "closed_form_alpha_minus1") return Approach::ClosedFormAlphaMinus1;
  throw std::invalid_argument("unknown approach \"" + s + "\"");
}

}  // namespace

nlohmann::json to_json(const AsymptoticSeries& series) {
  nlohmann::json doc;
  doc["j"] = series.j;
  doc["approach"] = to_string(series.config.approach);
  doc["gamma"] = series.config.gamma;
  if (series.config.angle.is_exact()) {
    doc["omega_over_pi"] = series.config.angle.over_pi().str();
  } else {
    doc["omega"] = series.config.angle.radians();
  }
  if (series.config.alpha.is_exact()) {
    doc["alpha"] = series.config.alpha.exact_value().str();
  } else {
    doc["alpha"] = series.config.alpha.value();
  }

  doc["terms"] = nlohmann::json::array();
  for (const auto& t : series.terms) {
    nlohmann::json jt;
    jt["k"] = t.k;
    jt["exponent"] = t.exponent;
    jt["L"] = t.log_degree();
    jt["coeffs"] = std::vector<double>(t.coeffs.begin(), t.coeffs.end());
    doc["terms"].push_back(std::move(jt));
  }

  nlohmann::json st;
  switch (series.status.kind) {
    case SeriesStatus::Kind::Terminated:
      st["kind"] = "terminated";
      st["S"] = series.status.terminated_after;
      break;
    case SeriesStatus::Kind::Truncated:
      st["kind"] = "truncated";
      st["at"] = series.status.truncated_at;
      break;
    case SeriesStatus::Kind::ClosedForm:
      st["kind"] = "closed_form";
      st["lambda"] = series.status.lambda;
      break;
  }
  doc["status"] = std::move(st);
  if (series.numeric_termination) doc["numeric_termination"] = true;
  return doc;
}

AsymptoticSeries series_from_json(const nlohmann::json& doc) {
  Approach approach = approach_from_string(doc.at("approach").get<std::string>());

  AngleSpec angle =
      doc.contains("omega_over_pi")
          ? AngleSpec::exact(
                Rational::parse(doc.at("omega_over_pi").get<std::string>()))
          : AngleSpec::declared_irrational(doc.at("omega").get<double>());

  const auto& ja = doc.at("alpha");
  AlphaSpec alpha = ja.is_string()
                        ? AlphaSpec::exact(Rational::parse(ja.get<std::string>()))
                        : AlphaSpec::declared_irrational(ja.get<double>());

  CornerConfig config(angle, alpha, doc.at("gamma").get<double>(), approach);
  AsymptoticSeries series{doc.at("j").get<int>(), config, {}, {}, false};

  for (const auto& jt : doc.at("terms")) {
    ShadowTerm t;
    t.k = jt.at("k").get<int>();
    t.exponent = jt.at("exponent").get<double>();
    auto coeffs = jt.at("coeffs").get<std::vector<double>>();
    t.coeffs = Eigen::Map<const Eigen::VectorXd>(coeffs.data(),
                                                 static_cast<long>(coeffs.size()));
    if (approach != Approach::ClosedFormAlphaMinus1) {
      ExactOrIrrational x = config.scaled_exponent(series.j, t.k);
      if (x.is_exact()) t.scaled_exponent = *x.exact;
    }
    series.terms.push_back(std::move(t));
  }
  if (series.terms.empty()) throw std::invalid_argument("series has no terms");

  const auto& st = doc.at("status");
  const std::string kind = st.at("kind").get<std::string>();
  if (kind == "terminated") {
    series.status.kind = SeriesStatus::Kind::Terminated;
    series.status.terminated_after = st.at("S").get<int>();
  } else if (kind == "truncated") {
    series.status.kind = SeriesStatus::Kind::Truncated;
    series.status.truncated_at = st.at("at").get<int>();
  } else if (kind == "closed_form") {
    series.status.kind = SeriesStatus::Kind::ClosedForm;
    series.status.lambda = st.at("lambda").get<double>();
  } else {
    throw std::invalid_argument("unknown series status \"" + kind + "\"");
  }
  series.numeric_termination = doc.value("numeric_termination", false);
  return series;
}

void save_series(const AsymptoticSeries& series, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << to_json(series).dump(2) << "\n";
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

AsymptoticSeries load_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  nlohmann::json doc;
  in >> doc;
  return series_from_json(doc);
}

}  // namespace drwedge

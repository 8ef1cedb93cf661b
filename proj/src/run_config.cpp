#include "ohmflow/run_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ohmflow {

void RunConfig::validate() const {
  if (grid_resolution < 2) throw std::invalid_argument("grid_resolution must be >= 2");
  if (!(quadrature_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be > 0");
  if (!(residual_tol > 0.0)) throw std::invalid_argument("residual tolerance must be > 0");
  if (domain != "unit-disk" && domain != "box") {
    throw std::invalid_argument("domain must be unit-disk or box");
  }
  if (step_rule != "sigma_scaled" && step_rule != "two_tier") {
    throw std::invalid_argument("step_rule must be sigma_scaled or two_tier");
  }
  if (!std::isfinite(sigma1) || !std::isfinite(sigma2) || !std::isfinite(sigma3)) {
    throw std::invalid_argument("sigma exponents must be finite");
  }
  if (use_fitted && fit_path.empty()) {
    throw std::invalid_argument("fitted sigma model requires a fit file path");
  }
  if (!(ring_radius > 0.0) || ring_radius >= 1.0) {
    throw std::invalid_argument("ring_radius must lie in (0, 1)");
  }
  if (ring_count < 1) throw std::invalid_argument("ring_count must be >= 1");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (arrow_every < 1) throw std::invalid_argument("arrow_every must be >= 1");
}

RunConfig apply_config_json(RunConfig base, const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object()) throw std::invalid_argument("config root must be a JSON object");

  static const std::set<std::string> known = {
      "sigma_model", "domain",    "grid_resolution", "tolerances", "seed",
      "ring_radius", "ring_count", "max_steps",      "step_rule",  "arrow_every"};
  for (const auto& item : doc.items()) {
    if (!known.count(item.key())) {
      throw std::invalid_argument("unknown config key: " + item.key());
    }
  }

  if (doc.contains("sigma_model")) {
    const nlohmann::json& sm = doc["sigma_model"];
    const std::string type = sm.at("type").get<std::string>();
    if (type == "exponential") {
      base.use_fitted = false;
      if (sm.contains("sigma1")) base.sigma1 = sm["sigma1"].get<double>();
      if (sm.contains("sigma2")) base.sigma2 = sm["sigma2"].get<double>();
      if (sm.contains("sigma3")) base.sigma3 = sm["sigma3"].get<double>();
    } else if (type == "fitted") {
      base.use_fitted = true;
      base.fit_path = sm.at("path").get<std::string>();
    } else {
      throw std::invalid_argument("sigma_model.type must be exponential or fitted");
    }
  }
  if (doc.contains("domain")) base.domain = doc["domain"].get<std::string>();
  if (doc.contains("grid_resolution")) base.grid_resolution = doc["grid_resolution"].get<int>();
  if (doc.contains("tolerances")) {
    const nlohmann::json& tol = doc["tolerances"];
    if (tol.contains("quadrature")) base.quadrature_tol = tol["quadrature"].get<double>();
    if (tol.contains("residual")) base.residual_tol = tol["residual"].get<double>();
  }
  if (doc.contains("seed")) base.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("ring_radius")) base.ring_radius = doc["ring_radius"].get<double>();
  if (doc.contains("ring_count")) base.ring_count = doc["ring_count"].get<int>();
  if (doc.contains("max_steps")) base.max_steps = doc["max_steps"].get<int>();
  if (doc.contains("step_rule")) base.step_rule = doc["step_rule"].get<std::string>();
  if (doc.contains("arrow_every")) base.arrow_every = doc["arrow_every"].get<int>();

  base.validate();
  return base;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return apply_config_json(RunConfig{}, buf.str());
}

}  // namespace ohmflow

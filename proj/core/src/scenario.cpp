#include "udnho/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "udnho/units.hpp"

namespace udnho {

namespace {

void require_finite(double v, const std::string& field) {
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
}

std::string tier_field(std::size_t i, const char* name) {
  return "tiers." + std::to_string(i) + "." + name;
}

}  // namespace

ScenarioConfig normalize_units(const RawScenarioConfig& raw) {
  if (raw.tiers.empty()) throw ConfigError("tiers", "at least one tier required");

  ScenarioConfig cfg;
  cfg.tiers.reserve(raw.tiers.size());
  bool any_positive = false;
  for (std::size_t i = 0; i < raw.tiers.size(); ++i) {
    const RawTierParams& rt = raw.tiers[i];
    require_finite(rt.lambda_per_km2, tier_field(i, "lambda_per_km2"));
    require_finite(rt.power_dbm, tier_field(i, "power_dbm"));
    require_finite(rt.bias_db, tier_field(i, "bias_db"));
    require_finite(rt.height_m, tier_field(i, "height_m"));
    if (rt.lambda_per_km2 < 0.0)
      throw ConfigError(tier_field(i, "lambda_per_km2"), "must be >= 0");
    if (rt.height_m < 0.0) throw ConfigError(tier_field(i, "height_m"), "must be >= 0");

    TierParams t;
    t.id = rt.id.empty() ? ("tier" + std::to_string(i)) : rt.id;
    t.lambda = units::per_km2_to_per_m2(rt.lambda_per_km2);
    t.power = units::dbm_to_watts(rt.power_dbm);
    t.bias = units::db_to_linear(rt.bias_db);
    t.height = rt.height_m;
    if (!(t.power > 0.0)) throw ConfigError(tier_field(i, "power_dbm"), "power must be > 0 W");
    if (!(t.bias > 0.0)) throw ConfigError(tier_field(i, "bias_db"), "bias must be > 0 linear");
    any_positive = any_positive || t.lambda > 0.0;
    cfg.tiers.push_back(std::move(t));
  }
  if (!any_positive) throw ConfigError("tiers", "all tiers have zero intensity");

  require_finite(raw.user_height_m, "user.height_m");
  require_finite(raw.velocity_kmh, "user.velocity_kmh");
  require_finite(raw.eta, "user.eta");
  if (raw.user_height_m < 0.0) throw ConfigError("user.height_m", "must be >= 0");
  if (raw.velocity_kmh < 0.0) throw ConfigError("user.velocity_kmh", "must be >= 0");
  if (!(raw.eta > 2.0)) throw ConfigError("user.eta", "path-loss exponent must be > 2");

  cfg.user_height = raw.user_height_m;
  cfg.velocity = units::kmh_to_mps(raw.velocity_kmh);
  cfg.eta = raw.eta;
  cfg.seed = raw.seed;

  require_finite(raw.traj_length_m, "sim.traj_length_m");
  require_finite(raw.step_m, "sim.step_m");
  if (!(raw.traj_length_m > 0.0)) throw ConfigError("sim.traj_length_m", "must be > 0");
  if (!(raw.step_m > 0.0)) throw ConfigError("sim.step_m", "must be > 0");
  if (raw.realizations == 0) throw ConfigError("sim.realizations", "must be > 0");

  cfg.sim.traj_length = raw.traj_length_m;
  cfg.sim.step = raw.step_m;
  cfg.sim.realizations = raw.realizations;
  if (raw.window_side_m > 0.0) {
    require_finite(raw.window_side_m, "sim.window_side_m");
    cfg.sim.window_side = raw.window_side_m;
    if (cfg.sim.window_side < cfg.sim.traj_length + 2.0 * guard_band(cfg))
      throw ConfigError("sim.window_side_m",
                        "smaller than trajectory length plus twice the guard band");
  } else {
    cfg.sim.window_side = auto_window_side(cfg, cfg.sim.traj_length);
  }
  return cfg;
}

double guard_band(const ScenarioConfig& config) {
  double lambda_min = std::numeric_limits<double>::infinity();
  for (const TierParams& t : config.tiers)
    if (t.lambda > 0.0) lambda_min = std::min(lambda_min, t.lambda);
  return 5.0 / std::sqrt(M_PI * lambda_min);
}

double auto_window_side(const ScenarioConfig& config, double traj_length) {
  return traj_length + 2.0 * guard_band(config);
}

PairGeometry pair_geometry(const ScenarioConfig& config, std::size_t k, std::size_t j) {
  if (k >= config.tiers.size() || j >= config.tiers.size())
    throw ConfigError("tiers", "pair_geometry tier index out of range");

  const TierParams& tk = config.tiers[k];
  const TierParams& tj = config.tiers[j];

  PairGeometry g;
  g.k = k;
  g.j = j;
  g.h_uk = std::abs(config.user_height - tk.height);
  g.h_uj = std::abs(config.user_height - tj.height);

  if (k == j) {
    g.beta_kj = g.beta_jk = 1.0;
    g.lambda_kj = g.lambda_jk = 0.5;
    g.L_k = g.L_j = 0.0;
    return g;
  }

  const double ratio = (tk.bias * tk.power) / (tj.bias * tj.power);
  g.beta_kj = std::pow(ratio, 2.0 / config.eta);
  g.beta_jk = 1.0 / g.beta_kj;

  const double denom_k = tk.lambda + tj.lambda * g.beta_jk;
  const double denom_j = tj.lambda + tk.lambda * g.beta_kj;
  g.lambda_kj = denom_k > 0.0 ? tk.lambda / denom_k : 0.0;
  g.lambda_jk = denom_j > 0.0 ? tj.lambda / denom_j : 0.0;

  g.L_k = std::sqrt(std::max(0.0, g.beta_kj * g.h_uj * g.h_uj - g.h_uk * g.h_uk));
  g.L_j = std::sqrt(std::max(0.0, g.beta_jk * g.h_uk * g.h_uk - g.h_uj * g.h_uj));
  return g;
}

double association_weight(const TierParams& tier, double eta) {
  return std::pow(tier.bias * tier.power, 2.0 / eta);
}

double biased_rss_exponentless_metric(double user_x, double user_y, double user_z,
                                      double bs_x, double bs_y, double bs_z,
                                      const TierParams& tier, double eta) {
  const double dx = user_x - bs_x;
  const double dy = user_y - bs_y;
  const double dz = user_z - bs_z;
  return biased_rss_metric(dx * dx + dy * dy + dz * dz, association_weight(tier, eta));
}

}  // namespace udnho

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Scenario model for a multi-tier downlink network. A tier is a class of
// base stations sharing deployment intensity, transmit power, association
// bias and antenna height. All quantities here are in internal SI units
// (meters, watts, linear bias, m/s, BS per m^2); conversion from the
// config-file units happens once in normalize_units().

namespace udnho {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct TierParams {
  std::string id;        // label, e.g. "macro", "small"
  double lambda = 0.0;   // BS intensity, BS per m^2 (0 = empty tier)
  double power = 0.0;    // transmit power, watts
  double bias = 1.0;     // association bias, linear
  double height = 0.0;   // antenna height, meters
};

struct SimSettings {
  double window_side = 0.0;   // square window side W, meters (resolved, > 0)
  double traj_length = 0.0;   // trajectory length per realization, meters
  double step = 0.05;         // walk step, meters
  std::uint32_t realizations = 0;
};

struct ScenarioConfig {
  std::vector<TierParams> tiers;
  double user_height = 0.0;  // meters
  double velocity = 0.0;     // m/s
  double eta = 4.0;          // path-loss exponent, > 2
  std::uint64_t seed = 0;
  SimSettings sim;
};

// User-facing counterpart in config-file units. normalize_units() converts
// and validates. window_side_m <= 0 requests the auto-sizing rule
// (trajectory length plus a guard band of 5/sqrt(pi*lambda_min) per side).
struct RawTierParams {
  std::string id;
  double lambda_per_km2 = 0.0;
  double power_dbm = 0.0;
  double bias_db = 0.0;
  double height_m = 0.0;
};

struct RawScenarioConfig {
  std::vector<RawTierParams> tiers;
  double user_height_m = 0.0;
  double velocity_kmh = 0.0;
  double eta = 4.0;
  std::uint64_t seed = 1;
  double window_side_m = 0.0;  // <= 0: auto
  double traj_length_m = 1000.0;
  double step_m = 0.05;
  std::uint32_t realizations = 400;
};

// Validates all fields and converts to SI. Throws ConfigError naming the
// offending field. A tier with lambda == 0 is accepted as a degenerate
// empty tier (needed for single-tier studies); at least one tier must have
// positive intensity.
ScenarioConfig normalize_units(const RawScenarioConfig& raw);

// Guard band g = 5/sqrt(pi*lambda_min) over tiers with lambda > 0. Keeps
// the probability that any BS relevant to the trajectory lies outside the
// window at the e^-25 scale.
double guard_band(const ScenarioConfig& config);

// Auto window side for a trajectory of the given length.
double auto_window_side(const ScenarioConfig& config, double traj_length);

// Derived geometry shared by every formula of the two-tier analysis.
//
//   beta_kj   = (B_k P_k / B_j P_j)^(2/eta)
//   lambda_kj = lambda_k / (lambda_k + lambda_j * beta_jk)
//   h_uk      = |user_height - height_k|
//   L_k       = sqrt(max(0, beta_kj * h_uj^2 - h_uk^2))
//
// L_k is the horizontal distance below which a serving tier-k BS cannot be
// tied by any tier-j BS; the radicand is clamped to zero when negative.
// At most one of L_k, L_j is positive.
struct PairGeometry {
  std::size_t k = 0, j = 0;
  double beta_kj = 1.0;
  double beta_jk = 1.0;
  double lambda_kj = 0.0;
  double lambda_jk = 0.0;
  double h_uk = 0.0;
  double h_uj = 0.0;
  double L_k = 0.0;
  double L_j = 0.0;
};

PairGeometry pair_geometry(const ScenarioConfig& config, std::size_t k, std::size_t j);

// Association weight w = (B*P)^(2/eta). The biased-RSS comparison
// B*P*d^-eta reduces to minimizing d^2/w, which avoids pow() in hot loops.
double association_weight(const TierParams& tier, double eta);

// Weighted squared-distance metric for one candidate BS; smaller wins.
// d2_3d is the squared 3D user-BS distance.
inline double biased_rss_metric(double d2_3d, double weight) { return d2_3d / weight; }

// Exponentless association metric between a user position and a BS
// position (3D). Ordering across BSs matches the ordering of B*P*d^-eta.
double biased_rss_exponentless_metric(double user_x, double user_y, double user_z,
                                      double bs_x, double bs_y, double bs_z,
                                      const TierParams& tier, double eta);

}  // namespace udnho

#pragma once

#include <array>
#include <cstddef>

#include "udnho/quadrature.hpp"
#include "udnho/scenario.hpp"

// Height-aware analytical engine for the exactly-two-tier case. It derives
// association probabilities and serving-distance densities from the null
// probability of the PPP, then integrates the boundary kernel vartheta
// against those densities to obtain cell-boundary length intensities and
// handover rates. Everything is a pure function of the scenario; instances
// are immutable and safe to share across threads.

namespace udnho {

struct AssociationSplit {
  double near = 0.0;  // A_k1: serving BS inside the no-competition disc
  double far = 0.0;   // A_k2: serving BS beyond it
  double total() const { return near + far; }
};

// Horizontal distance X_k between user and serving tier-k BS.
//
// joint(x) integrates to total association probability A_k; it is the
// object the area-intensity integrals consume. conditional(x) = joint/A_k
// integrates to 1. The density is piecewise with break at L:
//   x <= L : 2*pi*lambda_k * x * exp(-pi*lambda_k*x^2)
//   x >  L : 2*pi*lambda_k * x * exp(-pi*decay*x^2 - far_offset)
struct ServiceDistanceDensity {
  std::size_t tier = 0;
  double L = 0.0;
  double lambda_k = 0.0;
  double lambda_kj = 0.0;
  double decay = 0.0;       // lambda_k + lambda_j * beta_jk
  double far_offset = 0.0;  // pi*lambda_j*(beta_jk*h_uk^2 - h_uj^2)
  AssociationSplit split;

  double near_branch(double x) const;
  double far_branch(double x) const;
  double joint(double x) const;
  double conditional(double x) const;
  // Closed-form CDF of the joint density (reaches A_k at infinity).
  double joint_cdf(double x) const;
};

struct BoundaryIntensity {
  std::size_t k = 0, j = 0;
  double term_k_serving = 0.0;  // contribution while served by tier k, 1/m
  double term_j_serving = 0.0;  // contribution while served by tier j, 1/m
  double per_length() const { return term_k_serving + term_j_serving; }
};

struct HandoverReport {
  double velocity = 0.0;                     // m/s
  std::array<std::array<double, 2>, 2> hol;  // directed HO per meter
  std::array<std::array<double, 2>, 2> rate; // directed HO per second
  double hol_intra = 0.0, hol_inter = 0.0, hol_total = 0.0;
  double rate_intra = 0.0, rate_inter = 0.0, rate_total = 0.0;
};

// Association probability of tier k against tier j, exact closed form of
// the PPP null-probability integral. lambda_k/lambda_j in BS per m^2.
AssociationSplit association_split(const PairGeometry& geom, double lambda_k, double lambda_j);

ServiceDistanceDensity service_distance_density(const PairGeometry& geom, double lambda_k,
                                                double lambda_j);

// Boundary kernel: perimeter-like measure of the ring where a tier-j BS
// would put the user on the extended k/j boundary, given serving distance
// r. Returns 0 below the existence threshold r^2 < beta_kj*h_uj^2 - h_uk^2
// (the equal-power circle has imaginary radius there). For the intra-tier
// case (beta=1, equal heights) equals 4r.
double vartheta(const PairGeometry& geom, double r, const QuadratureSettings& settings = {});
double vartheta_intra(double r);

class AnalyticalEngine {
 public:
  // Requires exactly two tiers; the boundary analysis is pairwise.
  explicit AnalyticalEngine(const ScenarioConfig& config, QuadratureSettings settings = {});

  const ScenarioConfig& config() const { return config_; }
  const QuadratureSettings& settings() const { return settings_; }
  const PairGeometry& geometry(std::size_t k) const { return geom_[k]; }

  AssociationSplit association(std::size_t k) const;
  ServiceDistanceDensity density(std::size_t k) const;

  double vartheta(std::size_t k, std::size_t j, double r) const;

  // Length intensity of inter-tier boundaries (both serving terms), 1/m.
  BoundaryIntensity inter_intensity() const;
  // Length intensity of tier-k intra-tier boundaries, 1/m.
  BoundaryIntensity intra_intensity(std::size_t k) const;

  HandoverReport report() const;

 private:
  ScenarioConfig config_;
  QuadratureSettings settings_;
  QuadratureSettings theta_settings_;
  std::array<PairGeometry, 2> geom_;  // geom_[0] = (0,1), geom_[1] = (1,0)
};

// Directed rates from the boundary intensities: intra uses 2/pi, each
// directed inter-tier type uses 1/pi of the same total inter intensity.
HandoverReport handover_report(const BoundaryIntensity& inter,
                               const std::array<BoundaryIntensity, 2>& intra, double velocity);

// Copy of the scenario with all antenna and user heights set equal; the
// "no height disparity" reference case.
ScenarioConfig flattened(const ScenarioConfig& config);

}  // namespace udnho

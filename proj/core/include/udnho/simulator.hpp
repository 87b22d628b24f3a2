#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udnho/rng.hpp"
#include "udnho/scenario.hpp"

// Monte Carlo ground truth. Each realization draws one PPP deployment per
// tier in a square window, sweeps a user along a trajectory through the
// window core, and logs biased-RSS association changes. Realizations are
// seeded as hash(master_seed, realization_index), so estimates are
// reproducible and independent of execution order.

namespace udnho {

struct Deployment {
  struct Tier {
    std::vector<double> x, y;  // meters, window-centered coordinates
    double z = 0.0;            // antenna height
    double weight = 1.0;       // (B*P)^(2/eta)
    std::size_t size() const { return x.size(); }
  };
  std::vector<Tier> tiers;
  double window_side = 0.0;
  std::uint64_t seed = 0;
};

Deployment sample_deployment(const ScenarioConfig& config, std::uint64_t realization_index);
// Same, with an explicit window side (used for association-only runs).
Deployment sample_deployment(const ScenarioConfig& config, std::uint64_t realization_index,
                             double window_side);

struct BsRef {
  std::int32_t tier = -1;
  std::int32_t index = -1;
  bool valid() const { return tier >= 0; }
  friend bool operator==(const BsRef&, const BsRef&) = default;
};

// Exact nearest-neighbor index over one tier's positions: uniform grid
// with expanding-ring search.
class SpatialGrid {
 public:
  void build(const std::vector<double>& x, const std::vector<double>& y, double window_side);

  // Index and squared distance of the nearest point, or (-1, inf) if empty.
  std::pair<std::int32_t, double> nearest(double qx, double qy) const;

  // Indices of all points within `radius` of (qx, qy), appended to `out`.
  void gather(double qx, double qy, double radius, std::vector<std::int32_t>& out) const;

  std::size_t size() const { return px_ ? px_->size() : 0; }

 private:
  std::int32_t cell_of(double v) const;

  const std::vector<double>* px_ = nullptr;
  const std::vector<double>* py_ = nullptr;
  double half_ = 0.0;
  double cell_ = 1.0;
  std::int32_t n_side_ = 0;
  std::vector<std::int32_t> cell_start_;  // CSR over cells
  std::vector<std::int32_t> order_;
};

// Argmax of biased RSS over every BS; per-tier nearest neighbor first
// (within a tier B*P is constant), then the per-tier winners compared.
// Ties break to the lowest tier index, then lowest BS index. Throws if all
// tiers are empty.
BsRef strongest_bs(const Deployment& deployment, const std::vector<SpatialGrid>& grids,
                   double user_x, double user_y, double user_z);

// Brute-force reference used by tests and small runs.
BsRef strongest_bs_scan(const Deployment& deployment, double user_x, double user_y,
                        double user_z);

struct TrajectorySpec {
  enum class Kind { kStraight, kRandomWaypoint };
  Kind kind = Kind::kStraight;
  double length = 0.0;  // meters
  double step = 0.05;   // meters
};

struct Polyline {
  std::vector<double> x, y;  // vertices
  double length = 0.0;
};

// Straight lines get a uniformly random orientation through the window
// center; random-waypoint legs stay inside the core region (guard band g
// on each side).
Polyline make_trajectory(const TrajectorySpec& spec, double window_side, double guard, Rng& rng);

struct CrossingEvent {
  double s = 0.0;  // arc-length position, meters
  BsRef from, to;
};

struct CrossingLog {
  std::vector<CrossingEvent> events;
  double exposure = 0.0;  // total trajectory length, meters
};

// Steps along the polyline, re-evaluating the association every `step`
// meters; on a change, bisects the crossing position to `refine_tol`.
// Double crossings inside one step are an accepted, step-refinement-tested
// error.
CrossingLog walk_and_log(const Deployment& deployment, const Polyline& path, double user_height,
                         double step, double refine_tol = 1e-3);

struct SimEstimate {
  double value = 0.0;
  double count = 0.0;
  double exposure = 0.0;      // trajectory meters or sample count
  double ci_halfwidth = 0.0;  // 95%, across-realization variance
  bool valid = true;          // false when exposure is insufficient
};

struct EstimateOptions {
  double traj_length_override = -1.0;  // <0: use config.sim.traj_length
  bool collect_serving_samples = false;
  TrajectorySpec::Kind trajectory_kind = TrajectorySpec::Kind::kStraight;
  std::string dump_events_path;  // raw per-event CSV; empty = no dump
};

struct SimResult {
  std::vector<SimEstimate> association;               // per tier
  std::vector<std::vector<SimEstimate>> hol;          // directed (k,j), per meter
  SimEstimate hol_total;
  std::vector<std::vector<std::uint64_t>> counts;     // raw directed event counts
  double exposure = 0.0;                              // meters
  std::uint32_t realizations = 0;
  std::vector<std::vector<double>> serving_distance_samples;  // per tier, horizontal m
};

// Aggregates association drops (one per realization, at the window center)
// and crossing counts over n_realizations independent realizations.
SimResult estimate(const ScenarioConfig& config, std::uint32_t n_realizations,
                   const EstimateOptions& options = {});

}  // namespace udnho

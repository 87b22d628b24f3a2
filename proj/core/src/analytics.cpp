#include "udnho/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace udnho {

namespace {

constexpr double kPi = M_PI;

double sq(double x) { return x * x; }

}  // namespace

AssociationSplit association_split(const PairGeometry& geom, double lambda_k, double lambda_j) {
  const double denom = lambda_k + lambda_j * geom.beta_jk;
  if (denom <= 0.0) return {};  // both tiers empty
  const double lambda_kj = lambda_k / denom;

  // radicand_k = L_k^2 when positive; radicand_j = -beta_jk * radicand_k.
  const double radicand = geom.beta_kj * sq(geom.h_uj) - sq(geom.h_uk);

  AssociationSplit split;
  if (radicand >= 0.0) {
    const double decay = std::exp(-kPi * lambda_k * radicand);
    split.near = -std::expm1(-kPi * lambda_k * radicand);
    split.far = lambda_kj * decay;
  } else {
    split.near = 0.0;
    split.far = lambda_kj * std::exp(kPi * lambda_j * geom.beta_jk * radicand);
  }
  return split;
}

ServiceDistanceDensity service_distance_density(const PairGeometry& geom, double lambda_k,
                                                double lambda_j) {
  ServiceDistanceDensity d;
  d.tier = geom.k;
  d.L = geom.L_k;
  d.lambda_k = lambda_k;
  d.decay = lambda_k + lambda_j * geom.beta_jk;
  d.lambda_kj = d.decay > 0.0 ? lambda_k / d.decay : 0.0;
  d.far_offset = kPi * lambda_j * (geom.beta_jk * sq(geom.h_uk) - sq(geom.h_uj));
  d.split = association_split(geom, lambda_k, lambda_j);
  return d;
}

double ServiceDistanceDensity::near_branch(double x) const {
  return 2.0 * kPi * lambda_k * x * std::exp(-kPi * lambda_k * x * x);
}

double ServiceDistanceDensity::far_branch(double x) const {
  return 2.0 * kPi * lambda_k * x * std::exp(-kPi * decay * x * x - far_offset);
}

double ServiceDistanceDensity::joint(double x) const {
  if (x < 0.0) return 0.0;
  return x <= L ? near_branch(x) : far_branch(x);
}

double ServiceDistanceDensity::conditional(double x) const {
  const double total = split.total();
  return total > 0.0 ? joint(x) / total : 0.0;
}

double ServiceDistanceDensity::joint_cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x <= L) return -std::expm1(-kPi * lambda_k * x * x);
  const double head = split.near;
  const double tail = lambda_kj * std::exp(-far_offset) *
                      (std::exp(-kPi * decay * L * L) - std::exp(-kPi * decay * x * x));
  return head + tail;
}

double vartheta_intra(double r) { return 4.0 * r; }

double vartheta(const PairGeometry& geom, double r, const QuadratureSettings& settings) {
  if (geom.k == geom.j) return vartheta_intra(r);

  const double beta = geom.beta_kj;
  const double q_sq = (r * r + sq(geom.h_uk)) / beta - sq(geom.h_uj);
  if (q_sq < 0.0) return 0.0;  // no tier-j BS can tie at this serving distance

  // The printed radicand r^2(beta+1) + h_uk^2 beta - h_uj^2 beta^2
  // - 2 beta r cos(t) Q equals r^2 + (beta Q)^2 - 2 r (beta Q) cos(t),
  // which is non-negative by the law of cosines; only float noise can dip
  // below zero.
  const double bq = beta * std::sqrt(q_sq);
  const double scale = r * r + bq * bq;
  const Integrand integrand = [&](double theta) {
    const double radicand = scale - 2.0 * r * bq * std::cos(theta);
    if (radicand < 0.0) {
      if (radicand < -1e-9 * scale)
        throw std::runtime_error("vartheta: boundary radicand negative beyond float noise");
      return 0.0;
    }
    return std::sqrt(radicand);
  };
  return integrate_finite(integrand, 0.0, kPi, settings).value / beta;
}

AnalyticalEngine::AnalyticalEngine(const ScenarioConfig& config, QuadratureSettings settings)
    : config_(config), settings_(settings), theta_settings_(settings) {
  if (config_.tiers.size() != 2)
    throw ConfigError("tiers", "analytical engine requires exactly 2 tiers, got " +
                                   std::to_string(config_.tiers.size()));
  // Inner theta integrals run tighter so their noise stays below the
  // radial tolerance.
  theta_settings_.rel_tol = settings_.rel_tol * 1e-2;
  theta_settings_.abs_tol = settings_.abs_tol;
  geom_[0] = pair_geometry(config_, 0, 1);
  geom_[1] = pair_geometry(config_, 1, 0);
}

AssociationSplit AnalyticalEngine::association(std::size_t k) const {
  return association_split(geom_[k], config_.tiers[k].lambda, config_.tiers[1 - k].lambda);
}

ServiceDistanceDensity AnalyticalEngine::density(std::size_t k) const {
  return service_distance_density(geom_[k], config_.tiers[k].lambda,
                                  config_.tiers[1 - k].lambda);
}

double AnalyticalEngine::vartheta(std::size_t k, std::size_t j, double r) const {
  if (k == j) return vartheta_intra(r);
  return udnho::vartheta(geom_[k], r, theta_settings_);
}

BoundaryIntensity AnalyticalEngine::inter_intensity() const {
  BoundaryIntensity out;
  out.k = 0;
  out.j = 1;

  // mu(T_kj)/(2*dd) as dd->0: sum over the serving tier of
  // integral_{L_k}^inf lambda_j * vartheta_kj(x) * g_k(x) dx.
  const auto serving_term = [&](std::size_t k) -> double {
    const std::size_t j = 1 - k;
    const double lambda_j = config_.tiers[j].lambda;
    const ServiceDistanceDensity g = density(k);
    if (lambda_j <= 0.0 || g.lambda_k <= 0.0) return 0.0;
    const PairGeometry& geom = geom_[k];
    const Integrand f = [&](double x) {
      return lambda_j * udnho::vartheta(geom, x, theta_settings_) * g.joint(x);
    };
    return integrate_semi_infinite(f, geom.L_k, kPi * g.decay, settings_).value;
  };

  out.term_k_serving = serving_term(0);
  out.term_j_serving = serving_term(1);
  return out;
}

BoundaryIntensity AnalyticalEngine::intra_intensity(std::size_t k) const {
  BoundaryIntensity out;
  out.k = out.j = k;

  const double lambda_k = config_.tiers[k].lambda;
  if (lambda_k <= 0.0) return out;

  const ServiceDistanceDensity g = density(k);
  const Integrand near = [&](double x) { return lambda_k * vartheta_intra(x) * g.near_branch(x); };
  const Integrand far = [&](double x) { return lambda_k * vartheta_intra(x) * g.far_branch(x); };

  double total = 0.0;
  if (g.L > 0.0) total += integrate_finite(near, 0.0, g.L, settings_).value;
  total += integrate_semi_infinite(far, g.L, kPi * g.decay, settings_).value;
  out.term_k_serving = total;
  return out;
}

HandoverReport AnalyticalEngine::report() const {
  const std::array<BoundaryIntensity, 2> intra = {intra_intensity(0), intra_intensity(1)};
  return handover_report(inter_intensity(), intra, config_.velocity);
}

HandoverReport handover_report(const BoundaryIntensity& inter,
                               const std::array<BoundaryIntensity, 2>& intra, double velocity) {
  HandoverReport r;
  r.velocity = velocity;
  const double inter_mu = inter.per_length();
  for (std::size_t k = 0; k < 2; ++k) {
    r.hol[k][k] = (2.0 / kPi) * intra[k].per_length();
    r.hol[k][1 - k] = (1.0 / kPi) * inter_mu;
  }
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t j = 0; j < 2; ++j) r.rate[k][j] = r.hol[k][j] * velocity;

  r.hol_intra = r.hol[0][0] + r.hol[1][1];
  r.hol_inter = r.hol[0][1] + r.hol[1][0];
  r.hol_total = r.hol_intra + r.hol_inter;
  r.rate_intra = r.hol_intra * velocity;
  r.rate_inter = r.hol_inter * velocity;
  r.rate_total = r.hol_total * velocity;
  return r;
}

ScenarioConfig flattened(const ScenarioConfig& config) {
  ScenarioConfig flat = config;
  flat.user_height = 0.0;
  for (TierParams& t : flat.tiers) t.height = 0.0;
  return flat;
}

}  // namespace udnho

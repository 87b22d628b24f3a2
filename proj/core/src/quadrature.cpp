#include "udnho/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace udnho {

namespace {

template <int N>
struct GaussRule {
  std::array<double, N> node;    // on [-1, 1]
  std::array<double, N> weight;
};

// Nodes/weights by Newton iteration on the Legendre recurrence; computed
// once, accurate to machine precision.
template <int N>
GaussRule<N> make_gauss_rule() {
  GaussRule<N> rule{};
  const int half = (N + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= N; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      dp = N * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.node[i] = -x;
    rule.node[N - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weight[i] = w;
    rule.weight[N - 1 - i] = w;
  }
  return rule;
}

const GaussRule<15>& rule15() {
  static const GaussRule<15> r = make_gauss_rule<15>();
  return r;
}

const GaussRule<7>& rule7() {
  static const GaussRule<7> r = make_gauss_rule<7>();
  return r;
}

struct Segment {
  double a, b;
  double value;  // 15-point estimate
  double err;    // |G15 - G7|
};

Segment evaluate(const Integrand& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double g15 = 0.0;
  for (int i = 0; i < 15; ++i) g15 += rule15().weight[i] * f(mid + half * rule15().node[i]);
  g15 *= half;
  double g7 = 0.0;
  for (int i = 0; i < 7; ++i) g7 += rule7().weight[i] * f(mid + half * rule7().node[i]);
  g7 *= half;
  return Segment{a, b, g15, std::abs(g15 - g7)};
}

}  // namespace

IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureSettings& settings) {
  if (!(a <= b)) throw QuadratureError("integrate_finite: requires a <= b", {});
  if (a == b) return {0.0, 0.0, 0};

  std::vector<Segment> segs;
  segs.reserve(static_cast<std::size_t>(settings.max_subdivisions) + 1);
  segs.push_back(evaluate(f, a, b));

  int splits = 0;
  for (;;) {
    double total = 0.0, total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      total_err += segs[i].err;
      if (segs[i].err > segs[worst].err) worst = i;  // ties keep the leftmost
    }
    if (!std::isfinite(total))
      throw QuadratureError("integrate_finite: integrand returned non-finite value",
                            {total, total_err, splits});

    const double tol = std::max(settings.abs_tol, settings.rel_tol * std::abs(total));
    if (total_err <= tol) return {total, total_err, splits};

    if (splits >= settings.max_subdivisions) {
      throw QuadratureError(
          "integrate_finite: no convergence after " + std::to_string(splits) +
              " subdivisions (error estimate " + std::to_string(total_err) + ")",
          {total, total_err, splits});
    }
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    segs[worst] = evaluate(f, s.a, mid);
    segs.push_back(evaluate(f, mid, s.b));
    ++splits;
  }
}

IntegrationResult integrate_semi_infinite(const Integrand& f, double a, double envelope_c,
                                          const QuadratureSettings& settings) {
  if (!(a >= 0.0)) throw QuadratureError("integrate_semi_infinite: requires a >= 0", {});
  if (!(envelope_c > 0.0))
    throw QuadratureError("integrate_semi_infinite: requires envelope_c > 0", {});

  const double tail = std::log(1.0 / settings.tail_epsilon) / envelope_c;
  const double cutoff = 2.0 * std::sqrt(std::max(a * a, tail));
  return integrate_finite(f, a, cutoff, settings);
}

}  // namespace udnho

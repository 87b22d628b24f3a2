#pragma once

#include <functional>
#include <stdexcept>
#include <string>

// Deterministic 1D quadrature for the analytical engine: an adaptive
// Gauss-Legendre rule (order 15 with an embedded order-7 error estimate)
// for finite intervals, and a truncate-then-integrate wrapper for
// semi-infinite integrands with a known Gaussian envelope exp(-c*x^2).
//
// Integrands may be piecewise (e.g. return 0 below a geometric threshold);
// adaptive bisection resolves the kinks and square-root endpoints.

namespace udnho {

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_subdivisions = 60;   // total interval bisections
  double tail_epsilon = 1e-12; // semi-infinite truncation threshold
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, IntegrationResult best)
      : std::runtime_error(what), best_(best) {}
  const IntegrationResult& best_estimate() const { return best_; }

 private:
  IntegrationResult best_;
};

using Integrand = std::function<double(double)>;

// Integral of f over [a, b]. Postcondition for smooth-enough f:
// |value - true| <= max(abs_tol, rel_tol * |value|). Throws
// QuadratureError carrying the best estimate and achieved tolerance if the
// subdivision cap is exhausted first.
IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureSettings& settings = {});

// Integral of f over [a, inf) for f bounded by poly(x) * exp(-c*x^2).
// Truncates at X = 2 * sqrt(max(a^2, ln(1/tail_epsilon)/c)) and delegates
// to integrate_finite; the envelope mass beyond X is below
// tail_epsilon^4-scale relative to the head.
IntegrationResult integrate_semi_infinite(const Integrand& f, double a, double envelope_c,
                                          const QuadratureSettings& settings = {});

}  // namespace udnho

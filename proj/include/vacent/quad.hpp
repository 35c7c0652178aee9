#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <vector>

namespace vacent::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
};

/// Adaptive Gauss-Kronrod on [a, b] for smooth integrands.
template <class F>
Result gauss_kronrod(F&& f, double a, double b, double rel_tol = 1e-11, int max_depth = 15) {
  Result r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol, &r.error);
  return r;
}

/// tanh-sinh on [a, b]; converges fast even with integrable endpoint
/// singularities (the log kernels of the Milne elements).
template <class F>
Result tanh_sinh(F&& f, double a, double b, double tol = 1e-11) {
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator(15);
  Result r;
  double l1 = 0.0;
  r.value = integrator.integrate(f, a, b, tol, &r.error, &l1);
  r.error *= std::max(l1, std::abs(r.value));  // boost reports relative error
  return r;
}

/// Integrates over the panels defined by sorted breakpoints. Panels whose
/// endpoint touches `singular_at` use tanh-sinh (integrable endpoint
/// singularity); the rest use adaptive Gauss-Kronrod.
template <class F>
Result over_panels(F&& f, const std::vector<double>& breakpoints, double tol = 1e-11,
                   double singular_at = std::numeric_limits<double>::quiet_NaN()) {
  Result total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i], b = breakpoints[i + 1];
    if (!(b > a)) continue;
    const bool singular = (a == singular_at || b == singular_at);
    Result r = singular ? tanh_sinh(f, a, b, tol) : gauss_kronrod(f, a, b, tol);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

}  // namespace vacent::quad

#include "vacent/modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacent {

Interval::Interval(double x1_, double x2_) : x1(x1_), x2(x2_) {
  if (!(x2 > x1)) throw std::invalid_argument("Interval requires x2 > x1");
  if (!std::isfinite(x1) || !std::isfinite(x2))
    throw std::invalid_argument("Interval endpoints must be finite");
}

double ModeBasis::wavenumber(int n) const {
  return std::numbers::pi * n / interval.length();
}

double ModeBasis::omega(int n) const {
  return std::hypot(wavenumber(n), mass);
}

double mode_function(const ModeBasis& basis, int n, double x) {
  if (n < 1 || n > basis.n_modes) throw std::invalid_argument("mode index out of range");
  if (x < basis.interval.x1 || x > basis.interval.x2)
    throw std::invalid_argument("mode_function: x outside the interval");
  if (x == basis.interval.x1 || x == basis.interval.x2) return 0.0;
  const double r = basis.interval.length();
  return std::sqrt(2.0 / r) * std::sin(basis.wavenumber(n) * (x - basis.interval.x1));
}

SmearingWeights smearing_weights(const ModeBasis& basis, int n) {
  if (n < 1 || n > basis.n_modes) throw std::invalid_argument("mode index out of range");
  if (basis.weighting == Weighting::Unweighted) return {1.0, 1.0};
  const double w = std::sqrt(basis.omega(n));
  return {w, 1.0 / w};
}

}  // namespace vacent

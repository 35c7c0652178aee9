#include "vacent/kernels.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacent {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double euler_gamma = std::numbers::egamma;
}  // namespace

Geometry Geometry::milne(double tau, double a_scale) {
  if (!(tau > 0.0)) throw std::invalid_argument("Milne tau must be positive");
  if (!(a_scale > 0.0)) throw std::invalid_argument("Milne a_scale must be positive");
  Geometry g;
  g.kind = Kind::Milne;
  g.tau = tau;
  g.a_scale = a_scale;
  return g;
}

double FieldParams::effective_mass() const {
  if (mass > 0.0) return mass;
  if (log_ir_regulator) {
    double m = std::exp(*log_ir_regulator);
    if (!(m > 0.0))
      throw std::domain_error(
          "IR regulator underflows double; this configuration is only usable "
          "through log_effective_mass()");
    return m;
  }
  if (!(ir_regulator_mass > 0.0))
    throw std::invalid_argument("ir_regulator_mass must be positive");
  return ir_regulator_mass;
}

double FieldParams::log_effective_mass() const {
  if (mass > 0.0) return std::log(mass);
  if (log_ir_regulator) return *log_ir_regulator;
  if (!(ir_regulator_mass > 0.0))
    throw std::invalid_argument("ir_regulator_mass must be positive");
  return std::log(ir_regulator_mass);
}

double phi_phi_flat(double dx, const FieldParams& params) {
  if (dx == 0.0)
    throw std::domain_error("phi_phi_flat: on-diagonal singularity; use the smeared element path");
  const double m = params.effective_mass();
  const double w = m * std::abs(dx);
  // K0 overflows the series region only for tiny arguments; use the log form
  // there to avoid losing the additive structure.
  if (w < 1e-8) return -(std::log(0.5 * w) + euler_gamma) / two_pi;
  return boost::math::cyl_bessel_k(0, w) / two_pi;
}

double phi_phi_milne(double dz, const Geometry& geometry, const FieldParams& params) {
  if (geometry.kind != Geometry::Kind::Milne)
    throw std::invalid_argument("phi_phi_milne requires a Milne geometry");
  if (dz == 0.0)
    throw std::domain_error("phi_phi_milne: on-diagonal singularity; use the smeared element path");
  const double log_m = params.log_effective_mass();
  if (log_m + std::log(geometry.tau) >= std::log(0.1))
    throw std::domain_error("phi_phi_milne: small-mass approximation invalid (M0 tau >= 0.1)");
  const double s = std::abs(std::sinh(0.5 * dz));
  return -(log_m + std::log(geometry.tau) + std::log(s) + euler_gamma) / two_pi;
}

double pi_pi_milne(double dz) {
  if (dz == 0.0)
    throw std::domain_error(
        "pi_pi_milne: on-diagonal singularity; use the integrated-by-parts element path");
  const double s = std::sinh(0.5 * dz);
  return -1.0 / (8.0 * std::numbers::pi * s * s);
}

MilneCrossKernel phi_pi_milne_cross(double /*dz*/) {
  return {-1.0 / (4.0 * std::numbers::pi), true};
}

}  // namespace vacent

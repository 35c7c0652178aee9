#pragma once

#include <optional>

namespace vacent {

/// Hypersurface geometry. Flat surfaces are constant-t slices of 1+1
/// Minkowski space; Milne surfaces are constant-eta slices of the interior
/// of the future lightcone, x = (e^{a eta}/a) sinh(a z),
/// t = (e^{a eta}/a) cosh(a z). Points on a Milne slice are labelled by the
/// dimensionless rapidity z.
struct Geometry {
  enum class Kind { Flat, Milne };

  Kind kind = Kind::Flat;
  double tau = 1.0;      ///< Milne conformal time, tau = e^{eta} (length units)
  double a_scale = 1.0;  ///< Milne acceleration parameter (inverse length)

  static Geometry flat() { return {}; }
  static Geometry milne(double tau, double a_scale = 1.0);
};

/// Scalar-field parameters. The 1+1 massless field is infrared divergent,
/// so massless runs substitute a small regulator mass. Regulators below the
/// double range can be given as a log (only the Milne kernels, which depend
/// on the mass additively through its log, accept those).
struct FieldParams {
  double mass = 0.0;                       ///< field mass M0 (inverse length)
  double ir_regulator_mass = 1e-14;        ///< used when mass == 0
  std::optional<double> log_ir_regulator;  ///< overrides ir_regulator_mass

  /// Effective mass for kernels evaluated in linear scale. Throws if the
  /// regulator is only representable as a log.
  double effective_mass() const;

  /// log of the effective mass; exact even for regulators like e^{-5000}.
  double log_effective_mass() const;
};

/// Equal-time vacuum <phi(x) phi(x')> of the massive field on a flat
/// surface, as a function of dx = x - x'. Equals (1/2pi) K0(M |dx|).
double phi_phi_flat(double dx, const FieldParams& params);

/// Minkowski-vacuum <phi(z) phi(z')> restricted to a constant-eta Milne
/// slice, small-mass limit: -(1/2pi) [log(M tau |sinh(dz/2)|) + gamma_E],
/// the K0 kernel evaluated at the proper distance 2 tau sinh(|dz|/2).
/// Requires M0 tau < 0.1.
double phi_phi_milne(double dz, const Geometry& geometry, const FieldParams& params);

/// <pi(z) pi(z')> on a Milne slice (massless limit), pi = d phi / d eta.
/// Equals -(1/8pi) / sinh^2(dz/2); independent of eta.
double pi_pi_milne(double dz);

struct MilneCrossKernel {
  double value;
  bool constant_in_dz;
};

/// Symmetrized <{phi(z), pi(z')}>/2 at equal eta on a Milne slice. Unlike
/// the flat equal-time case this does not vanish: it is the constant
/// -1/(4pi) for every dz.
MilneCrossKernel phi_pi_milne_cross(double dz);

}  // namespace vacent

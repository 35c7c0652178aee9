#pragma once

namespace vacent {

/// Closed interval on a hypersurface (length units on flat slices,
/// rapidity units on Milne slices).
struct Interval {
  double x1;
  double x2;

  Interval(double x1_, double x2_);
  double length() const { return x2 - x1; }
  bool operator==(const Interval&) const = default;
};

enum class Weighting { FrequencyWeighted, Unweighted };

/// Orthonormal sine basis on an interval: unit shapes
/// sqrt(2/R) sin(k_n (x - x1)) with k_n = pi n / R, vanishing at both
/// endpoints. The frequency-weighted variant attaches sqrt(omega_n) to the
/// field smearing and 1/sqrt(omega_n) to the momentum smearing,
/// omega_n = sqrt(k_n^2 + M0^2).
struct ModeBasis {
  Interval interval;
  int n_modes;
  Weighting weighting = Weighting::FrequencyWeighted;
  double mass = 0.0;

  double wavenumber(int n) const;
  double omega(int n) const;
};

/// Unit-normalized mode shape sqrt(2/R) sin(k_n (x - x1)); exactly zero at
/// the endpoints. n must be in [1, n_modes] and x inside the interval.
double mode_function(const ModeBasis& basis, int n, double x);

struct SmearingWeights {
  double field;
  double momentum;
};

/// The normalization factors multiplying the unit shape in the field and
/// momentum smearings. Their product is 1, which is what makes the smeared
/// pairs canonical: [psi_n, pi_m] = i delta_nm.
SmearingWeights smearing_weights(const ModeBasis& basis, int n);

}  // namespace vacent

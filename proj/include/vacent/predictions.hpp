#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace vacent {

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
};

/// Four-point cross ratio of ordered interval endpoints on a line,
/// y = (x2-x1)(x4-x3) / ((x3-x1)(x4-x2)), in (0, 1].
double cross_ratio_flat(double x1, double x2, double x3, double x4);

/// Cross ratio built from Minkowski intervals |u_i - u_j| between spacetime
/// endpoints; reduces to the flat form at equal times and to the sinh form
/// on a constant-eta Milne slice. All four pairings must be spacelike.
double cross_ratio_general(const SpacetimePoint& u1, const SpacetimePoint& u2,
                           const SpacetimePoint& u3, const SpacetimePoint& u4);

/// Milne-slice cross ratio in rapidity coordinates,
/// sinh((z2-z1)/2) sinh((z4-z3)/2) / (sinh((z4-z2)/2) sinh((z3-z1)/2)).
double cross_ratio_milne(double z1, double z2, double z3, double z4);

/// Complete elliptic integral of the first kind in the parameter
/// convention: K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta).
double complete_elliptic_k(double m);

/// Two-interval negativity law for y near 1:
/// E_N = -1/4 log(1-y) - 1/2 log(K(y)) + C.
double negativity_law(double y, double c);

/// Effective cross ratio of touching unit intervals truncated at N modes:
/// (1 + a/(2 pi N))^{-2}.
double effective_cutoff_y(int n_modes, double a);

/// Single-region entropy law on a Milne slice with region size Delta*N:
/// (1/3) log(2 tau sinh(Delta N / 2) / (tau kappa)); tau cancels exactly.
double milne_entropy_law(double delta, int n_modes, double tau, double kappa);

struct FitResult {
  double slope = 0.0;
  double offset = 0.0;
  double residual_rms = 0.0;
  std::size_t n_points = 0;
};

/// Least-squares fit of S = slope * log(N) + offset.
FitResult fit_linear_log(const std::vector<std::pair<double, double>>& n_s_points);

/// Least-squares fit of the additive constant C in negativity_law to
/// (y, E_N) samples; slope is reported as 0.
FitResult fit_negativity_offset(const std::vector<std::pair<double, double>>& y_e_points);

/// One-parameter fit of the cutoff constant a such that
/// negativity_law(effective_cutoff_y(N, a), c) matches (N, E_N) samples;
/// golden-section search on the residual rms. Returns {slope = a, offset = c}.
FitResult fit_effective_cutoff_a(const std::vector<std::pair<int, double>>& n_e_points, double c);

}  // namespace vacent

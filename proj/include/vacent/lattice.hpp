#pragma once

#include <optional>

#include "vacent/covariance.hpp"

namespace vacent {

/// Harmonic chain H = 1/2 sum p_j^2 + 1/2 q^T K q with K the discrete
/// Laplacian plus mass term; the independent brute-force oracle for the
/// continuum pipeline. Open boundaries anchor the field to zero beyond both
/// ends, so the massless open chain has no zero mode; the periodic chain
/// does and needs the regulator mass.
struct SiteRange {
  int first = 0;
  int count = 0;
};

enum class ChainBoundary { Open, Periodic };

struct ChainConfig {
  int n_sites = 64;
  double lattice_spacing = 1.0;
  double mass = 0.0;  ///< 0 selects the regulator below
  double regulator_mass_per_spacing = 1e-8;
  ChainBoundary boundary = ChainBoundary::Open;
  SiteRange region_a;
  std::optional<SiteRange> region_b;

  double effective_mass() const;
  void validate() const;
};

/// Ground-state covariance matrix of the chain restricted to the configured
/// site ranges, in the site basis and the same normalization and ordering
/// as the continuum assembly (position block K^{-1/2}, momentum block
/// K^{1/2}, cross block zero).
CovarianceMatrix ground_state_cm(const ChainConfig& config);

struct NegativityComparison {
  double continuum = 0.0;
  double lattice = 0.0;
  double abs_diff = 0.0;
};

/// Runs the continuum and lattice pipelines on geometrically matching
/// two-region configurations and reports both logarithmic negativities.
/// Throws if the chain regions do not match the continuum intervals (sites
/// per unit length and separation consistent within half a site).
NegativityComparison compare_negativity(const RegionConfig& continuum,
                                        const ChainConfig& chain);

}  // namespace vacent

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "vacent/covariance.hpp"
#include "vacent/symplectic.hpp"

namespace vacent {

/// Spatial weight functions of one Williamson normal mode: the field
/// profile f_n(z) and momentum profile g_n(z), normalized so that
/// int f_n g_n over all regions equals 1. Coefficients are with respect to
/// the smeared mode operators; profiles are their finite sine sums sampled
/// on a uniform grid per region.
struct WilliamsonMode {
  int index = 0;
  double symplectic_value = 0.0;  ///< nu (or nu-tilde when transposed)
  bool transposed = false;
  bool degenerate = false;  ///< nu within 1e-7 of a neighbour; span-defined only
  bool entangled = false;   ///< transposed spectra: nu-tilde < 1

  Eigen::VectorXd f_coeffs;  ///< length Na (+ Nb), region blocks stacked
  Eigen::VectorXd g_coeffs;

  struct Profile {
    std::vector<double> z, f, g;
  };
  Profile region_a;
  Profile region_b;  ///< empty for single-region matrices
};

/// Williamson modes of an assembled covariance matrix (transposed = true
/// first applies the region-B partial transpose). Modes are sorted by
/// entanglement relevance: descending nu for untransposed spectra,
/// ascending nu-tilde for transposed ones. The eigenvector phase is fixed
/// so the largest-magnitude f coefficient is positive. Requires vanishing
/// field-momentum cross blocks (assemble the Milne matrices with
/// include_cross_block = false for profile work).
std::vector<WilliamsonMode> williamson_modes(const CovarianceMatrix& m,
                                             const RegionConfig& config, bool transposed,
                                             int grid_points = 512);

/// Centroid int z f(z)^2 dz / int f(z)^2 dz of the mode's field profile
/// over one region. Throws on a zero-norm profile.
double mode_centroid(const WilliamsonMode& mode, Region region);

/// Writes one columnar text file (z, f, g) per mode and region into dir.
void write_profiles(const std::vector<WilliamsonMode>& modes, const std::string& dir);

}  // namespace vacent

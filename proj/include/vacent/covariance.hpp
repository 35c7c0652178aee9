#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "vacent/kernels.hpp"
#include "vacent/modes.hpp"

namespace vacent {

struct QuadratureOptions {
  double rel_tol = 1e-11;   ///< per-element target relative accuracy
  int max_depth = 15;       ///< adaptive bisection depth (flat contour integrals)
  double fail_rel = 1e-9;   ///< estimated error above this fraction of |value| fails the element
};

/// One or two intervals on a hypersurface together with everything needed
/// to assemble the covariance matrix of their lowest discretizer modes.
struct RegionConfig {
  Geometry geometry;
  Interval region_a{0.0, 1.0};
  std::optional<Interval> region_b;
  int n_modes = 8;
  std::optional<int> n_modes_b_override;  ///< unequal mode counts (saturation studies)
  FieldParams params;
  bool include_cross_block = false;  ///< Milne phi-pi blocks (flat ones vanish)
  std::optional<Weighting> weighting_override;
  QuadratureOptions quad;

  int modes_a() const { return n_modes; }
  int modes_b() const { return n_modes_b_override.value_or(n_modes); }

  /// FrequencyWeighted on flat slices, Unweighted on Milne slices, unless
  /// overridden.
  Weighting weighting() const;

  /// Separation between the regions (x3 - x2); regions must be ordered and
  /// disjoint or touching.
  double separation() const;

  ModeBasis basis_a() const;
  ModeBasis basis_b() const;

  void validate() const;

  /// Exact decimal serialization of every parameter; keys the element cache.
  std::string canonical_key() const;
};

/// Covariance matrix of the smeared modes, in the ordering
/// O = (psi^A_1..psi^A_Na, pi^A_1..pi^A_Na[, psi^B.., pi^B..]) and the
/// normalization in which a pure vacuum mode has symplectic eigenvalue 1
/// (entries are twice the symmetrized correlators).
struct CovarianceMatrix {
  Eigen::MatrixXd mat;
  int n_modes_a = 0;
  int n_modes_b = 0;  ///< 0 for a single region
  bool transposed = false;
  double max_quad_error = 0.0;  ///< largest estimated element error

  int dim() const { return static_cast<int>(mat.rows()); }
  bool two_region() const { return n_modes_b > 0; }

  /// The symplectic form Omega with i Omega_ij = [O_i, O_j].
  Eigen::MatrixXd symplectic_form() const;
};

enum class ElementKind { PhiPhi, PiPi };

struct ElementResult {
  double value = 0.0;
  double error = 0.0;
};

/// Flat-surface covariance element between mode n smeared on A and mode m
/// smeared on B, by the contour-integrated semi-infinite form (monotone
/// integrand). Intervals may coincide (self block, which carries the
/// Kronecker delta term) or be disjoint. `weighting` selects the basis
/// convention of both modes.
ElementResult flat_pair_element(const Interval& a, const Interval& b, int n, int m,
                                ElementKind kind, const FieldParams& params,
                                Weighting weighting = Weighting::FrequencyWeighted,
                                const QuadratureOptions& quad = {});

/// Milne-surface covariance element (double quadrature of the log kernels,
/// reduced to one dimension through the closed-form sine cross-correlation;
/// the pi-pi kernel uses the integrated-by-parts log form).
ElementResult milne_pair_element(const Interval& a, const Interval& b, int n, int m,
                                 ElementKind kind, const Geometry& geometry,
                                 const FieldParams& params,
                                 Weighting weighting = Weighting::Unweighted,
                                 const QuadratureOptions& quad = {});

/// Milne phi-pi cross element; the kernel is the constant -1/(4pi), so this
/// is closed-form. Nonzero only when both mode indices are odd.
double milne_cross_element(const Interval& a, const Interval& b, int n, int m,
                           Weighting weighting = Weighting::Unweighted,
                           const FieldParams& params = {});

/// The two spec-level flat element operations in R = 1 units. l_eff >= 0 is
/// the separation between the two unit intervals; l_eff = -1 selects the
/// coincident-interval prescription. The Kronecker delta term is always
/// included, matching the printed contour form; between genuinely separated
/// regions the physical element is the value minus delta_nm (assemble takes
/// care of that), so these tend to delta_nm as l_eff -> infinity.
double flat_element_phi_phi(int n, int m, double l_eff, const FieldParams& params,
                            const QuadratureOptions& quad = {});
double flat_element_pi_pi(int n, int m, double l_eff, const FieldParams& params,
                          const QuadratureOptions& quad = {});

/// Assemble the covariance matrix of the configuration; element jobs run in
/// parallel (the result does not depend on evaluation order). Throws if the
/// matrix violates the physical-state bound (min symplectic eigenvalue
/// below 1 - 1e-3), which signals a convention or quadrature bug upstream.
CovarianceMatrix assemble(const RegionConfig& config);

/// Serial reference assembly; kept as the equivalence partner for the
/// parallel path and for the benchmark target. Produces bit-identical
/// matrices.
CovarianceMatrix assemble_reference(const RegionConfig& config);

}  // namespace vacent

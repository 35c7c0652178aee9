#pragma once

#include <vector>

#include "vacent/covariance.hpp"

namespace vacent {

/// Symplectic eigenvalues in descending order; one entry per mode pair
/// (dim/2 of the source matrix). transposed marks spectra of partially
/// transposed matrices (nu-tilde).
struct SymplecticSpectrum {
  std::vector<double> values;
  bool transposed = false;
};

/// Moduli of the paired +-i nu_k eigenvalues of Omega M, computed through
/// the symmetric eigenproblem of (M^{1/2} Omega M^{1/2})^T (M^{1/2} Omega
/// M^{1/2}). Throws "invalid covariance matrix" if M is not positive
/// definite, and refuses to silently drop eigenvalues that fail to pair
/// within relative 1e-7.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& m);

enum class Region { A, B };

/// Momentum sign flip on the chosen region's quadratures. Involutive and
/// exact (entries are negated bitwise). Two-region matrices only.
CovarianceMatrix partial_transpose(const CovarianceMatrix& m, Region region = Region::B);

/// Von Neumann entropy of the Gaussian state with the given (untransposed)
/// symplectic spectrum, natural log. A nu = 1 pair contributes exactly 0.
double entanglement_entropy(const SymplecticSpectrum& spectrum);

/// Logarithmic negativity -sum log(nu-tilde_k) over the sub-unity
/// eigenvalues of a partially transposed spectrum; 0 when there are none.
/// Eigenvalues within 1e-9 of 1 are treated as exactly 1.
double log_negativity(const SymplecticSpectrum& spectrum);

}  // namespace vacent

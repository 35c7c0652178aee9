#include "vacent/symplectic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vacent {

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& m) {
  const int dim = m.dim();
  if (dim == 0 || dim % 2 != 0) throw std::invalid_argument("covariance matrix dimension");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("invalid covariance matrix (not positive definite)");

  const Eigen::MatrixXd sqrt_m =
      es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  const Eigen::MatrixXd a = sqrt_m * m.symplectic_form() * sqrt_m;  // antisymmetric
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(a.transpose() * a);
  if (es2.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

  std::vector<double> nu(dim);
  for (int i = 0; i < dim; ++i) nu[i] = std::sqrt(std::max(0.0, es2.eigenvalues()(i)));
  std::sort(nu.begin(), nu.end(), std::greater<>());

  SymplecticSpectrum spec;
  spec.transposed = m.transposed;
  spec.values.reserve(dim / 2);
  for (int i = 0; i < dim; i += 2) {
    const double gap = std::abs(nu[i] - nu[i + 1]);
    if (gap > 1e-7 * std::max(1.0, nu[i]))
      throw std::runtime_error("unpaired symplectic eigenvalue (gap " + std::to_string(gap) + ")");
    spec.values.push_back(0.5 * (nu[i] + nu[i + 1]));
  }
  return spec;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& m, Region region) {
  if (!m.two_region())
    throw std::invalid_argument("partial transpose undefined for a single region");
  CovarianceMatrix out = m;
  const int first = region == Region::A ? m.n_modes_a : 2 * m.n_modes_a + m.n_modes_b;
  const int count = region == Region::A ? m.n_modes_a : m.n_modes_b;
  out.mat.middleRows(first, count) *= -1.0;
  out.mat.middleCols(first, count) *= -1.0;
  out.transposed = !m.transposed;
  return out;
}

double entanglement_entropy(const SymplecticSpectrum& spectrum) {
  if (spectrum.transposed)
    throw std::invalid_argument("entropy requires an untransposed spectrum");
  double s = 0.0;
  for (double nu : spectrum.values) {
    if (nu < 1.0) nu = 1.0;  // physicality noise below 1 carries no entropy
    const double up = 0.5 * (nu + 1.0);
    const double dn = 0.5 * (nu - 1.0);
    s += up * std::log(up) - (dn > 0.0 ? dn * std::log(dn) : 0.0);
  }
  return s;
}

double log_negativity(const SymplecticSpectrum& spectrum) {
  if (!spectrum.transposed)
    throw std::invalid_argument("negativity requires a partially transposed spectrum");
  double e = 0.0;
  for (double nu : spectrum.values)
    if (nu < 1.0 - 1e-9) e -= std::log(nu);
  return e;
}

}  // namespace vacent

#include "vacent/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "vacent/symplectic.hpp"

namespace vacent {

double ChainConfig::effective_mass() const {
  if (mass > 0.0) return mass;
  return regulator_mass_per_spacing / lattice_spacing;
}

void ChainConfig::validate() const {
  if (n_sites < 1) throw std::invalid_argument("n_sites must be >= 1");
  if (!(lattice_spacing > 0.0)) throw std::invalid_argument("lattice_spacing must be positive");
  auto check = [&](const SiteRange& r) {
    if (r.count < 1 || r.first < 0 || r.first + r.count > n_sites)
      throw std::invalid_argument("region sites out of range");
  };
  check(region_a);
  if (region_b) {
    check(*region_b);
    if (region_b->first < region_a.first + region_a.count)
      throw std::invalid_argument("regions must be ordered and disjoint");
  }
  if (boundary == ChainBoundary::Periodic && effective_mass() <= 0.0)
    throw std::invalid_argument("massless periodic chain has a zero mode; require regulator mass");
}

CovarianceMatrix ground_state_cm(const ChainConfig& config) {
  config.validate();
  const int n = config.n_sites;
  const double a = config.lattice_spacing;
  const double m = config.effective_mass();

  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(n, n);
  const double diag = 2.0 / (a * a) + m * m;
  const double off = -1.0 / (a * a);
  for (int i = 0; i < n; ++i) {
    coupling(i, i) = diag;
    if (i + 1 < n) {
      coupling(i, i + 1) = off;
      coupling(i + 1, i) = off;
    }
  }
  if (config.boundary == ChainBoundary::Periodic && n > 2) {
    coupling(0, n - 1) = off;
    coupling(n - 1, 0) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(coupling);
  if (es.info() != Eigen::Success) throw std::runtime_error("coupling eigendecomposition failed");
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("coupling matrix not positive definite; require regulator mass");

  const Eigen::VectorXd sqrt_w = es.eigenvalues().cwiseSqrt();
  const Eigen::MatrixXd k_half =
      es.eigenvectors() * sqrt_w.asDiagonal() * es.eigenvectors().transpose();
  const Eigen::MatrixXd k_inv_half =
      es.eigenvectors() * sqrt_w.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();

  std::vector<int> sites_a(config.region_a.count), sites_b;
  for (int i = 0; i < config.region_a.count; ++i) sites_a[i] = config.region_a.first + i;
  if (config.region_b)
    for (int i = 0; i < config.region_b->count; ++i)
      sites_b.push_back(config.region_b->first + i);

  const int na = static_cast<int>(sites_a.size());
  const int nb = static_cast<int>(sites_b.size());
  CovarianceMatrix cm;
  cm.n_modes_a = na;
  cm.n_modes_b = nb;
  cm.mat = Eigen::MatrixXd::Zero(2 * (na + nb), 2 * (na + nb));

  auto fill = [&](const std::vector<int>& rows, const std::vector<int>& cols, int r0, int c0,
                  const Eigen::MatrixXd& source) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        cm.mat(r0 + static_cast<int>(r), c0 + static_cast<int>(c)) = source(rows[r], cols[c]);
  };
  fill(sites_a, sites_a, 0, 0, k_inv_half);
  fill(sites_a, sites_a, na, na, k_half);
  if (nb > 0) {
    const int b0 = 2 * na;
    fill(sites_b, sites_b, b0, b0, k_inv_half);
    fill(sites_b, sites_b, b0 + nb, b0 + nb, k_half);
    fill(sites_a, sites_b, 0, b0, k_inv_half);
    fill(sites_b, sites_a, b0, 0, k_inv_half);
    fill(sites_a, sites_b, na, b0 + nb, k_half);
    fill(sites_b, sites_a, b0 + nb, na, k_half);
  }
  return cm;
}

NegativityComparison compare_negativity(const RegionConfig& continuum, const ChainConfig& chain) {
  if (!continuum.region_b || !chain.region_b)
    throw std::invalid_argument("compare_negativity needs two regions on both sides");

  // geometry match: sites * spacing against interval lengths and separation
  const double a = chain.lattice_spacing;
  const double len_a = chain.region_a.count * a;
  const double len_b = chain.region_b->count * a;
  const double gap = (chain.region_b->first - (chain.region_a.first + chain.region_a.count)) * a;
  const double tol = 0.5 * a;
  if (std::abs(len_a - continuum.region_a.length()) > tol ||
      std::abs(len_b - continuum.region_b->length()) > tol ||
      std::abs(gap - continuum.separation()) > tol)
    throw std::invalid_argument("chain regions do not match the continuum geometry");

  NegativityComparison out;
  {
    const CovarianceMatrix cm = assemble(continuum);
    out.continuum = log_negativity(symplectic_eigenvalues(partial_transpose(cm, Region::B)));
  }
  {
    const CovarianceMatrix cm = ground_state_cm(chain);
    out.lattice = log_negativity(symplectic_eigenvalues(partial_transpose(cm, Region::B)));
  }
  out.abs_diff = std::abs(out.continuum - out.lattice);
  return out;
}

}  // namespace vacent

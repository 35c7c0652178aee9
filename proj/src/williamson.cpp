#include "vacent/williamson.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace vacent {

namespace {

Eigen::VectorXi psi_indices(const CovarianceMatrix& m) {
  Eigen::VectorXi idx(m.n_modes_a + m.n_modes_b);
  for (int i = 0; i < m.n_modes_a; ++i) idx(i) = i;
  for (int i = 0; i < m.n_modes_b; ++i) idx(m.n_modes_a + i) = 2 * m.n_modes_a + i;
  return idx;
}

Eigen::VectorXi pi_indices(const CovarianceMatrix& m) {
  Eigen::VectorXi idx(m.n_modes_a + m.n_modes_b);
  for (int i = 0; i < m.n_modes_a; ++i) idx(i) = m.n_modes_a + i;
  for (int i = 0; i < m.n_modes_b; ++i) idx(m.n_modes_a + i) = 2 * m.n_modes_a + m.n_modes_b + i;
  return idx;
}

WilliamsonMode::Profile sample_profile(const ModeBasis& basis, const Eigen::VectorXd& f,
                                       const Eigen::VectorXd& g, int offset, int count,
                                       int grid_points) {
  WilliamsonMode::Profile p;
  p.z.resize(grid_points);
  p.f.assign(grid_points, 0.0);
  p.g.assign(grid_points, 0.0);
  const double x1 = basis.interval.x1;
  const double step = basis.interval.length() / (grid_points - 1);
  for (int k = 0; k < grid_points; ++k) p.z[k] = x1 + k * step;
  for (int i = 1; i <= count; ++i) {
    const SmearingWeights w = smearing_weights(basis, i);
    const double cf = f(offset + i - 1) * w.field;
    const double cg = g(offset + i - 1) * w.momentum;
    if (cf == 0.0 && cg == 0.0) continue;
    for (int k = 0; k < grid_points; ++k) {
      const double shape = mode_function(basis, i, p.z[k]);
      p.f[k] += cf * shape;
      p.g[k] += cg * shape;
    }
  }
  return p;
}

}  // namespace

std::vector<WilliamsonMode> williamson_modes(const CovarianceMatrix& m_in,
                                             const RegionConfig& config, bool transposed,
                                             int grid_points) {
  if (grid_points < 8) throw std::invalid_argument("grid_points too small");
  CovarianceMatrix m = m_in;
  if (transposed && !m.transposed) {
    m = partial_transpose(m, Region::B);
  } else if (!transposed && m.transposed) {
    throw std::invalid_argument("matrix is already partially transposed");
  }

  const Eigen::VectorXi ipsi = psi_indices(m);
  const Eigen::VectorXi ipi = pi_indices(m);
  const Eigen::MatrixXd x = m.mat(ipsi, ipsi);
  const Eigen::MatrixXd p = m.mat(ipi, ipi);
  if (m.mat(ipsi, ipi).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument(
        "williamson profiles require vanishing field-momentum cross blocks");

  // f solves P X f = nu^2 f; symmetrized through P^{1/2}. g = X f / nu.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esp(p);
  if (esp.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("invalid covariance matrix (momentum block not positive)");
  const Eigen::MatrixXd p_half = esp.eigenvectors() * esp.eigenvalues().cwiseSqrt().asDiagonal() *
                                 esp.eigenvectors().transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esd(p_half * x * p_half);

  const int n_total = static_cast<int>(x.rows());
  std::vector<int> order(n_total);
  std::iota(order.begin(), order.end(), 0);
  // esd eigenvalues ascend; most relevant first means descending nu for
  // untransposed spectra and ascending nu-tilde for transposed ones.
  if (!transposed) std::reverse(order.begin(), order.end());

  const ModeBasis basis_a = config.basis_a();
  const int na = m.n_modes_a, nb = m.n_modes_b;

  std::vector<WilliamsonMode> modes;
  modes.reserve(n_total);
  for (int rank = 0; rank < n_total; ++rank) {
    const int k = order[rank];
    const double nu = std::sqrt(std::max(0.0, esd.eigenvalues()(k)));
    WilliamsonMode mode;
    mode.index = rank;
    mode.symplectic_value = nu;
    mode.transposed = transposed;
    mode.entangled = transposed && nu < 1.0 - 1e-9;

    Eigen::VectorXd f = p_half * esd.eigenvectors().col(k);
    if (nu <= 0.0) throw std::runtime_error("degenerate symplectic value 0");
    Eigen::VectorXd g = x * f / nu;
    const double norm = f.dot(g);
    if (norm <= 0.0) throw std::runtime_error("mode normalization failed");
    const double s = 1.0 / std::sqrt(norm);
    f *= s;
    g *= s;
    int imax = 0;
    f.cwiseAbs().maxCoeff(&imax);
    if (f(imax) < 0.0) {
      f = -f;
      g = -g;
    }
    mode.f_coeffs = f;
    mode.g_coeffs = g;
    mode.region_a = sample_profile(basis_a, f, g, 0, na, grid_points);
    if (nb > 0) mode.region_b = sample_profile(config.basis_b(), f, g, na, nb, grid_points);
    modes.push_back(std::move(mode));
  }

  for (int i = 0; i < n_total; ++i) {
    const double nu = modes[i].symplectic_value;
    const bool near_prev = i > 0 && std::abs(modes[i - 1].symplectic_value - nu) < 1e-7;
    const bool near_next =
        i + 1 < n_total && std::abs(modes[i + 1].symplectic_value - nu) < 1e-7;
    modes[i].degenerate = near_prev || near_next;
  }
  return modes;
}

double mode_centroid(const WilliamsonMode& mode, Region region) {
  const WilliamsonMode::Profile& p = region == Region::A ? mode.region_a : mode.region_b;
  if (p.z.size() < 2) throw std::invalid_argument("mode has no sampled profile in this region");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k + 1 < p.z.size(); ++k) {
    const double dz = p.z[k + 1] - p.z[k];
    const double w0 = p.f[k] * p.f[k], w1 = p.f[k + 1] * p.f[k + 1];
    num += 0.5 * dz * (p.z[k] * w0 + p.z[k + 1] * w1);
    den += 0.5 * dz * (w0 + w1);
  }
  if (den <= 0.0) throw std::runtime_error("mode_centroid: zero-norm profile");
  return num / den;
}

void write_profiles(const std::vector<WilliamsonMode>& modes, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const WilliamsonMode& mode : modes) {
    const WilliamsonMode::Profile* profiles[2] = {&mode.region_a, &mode.region_b};
    const char* names[2] = {"A", "B"};
    for (int r = 0; r < 2; ++r) {
      if (profiles[r]->z.empty()) continue;
      char fname[64];
      std::snprintf(fname, sizeof(fname), "mode_%03d_%s.tsv", mode.index, names[r]);
      std::ofstream out(std::filesystem::path(dir) / fname);
      out << "# nu " << (mode.transposed ? "(transposed) " : "") << mode.symplectic_value << "\n";
      out << "# z\tf\tg\n";
      char line[96];
      for (std::size_t k = 0; k < profiles[r]->z.size(); ++k) {
        std::snprintf(line, sizeof(line), "%.12g\t%.12g\t%.12g\n", profiles[r]->z[k],
                      profiles[r]->f[k], profiles[r]->g[k]);
        out << line;
      }
    }
  }
}

}  // namespace vacent

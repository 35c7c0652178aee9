#include "vacent/predictions.hpp"

#include <boost/math/special_functions/ellint_1.hpp>
#include <cmath>
#include <stdexcept>

namespace vacent {

double cross_ratio_flat(double x1, double x2, double x3, double x4) {
  if (!(x1 < x2 && x2 <= x3 && x3 < x4))
    throw std::invalid_argument("cross_ratio_flat requires x1 < x2 <= x3 < x4");
  return (x2 - x1) * (x4 - x3) / ((x3 - x1) * (x4 - x2));
}

namespace {
double spacelike_interval(const SpacetimePoint& a, const SpacetimePoint& b) {
  const double dt = a.t - b.t;
  const double dx = a.x - b.x;
  const double s2 = dx * dx - dt * dt;
  if (s2 <= 0.0) throw std::domain_error("interval not spacelike");
  return std::sqrt(s2);
}
}  // namespace

double cross_ratio_general(const SpacetimePoint& u1, const SpacetimePoint& u2,
                           const SpacetimePoint& u3, const SpacetimePoint& u4) {
  return spacelike_interval(u2, u1) * spacelike_interval(u4, u3) /
         (spacelike_interval(u4, u2) * spacelike_interval(u3, u1));
}

double cross_ratio_milne(double z1, double z2, double z3, double z4) {
  if (!(z1 < z2 && z2 <= z3 && z3 < z4))
    throw std::invalid_argument("cross_ratio_milne requires z1 < z2 <= z3 < z4");
  return std::sinh(0.5 * (z2 - z1)) * std::sinh(0.5 * (z4 - z3)) /
         (std::sinh(0.5 * (z4 - z2)) * std::sinh(0.5 * (z3 - z1)));
}

double complete_elliptic_k(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("elliptic parameter must be in [0, 1)");
  return boost::math::ellint_1(std::sqrt(m));
}

double negativity_law(double y, double c) {
  if (!(y > 0.0 && y < 1.0)) throw std::domain_error("negativity_law requires y in (0, 1)");
  return -0.25 * std::log1p(-y) - 0.5 * std::log(complete_elliptic_k(y)) + c;
}

double effective_cutoff_y(int n_modes, double a) {
  if (n_modes < 1) throw std::invalid_argument("n_modes must be >= 1");
  const double t = 1.0 + a / (2.0 * M_PI * n_modes);
  return 1.0 / (t * t);
}

double milne_entropy_law(double delta, int n_modes, double tau, double kappa) {
  if (!(delta * n_modes > 0.0)) throw std::invalid_argument("Delta * N must be positive");
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  // written with tau in place so its cancellation is explicit
  return std::log(2.0 * tau * std::sinh(0.5 * delta * n_modes) / (tau * kappa)) / 3.0;
}

FitResult fit_linear_log(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 3) throw std::invalid_argument("fit requires at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double prev = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(pts[i].first > 0.0) || (i > 0 && pts[i].first <= prev))
      throw std::invalid_argument("fit requires strictly increasing positive N");
    prev = pts[i].first;
    const double x = std::log(pts[i].first);
    sx += x;
    sy += pts[i].second;
    sxx += x * x;
    sxy += x * pts[i].second;
  }
  const double n = static_cast<double>(pts.size());
  const double det = n * sxx - sx * sx;
  FitResult fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.offset = (sy * sxx - sx * sxy) / det;
  fit.n_points = pts.size();
  double ss = 0.0;
  for (const auto& [nn, s] : pts) {
    const double r = s - (fit.slope * std::log(nn) + fit.offset);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / n);
  return fit;
}

FitResult fit_negativity_offset(const std::vector<std::pair<double, double>>& pts) {
  if (pts.empty()) throw std::invalid_argument("fit requires points");
  FitResult fit;
  fit.n_points = pts.size();
  double sum = 0.0;
  for (const auto& [y, e] : pts) sum += e - negativity_law(y, 0.0);
  fit.offset = sum / static_cast<double>(pts.size());
  double ss = 0.0;
  for (const auto& [y, e] : pts) {
    const double r = e - negativity_law(y, fit.offset);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(pts.size()));
  return fit;
}

FitResult fit_effective_cutoff_a(const std::vector<std::pair<int, double>>& pts, double c) {
  if (pts.empty()) throw std::invalid_argument("fit requires points");
  auto rms = [&](double a) {
    double ss = 0.0;
    for (const auto& [n, e] : pts) {
      const double r = e - negativity_law(effective_cutoff_y(n, a), c);
      ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(pts.size()));
  };
  // golden-section search on [0.05, 5]
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.05, hi = 5.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = rms(x1), f2 = rms(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = rms(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = rms(x2);
    }
  }
  FitResult fit;
  fit.slope = 0.5 * (lo + hi);
  fit.offset = c;
  fit.residual_rms = rms(fit.slope);
  fit.n_points = pts.size();
  return fit;
}

}  // namespace vacent

#include "vacent/covariance.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "vacent/quad.hpp"
#include "vacent/symplectic.hpp"

namespace vacent {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = std::numbers::egamma;

double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

// Exact integral of cos(w z + phi) over [lo, hi], stable for w -> 0.
double int_cos(double w, double phi, double lo, double hi) {
  const double len = hi - lo;
  const double mid = 0.5 * (hi + lo);
  return len * std::cos(w * mid + phi) * sinc(0.5 * w * len);
}

// Cross-correlations of the unit sine/cosine shapes of modes (n, A) and
// (m, B) as functions of the coordinate difference s = z_A - z_B. These are
// what reduce the double integrals over the Milne kernels (and the
// position-space oracle integrals) to one dimension.
struct ShapeCorrelator {
  double alpha, beta, da, db;

  ShapeCorrelator(const Interval& a, const Interval& b, int n, int m)
      : alpha(pi * n / a.length()),
        beta(pi * m / b.length()),
        da(a.length()),
        db(b.length()) {}

  double sin_sin(double s) const {
    const double zlo = std::max(0.0, s);
    const double zhi = std::min(da, db + s);
    if (zhi <= zlo) return 0.0;
    return 0.5 * (int_cos(alpha - beta, beta * s, zlo, zhi) -
                  int_cos(alpha + beta, -beta * s, zlo, zhi));
  }

  double cos_cos(double s) const {
    const double zlo = std::max(0.0, s);
    const double zhi = std::min(da, db + s);
    if (zhi <= zlo) return 0.0;
    return 0.5 * (int_cos(alpha - beta, beta * s, zlo, zhi) +
                  int_cos(alpha + beta, -beta * s, zlo, zhi));
  }
};

// integral of the unit sine shape over its interval
double sine_integral(double delta, int n) {
  return (n % 2 == 0) ? 0.0 : 2.0 * delta / (pi * n);
}

void check_element(const ElementResult& r, const QuadratureOptions& quad, int n, int m,
                   const char* what) {
  if (!std::isfinite(r.value) || r.error > quad.fail_rel * std::abs(r.value) + 1e-10) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "element quadrature failed: %s n=%d m=%d (err=%.3g val=%.3g)",
                  what, n, m, r.error, r.value);
    throw std::runtime_error(buf);
  }
}

}  // namespace

Weighting RegionConfig::weighting() const {
  if (weighting_override) return *weighting_override;
  return geometry.kind == Geometry::Kind::Flat ? Weighting::FrequencyWeighted
                                               : Weighting::Unweighted;
}

double RegionConfig::separation() const {
  if (!region_b) return 0.0;
  return region_b->x1 - region_a.x2;
}

ModeBasis RegionConfig::basis_a() const {
  double m = geometry.kind == Geometry::Kind::Flat ? params.effective_mass()
                                                   : std::exp(params.log_effective_mass());
  return {region_a, modes_a(), weighting(), m};
}

ModeBasis RegionConfig::basis_b() const {
  if (!region_b) throw std::logic_error("basis_b: single-region configuration");
  double m = geometry.kind == Geometry::Kind::Flat ? params.effective_mass()
                                                   : std::exp(params.log_effective_mass());
  return {*region_b, modes_b(), weighting(), m};
}

void RegionConfig::validate() const {
  if (modes_a() < 1 || (region_b && modes_b() < 1))
    throw std::invalid_argument("n_modes must be >= 1");
  if (region_b && region_b->x1 < region_a.x2 - 1e-15)
    throw std::invalid_argument("regions must be ordered and disjoint or touching (L >= 0)");
  if (quad.rel_tol <= 0.0 || quad.fail_rel <= 0.0)
    throw std::invalid_argument("quadrature tolerances must be positive");
  if (geometry.kind == Geometry::Kind::Milne) {
    if (params.log_effective_mass() + std::log(geometry.tau) >= std::log(0.1))
      throw std::domain_error("Milne small-mass approximation invalid (M0 tau >= 0.1)");
  } else {
    (void)params.effective_mass();  // must be representable
  }
}

std::string RegionConfig::canonical_key() const {
  char buf[512];
  auto fmt = [&](double x) {
    char t[32];
    std::snprintf(t, sizeof(t), "%.17g", x);
    return std::string(t);
  };
  std::string key;
  key += geometry.kind == Geometry::Kind::Flat ? "flat" : "milne";
  key += ";tau=" + fmt(geometry.tau) + ";a=" + fmt(geometry.a_scale);
  key += ";A=[" + fmt(region_a.x1) + "," + fmt(region_a.x2) + "]";
  key += region_b ? ";B=[" + fmt(region_b->x1) + "," + fmt(region_b->x2) + "]" : ";B=none";
  std::snprintf(buf, sizeof(buf), ";N=%d;Nb=%d", modes_a(), region_b ? modes_b() : 0);
  key += buf;
  key += ";mass=" + fmt(params.mass) + ";ir=" + fmt(params.ir_regulator_mass);
  key += ";logir=" + (params.log_ir_regulator ? fmt(*params.log_ir_regulator) : "none");
  key += include_cross_block ? ";cross=1" : ";cross=0";
  key += weighting() == Weighting::FrequencyWeighted ? ";w=freq" : ";w=unw";
  key += ";qtol=" + fmt(quad.rel_tol);
  return key;
}

Eigen::MatrixXd CovarianceMatrix::symplectic_form() const {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim(), dim());
  int offset = 0;
  for (int counts : {n_modes_a, n_modes_b}) {
    if (counts == 0) continue;
    omega.block(offset, offset + counts, counts, counts) =
        Eigen::MatrixXd::Identity(counts, counts);
    omega.block(offset + counts, offset, counts, counts) =
        -Eigen::MatrixXd::Identity(counts, counts);
    offset += 2 * counts;
  }
  return omega;
}

// ---------------------------------------------------------------------------
// flat elements: contour form on y in [M, inf), substituted y = M cosh(u)
// ---------------------------------------------------------------------------

ElementResult flat_pair_element(const Interval& a, const Interval& b, int n, int m,
                                ElementKind kind, const FieldParams& params,
                                Weighting weighting, const QuadratureOptions& quad) {
  if (n < 1 || m < 1) throw std::invalid_argument("mode indices must be >= 1");
  const double mass = params.effective_mass();
  const double ra = a.length(), rb = b.length();
  const double alpha = pi * n / ra, beta = pi * m / rb;
  const double wn = std::hypot(alpha, mass), wm = std::hypot(beta, mass);
  const double sn = (n % 2 == 0) ? 1.0 : -1.0;
  const double sm = (m % 2 == 0) ? 1.0 : -1.0;
  const double e1 = std::abs(b.x1 - a.x1);
  const double e2 = std::abs(b.x2 - a.x1);
  const double e3 = std::abs(b.x1 - a.x2);
  const double e4 = std::abs(b.x2 - a.x2);
  const bool self = (a == b);

  const double umax = std::acosh(std::max(3e6 / mass, 1.5));
  auto integrand = [&](double u) {
    const double y = mass * std::cosh(u);
    const double br = std::exp(-y * e1) - sm * std::exp(-y * e2) - sn * std::exp(-y * e3) +
                      sn * sm * std::exp(-y * e4);
    const double core = br / ((y * y + alpha * alpha) * (y * y + beta * beta));
    if (kind == ElementKind::PhiPhi) return core;
    const double w = mass * std::sinh(u);
    return core * w * w;
  };
  // One panel spans at most ~a decade of y, so each is a single-scale
  // integrand and the adaptive rule converges without deep bisection.
  quad::Result q;
  const int n_panels = std::max(1, static_cast<int>(std::ceil(umax / 2.5)));
  for (int k = 0; k < n_panels; ++k) {
    const double u0 = umax * k / n_panels;
    const double u1 = umax * (k + 1) / n_panels;
    quad::Result part = quad::gauss_kronrod(integrand, u0, u1, quad.rel_tol, quad.max_depth);
    q.value += part.value;
    q.error += part.error;
  }

  const double pref = pi * n * m / std::pow(ra * rb, 1.5);
  double weighted, err;
  if (kind == ElementKind::PhiPhi) {
    weighted = std::sqrt(wn * wm) * pref * 2.0 * q.value + (self && n == m ? 1.0 : 0.0);
    err = std::sqrt(wn * wm) * pref * 2.0 * q.error;
  } else {
    weighted = -pref * 2.0 * q.value / std::sqrt(wn * wm) + (self && n == m ? 1.0 : 0.0);
    err = pref * 2.0 * q.error / std::sqrt(wn * wm);
  }

  ElementResult r;
  if (weighting == Weighting::FrequencyWeighted) {
    r = {weighted, err};
  } else if (kind == ElementKind::PhiPhi) {
    r = {weighted / std::sqrt(wn * wm), err / std::sqrt(wn * wm)};
  } else {
    r = {weighted * std::sqrt(wn * wm), err * std::sqrt(wn * wm)};
  }
  check_element(r, quad, n, m, kind == ElementKind::PhiPhi ? "flat phi-phi" : "flat pi-pi");
  return r;
}

double flat_element_phi_phi(int n, int m, double l_eff, const FieldParams& params,
                            const QuadratureOptions& quad) {
  if (l_eff < -1.0) throw std::invalid_argument("l_eff must be >= -1");
  const Interval unit{0.0, 1.0};
  if (l_eff == -1.0) return flat_pair_element(unit, unit, n, m, ElementKind::PhiPhi, params,
                                              Weighting::FrequencyWeighted, quad)
      .value;
  const Interval other{1.0 + l_eff, 2.0 + l_eff};
  double v = flat_pair_element(unit, other, n, m, ElementKind::PhiPhi, params,
                               Weighting::FrequencyWeighted, quad)
                 .value;
  return v + (n == m ? 1.0 : 0.0);
}

double flat_element_pi_pi(int n, int m, double l_eff, const FieldParams& params,
                          const QuadratureOptions& quad) {
  if (l_eff < -1.0) throw std::invalid_argument("l_eff must be >= -1");
  const Interval unit{0.0, 1.0};
  if (l_eff == -1.0) return flat_pair_element(unit, unit, n, m, ElementKind::PiPi, params,
                                              Weighting::FrequencyWeighted, quad)
      .value;
  const Interval other{1.0 + l_eff, 2.0 + l_eff};
  double v = flat_pair_element(unit, other, n, m, ElementKind::PiPi, params,
                               Weighting::FrequencyWeighted, quad)
                 .value;
  return v + (n == m ? 1.0 : 0.0);
}

// ---------------------------------------------------------------------------
// Milne elements: 1D reduction over s = z_A - z_B of the log kernels
// ---------------------------------------------------------------------------

namespace {

std::vector<double> milne_breakpoints(double da, double db, double singular) {
  std::vector<double> pts{-db, std::min(0.0, da - db), std::max(0.0, da - db), da};
  if (singular > -db && singular < da) pts.push_back(singular);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-14; }),
            pts.end());
  return pts;
}

}  // namespace

ElementResult milne_pair_element(const Interval& a, const Interval& b, int n, int m,
                                 ElementKind kind, const Geometry& geometry,
                                 const FieldParams& params, Weighting weighting,
                                 const QuadratureOptions& quad) {
  if (n < 1 || m < 1) throw std::invalid_argument("mode indices must be >= 1");
  if (geometry.kind != Geometry::Kind::Milne)
    throw std::invalid_argument("milne_pair_element requires a Milne geometry");
  const double da = a.length(), db = b.length();
  const double c = a.x1 - b.x1;  // kernel argument is s + c
  const ShapeCorrelator h(a, b, n, m);
  const auto pts = milne_breakpoints(da, db, -c);
  double singular = std::numeric_limits<double>::quiet_NaN();
  for (double p : pts)
    if (std::abs(p + c) < 1e-13 * std::max(1.0, da + db)) singular = p;

  double unweighted, err;
  if (kind == ElementKind::PhiPhi) {
    auto f = [&](double s) {
      return h.sin_sin(s) * std::log(std::abs(std::sinh(0.5 * (s + c))));
    };
    quad::Result q = quad::over_panels(f, pts, quad.rel_tol, singular);
    const double lm = params.log_effective_mass() + std::log(geometry.tau) + euler_gamma;
    const double constant_part = lm * sine_integral(da, n) * sine_integral(db, m);
    const double pref = 4.0 / std::sqrt(da * db);
    unweighted = -pref / (2.0 * pi) * (constant_part + q.value);
    err = pref / (2.0 * pi) * q.error;
  } else {
    auto f = [&](double s) {
      return h.cos_cos(s) * std::log(std::abs(std::sinh(0.5 * (s + c))));
    };
    quad::Result q = quad::over_panels(f, pts, quad.rel_tol, singular);
    const double pref = -2.0 * h.alpha * h.beta / (pi * std::sqrt(da * db));
    unweighted = pref * q.value;
    err = std::abs(pref) * q.error;
  }

  const double mass = std::exp(params.log_effective_mass());  // underflow to 0 is fine here
  const double wn = std::hypot(pi * n / da, mass), wm = std::hypot(pi * m / db, mass);
  ElementResult r;
  if (weighting == Weighting::Unweighted) {
    r = {unweighted, err};
  } else if (kind == ElementKind::PhiPhi) {
    r = {unweighted * std::sqrt(wn * wm), err * std::sqrt(wn * wm)};
  } else {
    r = {unweighted / std::sqrt(wn * wm), err / std::sqrt(wn * wm)};
  }
  check_element(r, quad, n, m, kind == ElementKind::PhiPhi ? "milne phi-phi" : "milne pi-pi");
  return r;
}

double milne_cross_element(const Interval& a, const Interval& b, int n, int m,
                           Weighting weighting, const FieldParams& params) {
  const double da = a.length(), db = b.length();
  double v = -sine_integral(da, n) * sine_integral(db, m) / (pi * std::sqrt(da * db));
  if (weighting == Weighting::FrequencyWeighted && v != 0.0) {
    const double mass = std::exp(params.log_effective_mass());
    v *= std::sqrt(std::hypot(pi * n / da, mass) / std::hypot(pi * m / db, mass));
  }
  return v;
}

// ---------------------------------------------------------------------------
// assembly
// ---------------------------------------------------------------------------

namespace {

struct Job {
  int row, col;          // matrix indices
  const Interval *a, *b;
  int n, m;
  ElementKind kind;
};

std::vector<Job> make_jobs(const RegionConfig& cfg) {
  std::vector<Job> jobs;
  const Interval* regs[2] = {&cfg.region_a, cfg.region_b ? &*cfg.region_b : nullptr};
  const int counts[2] = {cfg.modes_a(), cfg.region_b ? cfg.modes_b() : 0};
  const int base[2] = {0, 2 * counts[0]};
  for (int ra = 0; ra < 2; ++ra) {
    if (!regs[ra]) continue;
    for (int rb = ra; rb < 2; ++rb) {
      if (!regs[rb]) continue;
      for (int n = 1; n <= counts[ra]; ++n) {
        const int m0 = (ra == rb) ? n : 1;  // self blocks are symmetric
        for (int m = m0; m <= counts[rb]; ++m) {
          const int row_psi = base[ra] + n - 1;
          const int col_psi = base[rb] + m - 1;
          const int row_pi = base[ra] + counts[ra] + n - 1;
          const int col_pi = base[rb] + counts[rb] + m - 1;
          jobs.push_back({row_psi, col_psi, regs[ra], regs[rb], n, m, ElementKind::PhiPhi});
          jobs.push_back({row_pi, col_pi, regs[ra], regs[rb], n, m, ElementKind::PiPi});
        }
      }
    }
  }
  return jobs;
}

CovarianceMatrix assemble_impl(const RegionConfig& cfg, bool parallel) {
  cfg.validate();
  const bool flat = cfg.geometry.kind == Geometry::Kind::Flat;
  const Weighting w = cfg.weighting();
  const int na = cfg.modes_a();
  const int nb = cfg.region_b ? cfg.modes_b() : 0;
  const int dim = 2 * (na + nb);

  CovarianceMatrix cm;
  cm.mat = Eigen::MatrixXd::Zero(dim, dim);
  cm.n_modes_a = na;
  cm.n_modes_b = nb;

  std::vector<Job> jobs = make_jobs(cfg);
  std::vector<ElementResult> results(jobs.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
    const Job& j = jobs[i];
    try {
      results[i] = flat ? flat_pair_element(*j.a, *j.b, j.n, j.m, j.kind, cfg.params, w, cfg.quad)
                        : milne_pair_element(*j.a, *j.b, j.n, j.m, j.kind, cfg.geometry,
                                             cfg.params, w, cfg.quad);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    cm.mat(j.row, j.col) = results[i].value;
    cm.mat(j.col, j.row) = results[i].value;
    cm.max_quad_error = std::max(cm.max_quad_error, results[i].error);
  }

  // Milne phi-pi blocks (constant kernel, closed form); flat ones vanish.
  if (!flat && cfg.include_cross_block) {
    const Interval* regs[2] = {&cfg.region_a, cfg.region_b ? &*cfg.region_b : nullptr};
    const int counts[2] = {na, nb};
    const int base[2] = {0, 2 * na};
    for (int ra = 0; ra < 2; ++ra) {
      if (!regs[ra]) continue;
      for (int rb = 0; rb < 2; ++rb) {
        if (!regs[rb]) continue;
        for (int n = 1; n <= counts[ra]; ++n)
          for (int m = 1; m <= counts[rb]; ++m) {
            const double v = milne_cross_element(*regs[ra], *regs[rb], n, m, w, cfg.params);
            const int row = base[ra] + n - 1;               // psi of region ra
            const int col = base[rb] + counts[rb] + m - 1;  // pi of region rb
            cm.mat(row, col) = v;
            cm.mat(col, row) = v;
          }
      }
    }
  }

  const SymplecticSpectrum spec = symplectic_eigenvalues(cm);
  double min_nu = spec.values.back();
  if (min_nu < 1.0 - 1e-3)
    throw std::runtime_error("physicality violated beyond tolerance (min symplectic eigenvalue " +
                             std::to_string(min_nu) + "); convention or quadrature bug");
  return cm;
}

// --- optional on-disk cache, keyed by the canonical config string ---

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::filesystem::path> cache_path_for(const std::string& key) {
  const char* dir = std::getenv("VACENT_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  char name[32];
  std::snprintf(name, sizeof(name), "%016" PRIx64 ".json", fnv1a64(key));
  return std::filesystem::path(dir) / name;
}

std::optional<CovarianceMatrix> cache_load(const std::string& key) {
  auto path = cache_path_for(key);
  if (!path) return std::nullopt;
  std::ifstream in(*path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  if (j.value("config", "") != key) return std::nullopt;
  CovarianceMatrix cm;
  cm.n_modes_a = j.at("n_modes_a").get<int>();
  cm.n_modes_b = j.at("n_modes_b").get<int>();
  cm.max_quad_error = j.at("max_quad_error").get<double>();
  const auto& rows = j.at("matrix");
  const int dim = static_cast<int>(rows.size());
  cm.mat.resize(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) cm.mat(r, c) = rows[r][c].get<double>();
  return cm;
}

void cache_store(const std::string& key, const CovarianceMatrix& cm) {
  auto path = cache_path_for(key);
  if (!path) return;
  nlohmann::json j;
  j["config"] = key;
  j["n_modes_a"] = cm.n_modes_a;
  j["n_modes_b"] = cm.n_modes_b;
  j["max_quad_error"] = cm.max_quad_error;
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < cm.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < cm.dim(); ++c) row.push_back(cm.mat(r, c));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  auto tmp = *path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, *path, ec);
}

}  // namespace

CovarianceMatrix assemble(const RegionConfig& config) {
  const std::string key = config.canonical_key();
  if (auto cached = cache_load(key)) return *cached;
  CovarianceMatrix cm = assemble_impl(config, true);
  cache_store(key, cm);
  return cm;
}

CovarianceMatrix assemble_reference(const RegionConfig& config) {
  return assemble_impl(config, false);
}

}  // namespace vacent

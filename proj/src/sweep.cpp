#include "vacent/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "vacent/covariance.hpp"
#include "vacent/lattice.hpp"
#include "vacent/predictions.hpp"
#include "vacent/symplectic.hpp"
#include "vacent/version.hpp"
#include "vacent/williamson.hpp"

namespace vacent {

using nlohmann::json;

namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

double min_symplectic(const CovarianceMatrix& cm) {
  return symplectic_eigenvalues(cm).values.back();
}

FieldParams params_from(const json& spec) {
  FieldParams p;
  p.mass = spec.value("mass", 0.0);
  p.ir_regulator_mass = spec.value("ir_regulator_mass", 1e-14);
  if (spec.contains("log_mass")) p.log_ir_regulator = spec.at("log_mass").get<double>();
  return p;
}

QuadratureOptions quad_from(const SweepSpec& spec) {
  QuadratureOptions q;
  q.rel_tol = spec.quad_rel_tol;
  return q;
}

double negativity_of(const CovarianceMatrix& cm) {
  return log_negativity(symplectic_eigenvalues(partial_transpose(cm, Region::B)));
}

// ---- scenario row builders -------------------------------------------------

struct RowJob {
  std::vector<Cell> inputs;                      // echoed verbatim
  std::function<std::vector<Cell>()> compute;    // outputs (may throw)
  int n_outputs = 0;
};

Table run_jobs(std::vector<std::string> columns, std::vector<RowJob>& jobs, int* failed) {
  Table t;
  t.columns = std::move(columns);
  t.rows.resize(jobs.size());
  std::vector<char> row_failed(jobs.size(), 0);
  std::vector<std::string> messages(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
    std::vector<Cell> row = jobs[i].inputs;
    try {
      std::vector<Cell> out = jobs[i].compute();
      row.insert(row.end(), out.begin(), out.end());
      row.emplace_back(std::string("ok"));
    } catch (const std::exception& e) {
      for (int k = 0; k < jobs[i].n_outputs; ++k)
        row.emplace_back(std::numeric_limits<double>::quiet_NaN());
      row.emplace_back(std::string("failed"));
      row_failed[i] = 1;
      messages[i] = e.what();
    }
    t.rows[i] = std::move(row);
  }
  *failed = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (row_failed[i]) {
      ++*failed;
      std::fprintf(stderr, "row %zu failed: %s\n", i, messages[i].c_str());
    }
  }
  return t;
}

Table scenario_flat_entropy(const SweepSpec& spec, int* failed) {
  std::vector<double> masses;
  if (spec.raw.contains("masses"))
    masses = spec.raw.at("masses").get<std::vector<double>>();
  else
    masses = {spec.raw.value("mass", 0.0)};
  const auto ns = spec.raw.at("n_modes").get<std::vector<int>>();

  std::vector<RowJob> jobs;
  for (double mass : masses)
    for (int n : ns) {
      RegionConfig cfg;
      cfg.geometry = Geometry::flat();
      cfg.region_a = Interval{0.0, 1.0};
      cfg.n_modes = n;
      cfg.params = params_from(spec.raw);
      cfg.params.mass = mass;
      cfg.quad = quad_from(spec);
      RowJob job;
      job.inputs = {double(n), cfg.params.effective_mass()};
      job.n_outputs = 3;
      job.compute = [cfg]() -> std::vector<Cell> {
        const CovarianceMatrix cm = assemble(cfg);
        const SymplecticSpectrum s = symplectic_eigenvalues(cm);
        return {entanglement_entropy(s), s.values.back(), cm.max_quad_error};
      };
      jobs.push_back(std::move(job));
    }
  return run_jobs({"n_modes", "mass", "entropy", "min_nu", "max_quad_error", "status"}, jobs,
                  failed);
}

Table scenario_flat_negativity(const SweepSpec& spec, int* failed) {
  const int n = spec.raw.value("n_modes", 30);
  std::vector<RowJob> jobs;
  for (const auto& c : spec.raw.at("configs")) {
    const double ra = c.at("ra").get<double>();
    const double rb = c.at("rb").get<double>();
    const double l = c.at("l").get<double>();
    RegionConfig cfg;
    cfg.geometry = Geometry::flat();
    cfg.region_a = Interval{0.0, ra};
    cfg.region_b = Interval{ra + l, ra + l + rb};
    cfg.n_modes = n;
    cfg.params = params_from(spec.raw);
    cfg.quad = quad_from(spec);
    const double y = cross_ratio_flat(0.0, ra, ra + l, ra + l + rb);
    RowJob job;
    job.inputs = {ra, rb, l, y, double(n)};
    job.n_outputs = 3;
    job.compute = [cfg]() -> std::vector<Cell> {
      const CovarianceMatrix cm = assemble(cfg);
      return {negativity_of(cm), min_symplectic(cm), cm.max_quad_error};
    };
    jobs.push_back(std::move(job));
  }
  return run_jobs({"r_a", "r_b", "l", "y", "n_modes", "neg", "min_nu", "max_quad_error", "status"},
                  jobs, failed);
}

Table scenario_milne_entropy(const SweepSpec& spec, int* failed) {
  const double delta = spec.raw.at("delta").get<double>();
  const auto ns = spec.raw.at("n_modes").get<std::vector<int>>();
  std::vector<double> taus = spec.raw.contains("tau")
                                 ? spec.raw.at("tau").get<std::vector<double>>()
                                 : std::vector<double>{1.0};
  std::vector<RowJob> jobs;
  for (double tau : taus)
    for (int n : ns) {
      const double da = delta * n;
      RegionConfig cfg;
      cfg.geometry = Geometry::milne(tau);
      cfg.region_a = Interval{-0.5 * da, 0.5 * da};
      cfg.n_modes = n;
      cfg.params = params_from(spec.raw);
      cfg.include_cross_block = spec.include_cross_block;
      cfg.quad = quad_from(spec);
      RowJob job;
      job.inputs = {double(n), delta, da, tau, std::log(2.0 * std::sinh(0.5 * da))};
      job.n_outputs = 3;
      job.compute = [cfg]() -> std::vector<Cell> {
        const CovarianceMatrix cm = assemble(cfg);
        const SymplecticSpectrum s = symplectic_eigenvalues(cm);
        return {entanglement_entropy(s), s.values.back(), cm.max_quad_error};
      };
      jobs.push_back(std::move(job));
    }
  return run_jobs({"n_modes", "delta", "delta_a", "tau", "predictor", "entropy", "min_nu",
                   "max_quad_error", "status"},
                  jobs, failed);
}

Table scenario_milne_negativity(const SweepSpec& spec, int* failed) {
  const int n = spec.raw.value("n_modes", 30);
  std::vector<double> taus = spec.raw.contains("tau")
                                 ? spec.raw.at("tau").get<std::vector<double>>()
                                 : std::vector<double>{1.0};
  std::vector<RowJob> jobs;
  for (double tau : taus)
    for (const auto& zc : spec.raw.at("z_configs")) {
      const auto z = zc.get<std::vector<double>>();
      if (z.size() != 4) throw std::runtime_error("z_configs entries need 4 endpoints");
      RegionConfig cfg;
      cfg.geometry = Geometry::milne(tau);
      cfg.region_a = Interval{z[0], z[1]};
      cfg.region_b = Interval{z[2], z[3]};
      cfg.n_modes = n;
      cfg.params = params_from(spec.raw);
      cfg.include_cross_block = spec.include_cross_block;
      cfg.quad = quad_from(spec);
      RowJob job;
      job.inputs = {z[0], z[1], z[2], z[3], tau, cross_ratio_milne(z[0], z[1], z[2], z[3]),
                    double(n)};
      job.n_outputs = 3;
      job.compute = [cfg]() -> std::vector<Cell> {
        const CovarianceMatrix cm = assemble(cfg);
        return {negativity_of(cm), min_symplectic(cm), cm.max_quad_error};
      };
      jobs.push_back(std::move(job));
    }
  return run_jobs({"z1", "z2", "z3", "z4", "tau", "y", "n_modes", "neg", "min_nu",
                   "max_quad_error", "status"},
                  jobs, failed);
}

Table scenario_lightcone(const SweepSpec& spec, int* failed) {
  const int n = spec.raw.value("n_modes", 20);
  const auto x = spec.raw.at("x_points").get<std::vector<double>>();
  if (x.size() != 4 || !(x[0] < x[1] && x[1] < x[2] && x[2] < x[3]))
    throw std::runtime_error("x_points must be 4 increasing values");
  const bool same_side = x[0] > 0.0;
  const auto taus = spec.raw.at("tau").get<std::vector<double>>();

  std::vector<RowJob> jobs;
  for (double tau : taus) {
    std::vector<double> z(4);
    for (int i = 0; i < 4; ++i) z[i] = std::asinh(x[i] / tau);
    SpacetimePoint u[4];
    for (int i = 0; i < 4; ++i) u[i] = {std::hypot(tau, x[i]), x[i]};
    const double y = cross_ratio_general(u[0], u[1], u[2], u[3]);

    RegionConfig cfg;
    cfg.geometry = Geometry::milne(tau);
    cfg.region_a = Interval{z[0], z[1]};
    cfg.region_b = Interval{z[2], z[3]};
    cfg.n_modes = n;
    cfg.params = params_from(spec.raw);
    cfg.include_cross_block = spec.include_cross_block;
    cfg.quad = quad_from(spec);

    std::optional<RegionConfig> flat_cfg;
    if (same_side) {
      RegionConfig fc;
      fc.geometry = Geometry::flat();
      fc.region_a = Interval{x[0], x[1]};
      fc.region_b = Interval{x[2], x[3]};
      fc.n_modes = n;
      fc.params = params_from(spec.raw);
      fc.quad = quad_from(spec);
      flat_cfg = fc;
    }
    RowJob job;
    job.inputs = {tau, x[0], x[1], x[2], x[3], z[0], z[1], z[2], z[3], y};
    job.n_outputs = 4;
    job.compute = [cfg, flat_cfg]() -> std::vector<Cell> {
      const CovarianceMatrix cm = assemble(cfg);
      const double neg = negativity_of(cm);
      double neg_flat = std::numeric_limits<double>::quiet_NaN();
      if (flat_cfg) neg_flat = negativity_of(assemble(*flat_cfg));
      return {neg, neg_flat, min_symplectic(cm), cm.max_quad_error};
    };
    jobs.push_back(std::move(job));
  }
  return run_jobs({"tau", "x1", "x2", "x3", "x4", "z1", "z2", "z3", "z4", "y_general", "neg",
                   "neg_flat_projection", "min_nu", "max_quad_error", "status"},
                  jobs, failed);
}

Table scenario_williamson(const SweepSpec& spec, int* failed) {
  const int n = spec.raw.value("n_modes", 30);
  const auto ls = spec.raw.at("separations").get<std::vector<double>>();
  const std::string profile_dir = spec.raw.value("profile_dir", "");
  const int export_modes = spec.raw.value("export_modes", 1);

  std::vector<RowJob> jobs;
  for (double l : ls) {
    RegionConfig cfg;
    cfg.geometry = Geometry::flat();
    cfg.region_a = Interval{0.0, 1.0};
    cfg.region_b = Interval{1.0 + l, 2.0 + l};
    cfg.n_modes = n;
    cfg.params = params_from(spec.raw);
    cfg.quad = quad_from(spec);
    RowJob job;
    job.inputs = {l, double(n)};
    job.n_outputs = 4;
    job.compute = [cfg, l, profile_dir, export_modes]() -> std::vector<Cell> {
      const CovarianceMatrix cm = assemble(cfg);
      auto modes = williamson_modes(cm, cfg, /*transposed=*/true);
      const WilliamsonMode& top = modes.front();
      const double centroid = mode_centroid(top, Region::A);
      const double dist = cfg.region_a.x2 - centroid;
      if (!profile_dir.empty()) {
        char sub[48];
        std::snprintf(sub, sizeof(sub), "L_%g", l);
        std::vector<WilliamsonMode> exported(
            modes.begin(), modes.begin() + std::min<std::size_t>(modes.size(), export_modes));
        write_profiles(exported, (std::filesystem::path(profile_dir) / sub).string());
      }
      return {top.symplectic_value, negativity_of(cm), centroid, dist};
    };
    jobs.push_back(std::move(job));
  }
  return run_jobs({"l", "n_modes", "nu_tilde_min", "neg", "centroid_a", "dist_inner_edge_a",
                   "status"},
                  jobs, failed);
}

Table scenario_oracle_compare(const SweepSpec& spec, int* failed) {
  const int n = spec.raw.value("n_modes", 30);
  const int spr = spec.raw.value("sites_per_r", 60);
  const double padding_r = spec.raw.value("padding_r", 4.0);
  std::vector<RowJob> jobs;
  for (const auto& c : spec.raw.at("configs")) {
    const double r = c.at("r").get<double>();
    const double l = c.at("l").get<double>();
    RegionConfig cont;
    cont.geometry = Geometry::flat();
    cont.region_a = Interval{0.0, r};
    cont.region_b = Interval{r + l, 2.0 * r + l};
    cont.n_modes = n;
    cont.params = params_from(spec.raw);
    cont.quad = quad_from(spec);

    ChainConfig chain;
    chain.lattice_spacing = r / spr;
    const int pad = static_cast<int>(std::lround(padding_r * spr));
    const int gap = static_cast<int>(std::lround(l / chain.lattice_spacing));
    chain.n_sites = 2 * pad + 2 * spr + gap;
    chain.region_a = {pad, spr};
    chain.region_b = SiteRange{pad + spr + gap, spr};

    RowJob job;
    job.inputs = {r, l, double(n), double(spr)};
    job.n_outputs = 4;
    job.compute = [cont, chain]() -> std::vector<Cell> {
      const NegativityComparison cmp = compare_negativity(cont, chain);
      // purity cross-check on a small pure chain
      ChainConfig pure;
      pure.n_sites = 40;
      pure.region_a = {0, 13};
      const double s_a = entanglement_entropy(symplectic_eigenvalues(ground_state_cm(pure)));
      pure.region_a = {13, 27};
      const double s_ab = entanglement_entropy(symplectic_eigenvalues(ground_state_cm(pure)));
      return {cmp.continuum, cmp.lattice, cmp.abs_diff, std::abs(s_a - s_ab)};
    };
    jobs.push_back(std::move(job));
  }
  return run_jobs({"r", "l", "n_modes", "sites_per_r", "neg_continuum", "neg_lattice", "abs_diff",
                   "purity_gap", "status"},
                  jobs, failed);
}

// ---- validation ------------------------------------------------------------

void require_grid(const json& spec, const char* key, std::vector<std::string>& out) {
  if (!spec.contains(key)) {
    out.push_back(std::string("missing parameter grid '") + key + "'");
    return;
  }
  if (!spec.at(key).is_array() || spec.at(key).empty())
    out.push_back(std::string("empty parameter grid '") + key + "'");
}

// ---- output writers --------------------------------------------------------

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (std::holds_alternative<double>(row[c]))
        os << fmt_double(std::get<double>(row[c]));
      else
        os << std::get<std::string>(row[c]);
      os << (c + 1 < row.size() ? "," : "\n");
    }
  }
  return os.str();
}

std::string render_json(const SweepSpec& spec, const Table& t) {
  json doc;
  doc["scenario"] = spec.scenario;
  doc["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        const double v = std::get<double>(cell);
        if (std::isfinite(v))
          r.push_back(v);
        else
          r.push_back(nullptr);
      } else {
        r.push_back(std::get<std::string>(cell));
      }
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1);
}

}  // namespace

std::uint64_t fnv1a64_hash(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> validate_spec(const json& spec) {
  std::vector<std::string> out;
  if (!spec.is_object()) {
    out.push_back("spec must be a JSON object");
    return out;
  }
  const std::string scenario = spec.value("scenario", "");
  const auto& known = known_scenarios();
  if (std::find(known.begin(), known.end(), scenario) == known.end()) {
    out.push_back("unknown scenario '" + scenario + "'");
    return out;
  }
  if (spec.contains("format")) {
    const std::string f = spec.at("format").get<std::string>();
    if (f != "csv" && f != "json") out.push_back("format must be csv or json");
  }
  if (spec.contains("quad_rel_tol") && !(spec.at("quad_rel_tol").get<double>() > 0.0))
    out.push_back("tolerance must be positive");
  if (spec.contains("mass") && spec.at("mass").get<double>() < 0.0)
    out.push_back("mass must be non-negative");

  if (scenario == "flat-entropy") {
    require_grid(spec, "n_modes", out);
  } else if (scenario == "flat-negativity") {
    require_grid(spec, "configs", out);
    if (spec.contains("configs") && spec.at("configs").is_array())
      for (const auto& c : spec.at("configs")) {
        if (!c.contains("ra") || !c.contains("rb") || !c.contains("l")) {
          out.push_back("configs entries need ra, rb, l");
          break;
        }
        if (c.value("l", 0.0) < 0.0) out.push_back("separation l must be >= 0");
      }
  } else if (scenario == "milne-entropy") {
    require_grid(spec, "n_modes", out);
    if (!spec.contains("delta"))
      out.push_back("missing 'delta'");
    else if (!(spec.at("delta").get<double>() > 0.0))
      out.push_back("delta must be positive");
  } else if (scenario == "milne-negativity") {
    require_grid(spec, "z_configs", out);
  } else if (scenario == "lightcone-limit") {
    require_grid(spec, "tau", out);
    if (!spec.contains("x_points") || !spec.at("x_points").is_array() ||
        spec.at("x_points").size() != 4)
      out.push_back("x_points must be an array of 4 values");
  } else if (scenario == "williamson") {
    require_grid(spec, "separations", out);
  } else if (scenario == "oracle-compare") {
    require_grid(spec, "configs", out);
    if (spec.contains("sites_per_r") && spec.at("sites_per_r").get<int>() < 2)
      out.push_back("sites_per_r must be >= 2");
  }
  return out;
}

std::vector<std::string> validate_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {"cannot open spec file '" + path + "'"};
  json spec;
  try {
    in >> spec;
  } catch (const std::exception& e) {
    return {std::string("JSON parse error: ") + e.what()};
  }
  return validate_spec(spec);
}

SweepSpec parse_spec_file(const std::string& path) {
  auto diags = validate_spec_file(path);
  if (!diags.empty()) throw std::runtime_error("invalid spec: " + diags.front());
  std::ifstream in(path);
  json j;
  in >> j;
  SweepSpec spec;
  spec.scenario = j.at("scenario").get<std::string>();
  spec.output_path = j.value("output", "");
  spec.format = j.value("format", "csv");
  spec.quad_rel_tol = j.value("quad_rel_tol", 1e-11);
  spec.include_cross_block = j.value("include_cross_block", false);
  spec.raw = std::move(j);
  return spec;
}

SweepOutcome run_sweep(const SweepSpec& spec_in, const RunOptions& options) {
  SweepSpec spec = spec_in;
  if (!options.output_override.empty()) spec.output_path = options.output_override;
  if (!options.format_override.empty()) spec.format = options.format_override;
  if (options.quad_tol_override > 0.0) spec.quad_rel_tol = options.quad_tol_override;
  if (options.threads > 0) omp_set_num_threads(options.threads);
  if (spec.output_path.empty()) throw std::runtime_error("no output path (spec 'output' or --out)");

  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  Table table;
  if (spec.scenario == "flat-entropy")
    table = scenario_flat_entropy(spec, &failed);
  else if (spec.scenario == "flat-negativity")
    table = scenario_flat_negativity(spec, &failed);
  else if (spec.scenario == "milne-entropy")
    table = scenario_milne_entropy(spec, &failed);
  else if (spec.scenario == "milne-negativity")
    table = scenario_milne_negativity(spec, &failed);
  else if (spec.scenario == "lightcone-limit")
    table = scenario_lightcone(spec, &failed);
  else if (spec.scenario == "williamson")
    table = scenario_williamson(spec, &failed);
  else if (spec.scenario == "oracle-compare")
    table = scenario_oracle_compare(spec, &failed);
  else
    throw std::runtime_error("unknown scenario '" + spec.scenario + "'");
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::filesystem::path out_path(spec.output_path);
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + spec.output_path + "'");
    out << (spec.format == "json" ? render_json(spec, table) : render_csv(table));
  }

  // run manifest; timestamp and wall time are the only volatile fields
  json manifest;
  char hash[24];
  std::snprintf(hash, sizeof(hash), "%016" PRIx64, fnv1a64_hash(spec.raw.dump()));
  manifest["spec_hash"] = hash;
  manifest["toolkit_version"] = version;
  manifest["scenario"] = spec.scenario;
  manifest["rows"] = table.rows.size();
  manifest["rows_failed"] = failed;
  manifest["wall_time_seconds"] = wall;
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%FT%TZ", std::gmtime(&tt));
  manifest["timestamp"] = stamp;
  const std::string manifest_path = spec.output_path + ".manifest.json";
  {
    std::ofstream out(manifest_path, std::ios::binary);
    out << manifest.dump(1);
  }

  SweepOutcome outcome;
  outcome.rows_total = static_cast<int>(table.rows.size());
  outcome.rows_failed = failed;
  outcome.output_file = spec.output_path;
  outcome.manifest_file = manifest_path;
  return outcome;
}

std::vector<std::string> check_against_schema(const json& doc, const json& schema,
                                              const std::string& where) {
  std::vector<std::string> out;
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    const bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                    (t == "string" && doc.is_string()) || (t == "number" && doc.is_number()) ||
                    (t == "integer" && doc.is_number_integer()) ||
                    (t == "boolean" && doc.is_boolean()) || (t == "null" && doc.is_null());
    if (!ok) {
      out.push_back(where + ": expected " + t);
      return out;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema.at("enum"))
      if (v == doc) found = true;
    if (!found) out.push_back(where + ": value not in enum");
  }
  if (schema.contains("required") && doc.is_object())
    for (const auto& k : schema.at("required"))
      if (!doc.contains(k.get<std::string>()))
        out.push_back(where + ": missing required '" + k.get<std::string>() + "'");
  if (schema.contains("properties") && doc.is_object())
    for (auto& [k, sub] : schema.at("properties").items())
      if (doc.contains(k)) {
        auto more = check_against_schema(doc.at(k), sub, where + "." + k);
        out.insert(out.end(), more.begin(), more.end());
      }
  if (schema.contains("items") && doc.is_array())
    for (std::size_t i = 0; i < doc.size(); ++i) {
      auto more =
          check_against_schema(doc[i], schema.at("items"), where + "[" + std::to_string(i) + "]");
      out.insert(out.end(), more.begin(), more.end());
      if (out.size() > 20) return out;  // cap noise
    }
  if (schema.contains("anyOf")) {
    bool any = false;
    for (const auto& sub : schema.at("anyOf"))
      if (check_against_schema(doc, sub, where).empty()) any = true;
    if (!any) out.push_back(where + ": no anyOf branch matched");
  }
  return out;
}

}  // namespace vacent

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace vacent {

/// A parsed sweep specification: one scenario plus its parameter grids.
/// The scenario-specific fields stay in `raw`; see the README for the
/// documented dialect.
struct SweepSpec {
  std::string scenario;
  std::string output_path;
  std::string format = "csv";  // csv | json
  double quad_rel_tol = 1e-11;
  bool include_cross_block = false;
  nlohmann::json raw;
};

inline const std::vector<std::string>& known_scenarios() {
  static const std::vector<std::string> s{
      "flat-entropy",   "flat-negativity", "milne-entropy", "milne-negativity",
      "lightcone-limit", "williamson",      "oracle-compare"};
  return s;
}

/// Schema and invariant diagnostics for a spec document; empty on success.
std::vector<std::string> validate_spec(const nlohmann::json& spec);

/// Reads and validates a spec file; I/O failures surface as diagnostics.
std::vector<std::string> validate_spec_file(const std::string& path);

/// Parses a spec file; throws std::runtime_error with the first diagnostic
/// if validation fails.
SweepSpec parse_spec_file(const std::string& path);

struct RunOptions {
  std::string output_override;  ///< overrides spec's output path when set
  std::string format_override;
  double quad_tol_override = 0.0;  ///< > 0 overrides the spec tolerance
  int threads = 0;                 ///< > 0 pins the OpenMP thread count
};

struct SweepOutcome {
  int rows_total = 0;
  int rows_failed = 0;
  std::string output_file;
  std::string manifest_file;
};

/// Runs the sweep: computes every grid row (rows are independent jobs;
/// output order is grid order regardless of completion order), writes the
/// table plus a run manifest. Rows whose element quadrature fails are
/// marked failed and the sweep continues.
SweepOutcome run_sweep(const SweepSpec& spec, const RunOptions& options = {});

/// Minimal structural validator used to check JSON output against the
/// shipped schema (supports type/required/properties/items/enum).
std::vector<std::string> check_against_schema(const nlohmann::json& doc,
                                              const nlohmann::json& schema,
                                              const std::string& where = "$");

std::uint64_t fnv1a64_hash(const std::string& bytes);

}  // namespace vacent

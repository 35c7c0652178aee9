// Batch front-end: one subcommand per sweep scenario plus `validate`.
#include <CLI11.hpp>
#include <cstdio>

#include "vacent/sweep.hpp"
#include "vacent/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"vacent -- vacuum entanglement of a 1+1 scalar field on flat and Milne "
               "hypersurfaces via mode-truncated smeared correlators"};
  app.set_version_flag("--version", vacent::version);
  app.require_subcommand(1);

  std::string spec_path;
  vacent::RunOptions options;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "sweep spec file (JSON)")->required();
    cmd->add_option("--out", options.output_override, "output path (overrides the spec)");
    cmd->add_option("--format", options.format_override, "csv or json (overrides the spec)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", options.threads, "OpenMP thread count");
    cmd->add_option("--tolerance", options.quad_tol_override,
                    "quadrature relative tolerance override");
  };

  for (const std::string& name : vacent::known_scenarios()) add_common(app.add_subcommand(name));
  CLI::App* validate = app.add_subcommand("validate", "check a spec file without running");
  validate->add_option("--spec", spec_path, "sweep spec file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);
  const std::string sub = app.get_subcommands().front()->get_name();

  if (sub == "validate") {
    const auto diags = vacent::validate_spec_file(spec_path);
    for (const auto& d : diags) std::fprintf(stderr, "%s\n", d.c_str());
    if (diags.empty()) std::printf("ok\n");
    return diags.empty() ? 0 : 1;
  }

  try {
    vacent::SweepSpec spec = vacent::parse_spec_file(spec_path);
    if (spec.scenario != sub) {
      std::fprintf(stderr, "spec scenario '%s' does not match subcommand '%s'\n",
                   spec.scenario.c_str(), sub.c_str());
      return 1;
    }
    const vacent::SweepOutcome outcome = vacent::run_sweep(spec, options);
    std::printf("%s: %d rows (%d failed) -> %s\n", spec.scenario.c_str(), outcome.rows_total,
                outcome.rows_failed, outcome.output_file.c_str());
    return outcome.rows_failed == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states and resonances of a short-range potential with an "
               "inverse-square core"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path, config_json, out_override;
  app.add_option("-c,--config", config_path, "JSON configuration file");
  app.add_option("--json", config_json, "inline JSON configuration");
  app.add_option("-o,--out", out_override, "output directory (overrides config)");

  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"classify", "shape class of the potential and its critical points"},
      {"pps", "bound spectrum via the parameter-spectrum inversion"},
      {"hd", "bound spectrum via direct Hamiltonian diagonalization"},
      {"cs", "bound states and resonances via complex scaling"},
      {"wavefunction", "bound-state wavefunctions at their stability plateau"},
      {"sweep", "complex-scaling spectra along a V1 sweep"},
      {"curves", "u1(eps) parameter curves as sampled data"},
      {"reproduce-table1", "check bound levels vs basis size against references"},
      {"reproduce-table2", "check the three-method comparison against references"},
      {"reproduce-table3", "check bound/resonance energies against references"},
  };
  for (const auto& c : commands) app.add_subcommand(c.name, c.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    trapps::cli::RunConfig cfg;
    if (!config_path.empty() && !config_json.empty())
      throw trapps::cli::ConfigError("give either --config or --json, not both");
    if (!config_path.empty()) {
      cfg = trapps::cli::load_config_file(config_path);
    } else if (!config_json.empty()) {
      cfg = trapps::cli::load_config_text(config_json);
    } else {
      throw trapps::cli::ConfigError("a configuration is required (--config FILE "
                                     "or --json TEXT)");
    }
    if (!out_override.empty()) cfg.out = out_override;
    return trapps::cli::run_command(cmd, cfg);
  } catch (const trapps::cli::ConfigError& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& ex) {
    std::cerr << "invalid parameter: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid argument: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& ex) {
    std::cerr << "numerical failure: " << ex.what() << "\n";
    return kExitNumerical;
  }
}

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/scenario.hpp"

namespace {

int list_scenarios() {
  for (const auto& s : itlab::scenario_catalog()) {
    std::cout << s.name << "  " << s.description << "\n";
    for (const auto& p : s.params)
      std::cout << "    " << p.key << " = " << p.default_value << "    # " << p.description << "\n";
  }
  return 0;
}

int run(const std::string& scenario, const std::string& config, const std::string& out,
        const std::vector<std::string>& overrides) {
  std::optional<itlab::ConfigFile> file;
  if (!config.empty()) file = itlab::load_config_file(config);
  const auto cfg = itlab::resolve_config(scenario, file, overrides, out);
  const auto result = itlab::run_scenario(cfg);
  const auto written = itlab::write_outputs(result, cfg.output_dir);
  std::cout << result.summary();
  for (const auto& p : written) std::cout << "wrote " << p.string() << "\n";
  return result.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"itlab: imaging theorem laboratory"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list scenarios and their parameters");
  auto* run_cmd = app.add_subcommand("run", "run one scenario and write CSV output");
  std::string scenario;
  std::string config;
  std::string out = ".";
  std::vector<std::string> overrides;
  run_cmd->add_option("--scenario", scenario, "scenario name")->required();
  run_cmd->add_option("--config", config, "key = value config file");
  run_cmd->add_option("--out", out, "output directory");
  run_cmd->add_option("--set", overrides, "override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*list_cmd) return list_scenarios();
    return run(scenario, config, out, overrides);
  } catch (const itlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const itlab::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

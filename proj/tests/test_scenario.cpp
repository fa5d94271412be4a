#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "itlab/scenario.hpp"

using namespace itlab;

namespace {
std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const CsvTable& table(const ScenarioResult& r, const std::string& name) {
  for (const auto& t : r.tables)
    if (t.name() == name) return t;
  throw std::runtime_error("missing table " + name);
}
}  // namespace

TEST(Config, ParsesSectionAndComments) {
  const auto cfg = parse_config_text("# header\n[fig2]\nsigma = 3   # wider\n\nforce=0.5\r\n");
  ASSERT_TRUE(cfg.section);
  EXPECT_EQ(*cfg.section, "fig2");
  EXPECT_EQ(cfg.values.at("sigma"), "3");
  EXPECT_EQ(cfg.values.at("force"), "0.5");
}

TEST(Config, Malformed) {
  EXPECT_THROW(parse_config_text("[fig1\n"), ConfigError);
  EXPECT_THROW(parse_config_text("[fig1]\n[fig2]\n"), ConfigError);
  EXPECT_THROW(parse_config_text("sigma = 1\n[fig1]\n"), ConfigError);
  EXPECT_THROW(parse_config_text("sigma\n"), ConfigError);
  EXPECT_THROW(parse_config_text("= 1\n"), ConfigError);
  EXPECT_THROW(parse_config_text("a = 1\na = 2\n"), ConfigError);
}

TEST(Config, ResolveOrder) {
  ConfigFile file;
  file.section = "fig2";
  file.values["sigma"] = "3";
  file.values["force"] = "2";
  const auto cfg = resolve_config("fig2", file, {"force=4"});
  EXPECT_EQ(cfg.number("sigma"), 3.0);
  EXPECT_EQ(cfg.number("force"), 4.0);
  EXPECT_EQ(cfg.number("mass"), 1.0);
  EXPECT_EQ(cfg.list("times"), (std::vector<double>{5.0, 10.0, 15.0}));
}

TEST(Config, UnknownKeyNamed) {
  try {
    resolve_config("fig1", std::nullopt, {"sigmaa=3"});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("sigmaa"), std::string::npos);
  }
}

TEST(Config, SectionMismatch) {
  ConfigFile file;
  file.section = "fig1";
  EXPECT_THROW(resolve_config("fig2", file, {}), ConfigError);
}

TEST(Config, BadValues) {
  EXPECT_THROW(resolve_config("fig1", std::nullopt, {"sigma"}), ConfigError);
  const auto cfg = resolve_config("fig1", std::nullopt, {"sigma=ten", "n_times=2.5"});
  EXPECT_THROW(cfg.number("sigma"), ConfigError);
  EXPECT_THROW(cfg.integer("n_times"), ConfigError);
  EXPECT_THROW(cfg.number("missing"), ConfigError);
}

TEST(Config, UnknownScenarioListsNames) {
  try {
    find_scenario("fig3");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    for (const char* name : {"fig1", "fig2", "fringes", "offdiag", "transport", "transition"})
      EXPECT_NE(msg.find(name), std::string::npos) << name;
  }
}

TEST(Scenario, Fig1Defaults) {
  const auto r = run_scenario(resolve_config("fig1", std::nullopt, {}));
  const auto& t = table(r, "fig1_time");
  EXPECT_EQ(t.header(), (std::vector<std::string>{"t", "z_f", "rho_exact", "rho_it"}));
  EXPECT_EQ(t.rows().size(), 2000u);
  EXPECT_EQ(t.rows().front()[0], 1.0);
  EXPECT_EQ(t.rows()[999][0], 1000.0);
  EXPECT_TRUE(r.passed());
}

TEST(Scenario, Fig2Peaks) {
  const auto r = run_scenario(resolve_config("fig2", std::nullopt, {}));
  const auto& peaks = table(r, "fig2_peaks");
  ASSERT_EQ(peaks.rows().size(), 3u);
  EXPECT_EQ(peaks.rows()[0][1], 12.5);
  EXPECT_EQ(peaks.rows()[1][1], 50.0);
  EXPECT_EQ(peaks.rows()[2][1], 112.5);
  for (const auto& row : peaks.rows()) EXPECT_NEAR(row[2], row[1], 0.2);
  EXPECT_TRUE(r.passed());
  EXPECT_NO_THROW(table(r, "fig2_momentum"));
  EXPECT_NO_THROW(table(r, "fig2_position"));
}

TEST(Scenario, FringesLabColumns) {
  const auto r = run_scenario(resolve_config("fringes", std::nullopt, {}));
  const auto& t = table(r, "fringes");
  EXPECT_EQ(t.header()[1], "x_nm");
  EXPECT_NEAR(t.rows().front()[1], -1200.0, 1e-9);
  EXPECT_TRUE(r.passed());
}

TEST(Scenario, OffdiagAndTransition) {
  EXPECT_TRUE(run_scenario(resolve_config("offdiag", std::nullopt, {})).passed());
  const auto tr = run_scenario(resolve_config("transition", std::nullopt, {}));
  EXPECT_TRUE(tr.passed());
  EXPECT_EQ(table(tr, "transition").rows()[1][4], 1836.0 * 1e4);
}

TEST(Scenario, TransportReportsFailures) {
  const auto ok = run_scenario(resolve_config("transport", std::nullopt, {}));
  EXPECT_TRUE(ok.passed());
  const auto early = run_scenario(resolve_config("transport", std::nullopt, {"t1=500", "t2=1000"}));
  EXPECT_FALSE(early.passed());
}

TEST(Scenario, OffdiagUndersampling) {
  EXPECT_THROW(run_scenario(resolve_config("offdiag", std::nullopt, {"samples_per_period=10"})), ConfigError);
}

TEST(Scenario, OutputsAreDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "itlab_scenario_test";
  std::filesystem::remove_all(dir);
  const auto cfg = resolve_config("fig2", std::nullopt, {});
  const auto a = write_outputs(run_scenario(cfg), dir / "a");
  const auto b = write_outputs(run_scenario(cfg), dir / "b");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].filename(), b[k].filename());
    EXPECT_EQ(slurp(a[k]), slurp(b[k]));
  }
  const std::string csv = slurp(dir / "a" / "fig2_position.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,z_f,rho_exact,rho_it");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  std::filesystem::remove_all(dir);
}

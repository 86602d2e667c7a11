#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dubovsky/cli.hpp"
#include "dubovsky/csv.hpp"
#include "dubovsky/presets.hpp"

using namespace dubovsky;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dubovsky");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("dubovsky_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string field(const std::string& report, const std::string& key) {
  const auto at = report.find("\n" + key + "=");
  const auto start = at == std::string::npos ? report.find(key + "=") : at + 1;
  REQUIRE(start != std::string::npos);
  const auto value = start + key.size() + 1;
  return report.substr(value, report.find('\n', value) - value);
}

}  // namespace

TEST_CASE("presets subcommand lists all scenarios") {
  const auto r = invoke({"presets"});
  CHECK(r.code == kExitOk);
  for (const auto& p : preset_catalog()) CHECK(r.out.find(p.name) != std::string::npos);
}

TEST_CASE("run writes csv and plots") {
  const auto dir = scratch_dir("run");
  const auto r = invoke({"run", "--preset", "fig1", "--csv", "--plots", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(dir / "fig1.csv"));
  CHECK(fs::exists(dir / "fig1_osc.svg"));
  CHECK(fs::exists(dir / "fig1_phase.svg"));
  CHECK(field(r.out, "scenario") == "fig1");
  CHECK(field(r.out, "regime") == "center");

  const auto summary = nlohmann::json::parse(field(r.out, "json"));
  CHECK(summary["regime"] == "center");
  CHECK(summary["secondary_period"].is_null());

  const auto traj = read_csv((dir / "fig1.csv").string());
  CHECK(traj.size() == 5001);
}

TEST_CASE("run honours --tau and config files") {
  const auto dir = scratch_dir("config");
  write_file(dir / "short.ini", "preset = fig2\nT = 40\n[output]\ncsv = true\n");
  const auto r = invoke({"run", "--config", (dir / "short.ini").string(), "--tau", "0.1",
                         "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(field(r.out, "scenario") == "fig2");
  CHECK(read_csv((dir / "fig2.csv").string()).size() == 401);
}

TEST_CASE("analyze classifies a saved trajectory") {
  const auto dir = scratch_dir("analyze");
  REQUIRE(invoke({"run", "--preset", "fig3", "--csv", "--out", dir.string()}).code == kExitOk);
  const auto csv = (dir / "fig3.csv").string();

  const auto bare = invoke({"analyze", "--csv", csv});
  CHECK(bare.code == kExitOk);
  CHECK(field(bare.out, "regime") == "stable_focus");

  const auto with_preset = invoke({"analyze", "--csv", csv, "--preset", "fig3"});
  CHECK(field(with_preset.out, "regime") == "stable_focus");

  const auto hinted = invoke({"analyze", "--csv", csv, "--forcing", "zero"});
  CHECK(field(hinted.out, "regime") == "stable_focus");
}

TEST_CASE("exit codes") {
  const auto unknown = invoke({"run", "--preset", "fig9"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("fig1, fig2, fig3, fig4, fig5, fig6") != std::string::npos);

  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"run"}).code == kExitUsage);
  CHECK(invoke({"run", "--preset", "fig1", "--config", "x.ini"}).code == kExitUsage);
  CHECK(invoke({"analyze"}).code == kExitUsage);
  CHECK(invoke({"analyze", "--csv", "x.csv", "--forcing", "sometimes"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);

  const auto dir = scratch_dir("codes");
  const auto missing = invoke({"analyze", "--csv", (dir / "absent.csv").string()});
  CHECK(missing.code == kExitRuntime);
  CHECK_FALSE(missing.err.empty());
  CHECK(invoke({"run", "--config", (dir / "absent.ini").string()}).code == kExitRuntime);

  write_file(dir / "bad.ini", "n = 1.5\n");
  const auto bad = invoke({"run", "--config", (dir / "bad.ini").string()});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("n must lie in (0,1)") != std::string::npos);

  write_file(dir / "wild.ini", "T = 50\nN = 50\na = 50\nb = 40\n");
  const auto wild = invoke({"run", "--config", (dir / "wild.ini").string()});
  CHECK(wild.code == kExitRuntime);
  CHECK(wild.err.find("blew up") != std::string::npos);

  write_file(dir / "garbage.csv", "t,x,y\n0,1,oops\n");
  CHECK(invoke({"analyze", "--csv", (dir / "garbage.csv").string()}).code == kExitUsage);
}

TEST_CASE("sweep produces one row per grid point") {
  const auto dir = scratch_dir("sweep");
  write_file(dir / "grid.ini",
             "preset = fig3\nT = 40\n[sweep]\nalpha = range(0.7, 1.0, 4)\nbeta = [0.9, 1]\n");
  const auto r = invoke({"sweep", "--config", (dir / "grid.ini").string(), "--jobs", "3"});
  REQUIRE(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  CHECK(r.out.starts_with("index,alpha,beta,forcing,"));

  const auto file = dir / "table.csv";
  REQUIRE(invoke({"sweep", "--config", (dir / "grid.ini").string(), "--out", file.string()})
              .code == kExitOk);
  std::ifstream in(file);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == r.out);

  CHECK(invoke({"sweep"}).code == kExitUsage);
  CHECK(invoke({"sweep", "--config", (dir / "grid.ini").string(), "--jobs", "0"}).code ==
        kExitUsage);
}

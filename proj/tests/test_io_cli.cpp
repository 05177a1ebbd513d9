#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "digifix/cli.hpp"
#include "digifix/error.hpp"
#include "digifix/io.hpp"
#include "digifix/report.hpp"

using namespace digifix;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("digifix-test-" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<DigitalImage> presets() {
  return {generate("interval", {-2, 3}), generate("cycle", {7}),   generate("box", {3, 2, 2}),
          generate("cube"),              generate("wedge_cycles_8"), generate("fig_xexample"),
          generate("fig_sexample"),      product({generate("cycle", {4}), generate("interval", {0, 1})}, 1)};
}

}  // namespace

TEST_CASE("image round trip") {
  TempDir dir;
  for (const auto& x : presets()) {
    CAPTURE(x.name());
    const auto back = io::image_from_json(io::image_to_json(x));
    CHECK(back.name() == x.name());
    CHECK(back.edges() == x.edges());
    CHECK(back.has_points() == x.has_points());
    if (x.has_points()) CHECK(back.points() == x.points());
    io::save_image(dir / "img", x);
    const auto loaded = io::load_image(dir / "img");
    CHECK(loaded.edges() == x.edges());
    CHECK(io::canonical(io::image_to_json(loaded)) == io::canonical(io::image_to_json(x)));
  }
}

TEST_CASE("image format errors") {
  auto j = io::image_to_json(generate("cycle", {5}));
  j["adjacency"]["kind"] = "hex";
  CHECK_THROWS_WITH_AS(io::image_from_json(j), doctest::Contains("image.adjacency.kind"), InvalidInput);

  j = io::image_to_json(generate("interval", {0, 3}));
  j["format"] = "digifix-image/9";
  CHECK_THROWS_AS(io::image_from_json(j), InvalidInput);

  j = io::image_to_json(generate("interval", {0, 3}));
  j["points"][1] = json::array({0});
  CHECK_THROWS_AS(io::image_from_json(j), InvalidInput);

  TempDir dir;
  std::ofstream(dir / "broken") << "{\"format\": \"digifix-image/1\",\n  \"name\": }";
  CHECK_THROWS_WITH_AS(io::load_image(dir / "broken"), doctest::Contains("broken"), InvalidInput);
  CHECK_THROWS_AS(io::load_image(dir / "missing"), InvalidInput);
}

TEST_CASE("map files") {
  const SelfMap f({2, 0, 1});
  CHECK(io::map_from_json(io::map_to_json(f)) == f);
  CHECK_THROWS_AS(io::map_from_json(json{{"format", io::kMapFormat}, {"targets", {0, 3}}}), InvalidInput);
  CHECK_THROWS_AS(io::map_from_json(json{{"format", "other"}, {"targets", {0}}}), InvalidInput);
}

TEST_CASE("reports") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  Report r;
  r.command = "spectrum";
  r.input_digest = "d";
  r.result = {{"spectrum", {0, 2}}};
  r.stats.elapsed = std::chrono::milliseconds(5);
  const auto j = write_report(r, ReportFormat::json);
  CHECK(j == R"({"command":"spectrum","input_digest":"d","result":{"spectrum":[0,2]},)"
             R"("stats":{"maps_enumerated":0,"nodes_visited":0,"truncated":false},"version":"digifix 1.0.0"})"
             "\n");
  r.stats.elapsed = std::chrono::milliseconds(50);
  CHECK(write_report(r, ReportFormat::json) == j);
  CHECK(write_report(r, ReportFormat::csv) == "spectrum,0\nspectrum,2\n");
  r.result = {{"spectrum", json::array()}};
  CHECK(write_report(r, ReportFormat::csv).empty());
  CHECK(write_report(r, ReportFormat::json).find("\"spectrum\":[]") != std::string::npos);
  CHECK(write_report(r, ReportFormat::text).find("elapsed") != std::string::npos);
  CHECK_THROWS_AS(parse_report_format("xml"), InvalidInput);
}

TEST_CASE("cli commands") {
  TempDir dir;
  REQUIRE(run({"gen", "cycle", "7", "-o", dir / "c7"}).code == kExitOk);
  auto r = run({"spectrum", dir / "c7"});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["result"]["spectrum"] == json({0, 1, 2, 3, 4, 7}));
  CHECK(j["command"] == "spectrum");
  CHECK(j["input_digest"].get<std::string>().size() == 64);

  REQUIRE(run({"gen", "fig_xexample", "-o", dir / "x"}).code == kExitOk);
  j = json::parse(run({"rigid", dir / "x"}).out);
  CHECK(j["result"]["rigid"] == true);
  CHECK(j["result"]["vertices"] == 18);

  REQUIRE(run({"gen", "fig_sexample", "-o", dir / "s"}).code == kExitOk);
  j = json::parse(run({"spectrum", dir / "s"}).out);
  CHECK(j["result"]["spectrum"] == json({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15}));

  r = run({"--format", "csv", "spectrum", dir / "c7"});
  CHECK(r.out == "spectrum,0\nspectrum,1\nspectrum,2\nspectrum,3\nspectrum,4\nspectrum,7\n");

  io::save_map(dir / "flip", cycle_map(7, CycleMapKind::flip_composed, 0));
  j = json::parse(run({"sfix", dir / "c7", "--map", dir / "flip"}).out);
  CHECK(j["result"]["spectrum"] == json({1}));
  CHECK(j["result"]["class_size"] == 7);

  j = json::parse(run({"fixset", dir / "c7", "--map", dir / "flip"}).out);
  CHECK(j["result"]["fixed"] == json({0}));
  CHECK(j["result"]["structure"] == "connected");

  REQUIRE(run({"gen", "interval", "1", "3", "-o", dir / "i"}).code == kExitOk);
  j = json::parse(run({"pull", dir / "i"}).out);
  CHECK(j["result"]["pull"][1]["value"] == 2);
  CHECK(j["result"]["min"] == 1);
  j = json::parse(run({"pull", dir / "i", "--point", "0"}).out);
  CHECK(j["result"]["pull"].size() == 1);

  j = json::parse(run({"classes", dir / "c7"}).out);
  CHECK(j["result"]["count"] == 3);

  j = json::parse(run({"criterion", dir / "i"}).out);
  CHECK(j["result"]["holds"] == true);
  CHECK(j["result"]["pair"] == json({0, 1}));

  j = json::parse(run({"lasso", dir / "x"}).out);
  CHECK(j["result"]["certified"] == true);
  j = json::parse(run({"lasso", dir / "c7"}).out);
  CHECK(j["result"]["certified"] == false);
  CHECK(j["result"]["missing"].size() == 14);

  REQUIRE(run({"gen", "cube", "-o", dir / "cube"}).code == kExitOk);
  j = json::parse(run({"retract", dir / "cube", "--subset", "0,2,4,6"}).out);
  CHECK(j["result"]["retract"] == true);
  CHECK(j["result"]["deformation"] == "yes");

  REQUIRE(run({"-o", dir / "report", "spectrum", dir / "c7"}).code == kExitOk);
  std::ifstream in(dir / "report");
  CHECK(json::parse(in)["result"]["spectrum"].size() == 6);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"spectrum"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "spectrum", "f"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"spectrum", dir / "missing"}).code == kExitInvalidInput);
  CHECK(run({"gen", "torus", "-o", dir / "t"}).code == kExitInvalidInput);

  REQUIRE(run({"gen", "fig_sexample", "-o", dir / "s"}).code == kExitOk);
  const auto r = run({"--budget", "100", "spectrum", dir / "s"});
  CHECK(r.code == kExitBudget);
  CHECK(r.err.find("budget") != std::string::npos);

  ::setenv(kBudgetEnv, "100", 1);
  CHECK(run({"spectrum", dir / "s"}).code == kExitBudget);
  CHECK(run({"--budget", "1000000000", "spectrum", dir / "s"}).code == kExitOk);
  ::setenv(kBudgetEnv, "lots", 1);
  CHECK(run({"spectrum", dir / "s"}).code == kExitInvalidInput);
  ::unsetenv(kBudgetEnv);

  REQUIRE(run({"gen", "cycle", "5", "-o", dir / "c5"}).code == kExitOk);
  io::save_map(dir / "torn", SelfMap({0, 2, 0, 0, 0}));
  CHECK(run({"sfix", dir / "c5", "--map", dir / "torn"}).code == kExitInvalidInput);
  io::save_map(dir / "short", SelfMap({0, 1}));
  CHECK(run({"fixset", dir / "c5", "--map", dir / "short"}).code == kExitInvalidInput);
  CHECK(run({"retract", dir / "c5", "--subset", "0,x"}).code == kExitInvalidInput);
}

TEST_CASE("negative generator parameters") {
  const auto r = run({"gen", "interval", "-2", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(io::image_from_json(json::parse(r.out)).size() == 5);
}

TEST_CASE("verify subset") {
  const auto r = run({"verify", "--only", "1", "10"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS  1") != std::string::npos);
  CHECK(r.out.find("PASS 10") != std::string::npos);
  const auto j = run({"--format", "json", "verify", "--only", "10"});
  CHECK(json::parse(j.out)["result"]["passed"] == true);
}

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "support.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DEARR_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return testing::fixture(name).string(); }

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

/// Differences between a `faces` output and its golden file, one line each.
std::vector<std::string> golden_mismatches(const nlohmann::json& actual, const nlohmann::json& golden) {
  std::vector<std::string> diffs;
  if (actual["f_vector"] != golden["f_vector"])
    diffs.push_back("f_vector " + actual["f_vector"].dump() + " != " + golden["f_vector"].dump());
  if (actual["faces"].size() != golden["faces"].size()) {
    diffs.push_back("face count differs");
    return diffs;
  }
  for (std::size_t i = 0; i < actual["faces"].size(); ++i)
    if (actual["faces"][i] != golden["faces"][i]) diffs.push_back("face " + std::to_string(i) + " differs");
  return diffs;
}

}  // namespace

TEST_CASE("cli mobius and fpoly", "[cli]") {
  CHECK(run("mobius --text " + fixture("axes.json")).out == "x^2 + 2xy + y^2 - 2x - 2y + 1\n");
  CHECK(run("mobius --text " + fixture("empty.json")).out == "1\n");
  CHECK(run("mobius --text " + fixture("concurrent3.json")).out == "x^2 + 3xy + y^2 - 3x - 3y + 2\n");
  CHECK(run("fpoly --text " + fixture("generic3.json")).out == "3x^2 + 9x + 7\n");
  CHECK(run("fpoly --text " + fixture("empty.json")).out == "1\n");
  CHECK(run("fpoly --text " + fixture("semilattice_nine.json")).out == "5x^2 + 20x + 16\n");
  CHECK(run("fpoly --text " + fixture("wiring_nine.json")).out == "5x^2 + 20x + 16\n");

  const auto j = nlohmann::json::parse(run("mobius " + fixture("semilattice_axes.json")).out);
  CHECK(j["string"] == "x^2 + 2xy + y^2 - 2x - 2y + 1");

  const auto bad = run("mobius " + fixture("semilattice_two_minima.json"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());
}

TEST_CASE("cli faces", "[cli]") {
  const auto axes = nlohmann::json::parse(run("faces " + fixture("axes.json")).out);
  CHECK(axes["f_vector"] == nlohmann::json::array({1, 4, 4}));
  const auto triple = nlohmann::json::parse(run("faces " + fixture("wiring_triple.json")).out);
  CHECK(triple["f_vector"] == nlohmann::json::array({1, 6, 6}));
  CHECK(run("faces " + fixture("semilattice_axes.json")).exit_code == 2);
  CHECK(run("--cap 1 faces " + fixture("axes.json")).exit_code == 2);
  CHECK(run("faces /nonexistent.json").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("cli faces output matches golden files", "[cli]") {
  const std::filesystem::path golden_dir = DEARR_GOLDEN_DIR;
  for (const char* name : {"axes", "concurrent3", "generic3", "simplex3d", "wiring_triple", "wiring_generic3"}) {
    CAPTURE(name);
    const auto actual = nlohmann::json::parse(run("faces " + fixture(std::string(name) + ".json")).out);
    const auto golden = read_json(golden_dir / (std::string("faces_") + name + ".json"));
    CHECK(golden_mismatches(actual, golden).empty());

    // negative control: a corrupted face count must be caught
    auto corrupted = golden;
    corrupted["f_vector"][1] = corrupted["f_vector"][1].get<long>() + 1;
    CHECK_FALSE(golden_mismatches(actual, corrupted).empty());
  }
}

TEST_CASE("cli verify on every bundled fixture", "[cli]") {
  for (const auto& entry : std::filesystem::directory_iterator(DEARR_FIXTURE_DIR)) {
    const auto name = entry.path().filename().string();
    if (name.starts_with("semilattice")) continue;
    CAPTURE(name);
    const auto r = run("verify --json " + entry.path().string());
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["euler_check"] == true);
  }
  const auto axes = nlohmann::json::parse(run("verify --json " + fixture("axes.json")).out);
  CHECK(axes["euler"] == "1");
  CHECK(run("verify " + fixture("semilattice_axes.json")).exit_code == 2);
}

TEST_CASE("cli gen is deterministic and verifiable", "[cli]") {
  const auto tmp = std::filesystem::temp_directory_path() / "dearr_cli_test";
  std::filesystem::create_directories(tmp);

  const auto first = run("gen --kind hyperplanes --dim 2 --count 4 --seed 1");
  CHECK(first.exit_code == 0);
  CHECK(first.out == run("gen --kind hyperplanes --dim 2 --count 4 --seed 1").out);
  CHECK(first.out != run("gen --kind hyperplanes --dim 2 --count 4 --seed 2").out);

  const auto wiring = run("gen --kind wiring --wires 4 --seed 7");
  CHECK(wiring.exit_code == 0);
  CHECK(wiring.out == run("gen --kind wiring --wires 4 --seed 7").out);

  for (int seed = 1; seed <= 10; ++seed) {
    for (const std::string args : {"--kind hyperplanes --dim 3 --count 5", "--kind wiring --wires 6"}) {
      const auto doc = run("gen " + args + " --seed " + std::to_string(seed));
      const auto path = tmp / "doc.json";
      std::ofstream(path) << doc.out;
      CHECK(run("verify " + path.string()).exit_code == 0);
    }
  }

  CHECK(run("gen --kind hyperplanes --seed 1 --dim 0").exit_code == 2);
  CHECK(run("gen --kind wiring --seed 1 --wires 0").exit_code == 2);
  CHECK(run("gen --kind polytope --seed 1").exit_code == 2);
  CHECK(run("gen --kind wiring").exit_code == 2);
  std::filesystem::remove_all(tmp);
}

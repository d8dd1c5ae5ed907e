// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "chanest/cli.hpp"
#include "chanest/errors.hpp"
#include "chanest/table.hpp"

using namespace chanest;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("chanest_cli_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

int invoke(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::vector<const char*> argv{"chanest"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_CASE("direct flag mapping") {
  const RunConfig cfg = parse_config({"alpha-curve", "--epsilon", "0.05", "--seed", "3"});
  CHECK(cfg.command == "alpha-curve");
  CHECK(cfg.seed == 3);
  CHECK(cfg.overrides["epsilon"].get<double>() == 0.05);
}

TEST_CASE("lists and ranges") {
  const RunConfig a = parse_config({"alpha-curve", "--kappa", "100:500:100"});
  CHECK(a.overrides["kappa"].get<std::vector<int>>() == std::vector<int>{100, 200, 300, 400, 500});
  const RunConfig b = parse_config({"fig5", "--snr=-10,0,10", "--k", "4,8"});
  CHECK(b.overrides["snr"].get<std::vector<double>>() == std::vector<double>{-10, 0, 10});
  CHECK(b.overrides["k"].get<std::vector<int>>() == std::vector<int>{4, 8});
  const RunConfig c = parse_config({"partition", "--snr", "-10:30:5"});
  CHECK(c.overrides["snr"].size() == 9);
}

TEST_CASE("flags override the config file") {
  const nlohmann::json file = {{"command", "partition"}, {"m", 600}, {"seed", 5}};
  const RunConfig from_file = parse_config({}, file);
  CHECK(from_file.command == "partition");
  CHECK(from_file.overrides["m"] == 600);
  CHECK(from_file.seed == 5);
  const RunConfig both = parse_config({"partition", "--m", "1200"}, file);
  CHECK(both.overrides["m"] == 1200);
  CHECK(both.seed == 5);
}

TEST_CASE("config file loaded from disk") {
  const auto dir = scratch("config");
  std::filesystem::create_directories(dir);
  write_text_file(dir / "c.json", R"({"command": "alpha-curve", "epsilon": 0.1, "kappa": [100, 200]})");
  const RunConfig cfg = parse_config({"--config", (dir / "c.json").string(), "--epsilon", "0.05"});
  CHECK(cfg.command == "alpha-curve");
  CHECK(cfg.overrides["epsilon"].get<double>() == 0.05);
  CHECK(cfg.overrides["kappa"].size() == 2);
}

TEST_CASE("usage errors name the offending key") {
  try {
    parse_config({"alpha-curve", "--bogus", "1"});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("--bogus") != std::string::npos);
  }
  try {
    parse_config({}, nlohmann::json{{"command", "fig5"}, {"blocks", {30}}});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("blocks") != std::string::npos);
  }
  try {
    parse_config({}, nlohmann::json{{"command", "fig5"}, {"colour", 1}});
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config({"fig5", "--m", "six"}), UsageError);
  CHECK_THROWS_AS(parse_config({}), UsageError);
  CHECK_THROWS_AS(parse_config({"fig5", "--workers", "0"}), UsageError);
}

TEST_CASE("output directory defaults to the environment") {
  ::setenv("CHANEST_OUT", "/tmp/chanest_env_out", 1);
  CHECK(parse_config({"alpha-curve"}).out_dir == "/tmp/chanest_env_out");
  CHECK(parse_config({"alpha-curve", "--out", "/tmp/x"}).out_dir == "/tmp/x");
  ::unsetenv("CHANEST_OUT");
  CHECK(parse_config({"alpha-curve"}).out_dir == "out");
}

TEST_CASE("alpha-curve writes a CSV containing the anchor and is reproducible") {
  const auto dir = scratch("alpha");
  std::string out;
  const std::vector<std::string> args{"alpha-curve", "--epsilon", "0.05", "--kappa", "100:5000:100",
                                      "--seed", "1", "--out", dir.string(), "--plot"};
  REQUIRE(invoke(args, &out) == 0);
  const std::string csv = read_text_file(dir / "alpha-curve.csv");
  CHECK(csv.rfind("kappa,alpha,epsilon\r\n", 0) == 0);
  const auto pos = csv.find("\r\n1200,");
  REQUIRE(pos != std::string::npos);
  const double alpha = std::stod(csv.substr(pos + 7));
  CHECK(alpha == doctest::Approx(0.1).epsilon(0.05));
  CHECK(std::filesystem::exists(dir / "alpha-curve.svg"));
  CHECK(std::filesystem::exists(dir / "alpha-curve.meta.json"));
  const std::string meta = read_text_file(dir / "alpha-curve.meta.json");
  REQUIRE(invoke(args) == 0);
  CHECK(read_text_file(dir / "alpha-curve.csv") == csv);
  CHECK(read_text_file(dir / "alpha-curve.meta.json") == meta);
}

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  std::string err;
  CHECK(invoke({"alpha-curve", "--bogus"}, nullptr, &err) == 2);
  CHECK(err.find("--bogus") != std::string::npos);
  CHECK(invoke({"partition", "--blocks", "7", "--out", dir.string()}, nullptr, &err) == 3);
  CHECK(err.find("does not divide") != std::string::npos);
  std::string out;
  CHECK(invoke({"--help"}, &out) == 0);
  CHECK(out.find("alpha-curve") != std::string::npos);
}

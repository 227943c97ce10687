#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + PSUMS_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, k);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  nlohmann::json j;
  in >> j;
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("selftest exits cleanly") {
  const Run r = run("selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("Newman-Rivlin target at w = 0 is one half") {
  std::filesystem::remove_all("cli_nr");
  const Run r = run("ratio --theorem newman-rivlin --n 64 --w 0 --out cli_nr --format json");
  REQUIRE(r.code == 0);
  const auto j = read_json("cli_nr/ratio_n64.json");
  CHECK(j["rows"][0]["target_re"] == 0.5);
  CHECK(j["rows"][0]["target_im"] == 0.0);
  CHECK(read_json("cli_nr/manifest.json")["files"].size() == 2);
}

TEST_CASE("configuration errors exit with code 2") {
  CHECK(run("ratio --n 64 --w -1 --precision 100 --out cli_bad").code == 2);
  CHECK(run("ratio --n 0 --w -1 --out cli_bad").code == 2);
  CHECK(run("disks --n 50 --eps 0.7 --out cli_bad").code == 2);
  CHECK(run("ratio --model ml --n 64 --w -1 --out cli_bad").code == 2);
  CHECK(run("ratio --config does_not_exist.json").code == 2);
  CHECK(run("nonsense").code == 2);
  {
    std::ofstream bad("cli_bad_key.json");
    bad << R"({"n_grid": [64], "w_points": [[-1, 0]], "colour": "red"})";
  }
  CHECK(run("ratio --config cli_bad_key.json").code == 2);
}

TEST_CASE("identical runs give identical bytes") {
  std::filesystem::remove_all("cli_det_a");
  std::filesystem::remove_all("cli_det_b");
  REQUIRE(run("zeros --n 10,20 --window 0.5 --out cli_det_a").code == 0);
  REQUIRE(run("zeros --n 10,20 --window 0.5 --out cli_det_b").code == 0);
  const auto a = read_json("cli_det_a/manifest.json")["files"];
  const auto b = read_json("cli_det_b/manifest.json")["files"];
  CHECK(a == b);
  CHECK(slurp("cli_det_a/zeros.csv") == slurp("cli_det_b/zeros.csv"));
}

TEST_CASE("config file values are overridden by flags") {
  std::filesystem::remove_all("cli_cfg");
  {
    std::ofstream cfg("cli_cfg.json");
    cfg << R"({"model": "ml", "lambda": 2, "n_grid": [64], "w_points": [[-1, 0], [-0.5, 0.5]],
              "output_dir": "cli_cfg", "theorem": "esv"})";
  }
  REQUIRE(run("ratio --config cli_cfg.json --n 32").code == 0);
  const auto m = read_json("cli_cfg/manifest.json");
  CHECK(m["config"]["n_grid"] == nlohmann::json::array({32}));
  CHECK(m["config"]["model"] == "ml");
  CHECK(m["config"]["lambda"] == 2.0);
  CHECK(std::filesystem::exists("cli_cfg/ratio_n32.csv"));
  CHECK_FALSE(std::filesystem::exists("cli_cfg/ratio_n64.csv"));
}

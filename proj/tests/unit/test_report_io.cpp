#include "psums/report_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace psums;
using nlohmann::json;

TEST_CASE("integer and complex list parsing") {
  CHECK(parse_int_list("64,256") == std::vector<int>{64, 256});
  CHECK(parse_int_list("1..4") == std::vector<int>{1, 2, 3, 4});
  CHECK(parse_int_list("4..10:3") == std::vector<int>{4, 7, 10});
  CHECK_THROWS_AS(parse_int_list("4..x"), ConfigError);
  CHECK(parse_complex("1+i") == Complex(1.0, 1.0));
  CHECK(parse_complex("-2-0.5i") == Complex(-2.0, -0.5));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("0.25") == Complex(0.25, 0.0));
  CHECK(parse_complex("1+2j") == Complex(1.0, 2.0));
  CHECK_THROWS_AS(parse_complex("1+xi"), ConfigError);
  CHECK(parse_complex_list("0,i,2i,1+i").size() == 4);
  const WRect r = parse_w_rect("-2:-0.1:-1:1", 21);
  CHECK(r == WRect{});
}

TEST_CASE("w grid expansion runs im outer, re inner") {
  ExperimentConfig c;
  c.w_rect = WRect{-1.0, 0.0, 0.0, 1.0, 3};
  const auto g = expand_w_grid(c);
  REQUIRE(g.size() == 9);
  CHECK(g[0] == Complex(-1.0, 0.0));
  CHECK(g[1] == Complex(-0.5, 0.0));
  CHECK(g[3] == Complex(-1.0, 0.5));
  CHECK(g[8] == Complex(0.0, 1.0));
}

TEST_CASE("config JSON round trip and validation") {
  ExperimentConfig c;
  c.model = "ml";
  c.lambda = 2.0;
  c.n_grid = {64, 256};
  c.w_points = {Complex(-1.0, 0.5), Complex(0.0, 0.0)};
  c.format = OutputFormat::Json;
  c.z_probe = {1.0, -0.02};
  CHECK(config_from_json(to_json(c)) == c);
  CHECK_NOTHROW(validate(c));

  CHECK_THROWS_AS(config_from_json(json{{"modle", "exp"}}), ConfigError);
  CHECK(config_from_json(json{{"z_probe", "1+0.1i"}}).z_probe == Complex(1.0, 0.1));

  ExperimentConfig bad = c;
  bad.lambda.reset();
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.n_grid = {0};
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.precision_bits = 100;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = c;
  bad.w_points.clear();
  CHECK_THROWS_AS(validate(bad), ConfigError);
  CHECK_NOTHROW(validate(bad, false));
  bad = c;
  bad.epsilon = 0.5;
  CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("shortest round-trip number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.0) == "-2");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("CSV table layout") {
  CsvTable t({"n", "w_re", "w_im", "note"});
  t.row().add(64).add(Complex(-1.0, 0.5)).add(std::string("a,\"b\""));
  CHECK(t.str() == "schema_version,n,w_re,w_im,note\r\n1,64,-1,0.5,\"a,\"\"b\"\"\"\r\n");
  const json j = t.json();
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["rows"][0]["w_im"] == 0.5);
  CHECK(j["rows"][0]["note"] == "a,\"b\"");
  CHECK(csv_escape("plain") == "plain");
}

TEST_CASE("crc32 check value") { CHECK(crc32_of("123456789") == 0xCBF43926u); }

TEST_CASE("run writer manifest lists every file") {
  const std::string dir = (std::filesystem::temp_directory_path() / "psums_report_io_test").string();
  std::filesystem::remove_all(dir);
  ExperimentConfig c;
  c.output_dir = dir;
  RunWriter w(c, "unit");
  w.begin_stage("first");
  CsvTable t({"x"});
  t.row().add(1.5);
  w.write_table("table", t);
  w.write_json("extra.json", {{"k", 1}});
  const std::string manifest_path = w.finish();
  std::ifstream in(manifest_path);
  json m;
  in >> m;
  CHECK(m["schema_version"] == kSchemaVersion);
  REQUIRE(m["files"].size() == 2);
  CHECK(m["files"][0]["name"] == "table.csv");
  CHECK(m["files"][0]["bytes"] == t.str().size());
  char hex[9];
  std::snprintf(hex, sizeof hex, "%08x", crc32_of(t.str()));
  CHECK(m["files"][0]["crc32"] == hex);
  CHECK(m["stages"][0]["name"] == "first");
  CHECK(config_from_json(m["config"]) == c);
  std::filesystem::remove_all(dir);
}

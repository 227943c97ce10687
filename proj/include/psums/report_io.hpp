#pragma once

#include "psums/function_models.hpp"
#include "psums/precision.hpp"
#include "psums/types.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace psums {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

/// Bad configuration (flags or config file). The CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Csv, Json };

/// re_min:re_max:im_min:im_max sampled at resolution x resolution points.
struct WRect {
  double re_min = -2.0, re_max = -0.1, im_min = -1.0, im_max = 1.0;
  int resolution = 21;
  bool operator==(const WRect&) const = default;
};

struct ExperimentConfig {
  std::string model = "exp";
  /// Needed for Mittag-Leffler.
  std::optional<double> lambda;
  std::vector<int> n_grid;
  /// Explicit w points; when empty, w_rect (if set) supplies the grid.
  std::vector<Complex> w_points;
  std::optional<WRect> w_rect;
  /// Disk-count exponent offset.
  double epsilon = 0.1;
  /// Quadrature tolerance for the contour integrals.
  double tolerance = 1e-12;
  int precision_bits = 512;
  std::string output_dir = "psums_out";
  OutputFormat format = OutputFormat::Csv;

  // subcommand options
  std::string theorem = "main";  // main | newman-rivlin | esv
  std::string scaling = "none";  // none | by_n | by_r_n
  std::string overlay;           // "", parabola, szego, both
  double window = 0.0;           // zeros: summarize zeros with |z - 1| <= window
  std::string lemmas;            // "", all, or a list like 2,3
  std::string check;             // "", jumps, fnexplicit, m, fg, pipeline, all
  Complex z_probe{1.0, 0.03};

  bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ConfigError naming the first violated field. Commands without a w grid pass false.
void validate(const ExperimentConfig& config, bool needs_w_grid = true);

nlohmann::json to_json(const ExperimentConfig& config);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

EntireFunctionModel make_model(const ExperimentConfig& config);
Precision precision_ceiling(const ExperimentConfig& config);

/// Explicit points, or the rectangle grid row by row (imaginary part outermost).
std::vector<Complex> expand_w_grid(const ExperimentConfig& config);

/// "64,256,1024", "1..50", "4..40:2" (step) or mixtures separated by commas.
std::vector<int> parse_int_list(const std::string& text);
/// Complex literal: "1", "-0.5", "2i", "i", "-i", "1+i", "-2-0.5i".
Complex parse_complex(const std::string& text);
/// Comma-separated complex literals.
std::vector<Complex> parse_complex_list(const std::string& text);
WRect parse_w_rect(const std::string& text, int resolution);

std::string format_double(double x);

/// A CSV table; the first column of every file is the schema version.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);
  CsvTable& row();
  CsvTable& add(const std::string& s);
  CsvTable& add(double x);
  CsvTable& add(long x);
  CsvTable& add(int x) { return add(long(x)); }
  CsvTable& add(bool b) { return add(std::string(b ? "true" : "false")); }
  /// Two columns, real then imaginary part.
  CsvTable& add(Complex z);
  std::string str() const;
  /// Array of objects keyed by column name, values as in the CSV.
  nlohmann::json json() const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);

nlohmann::json complex_json(Complex z);

std::uint32_t crc32_of(const std::string& bytes);

/// Output directory plus manifest: every file goes through write(), which records
/// its size and CRC-32, and stages record wall-clock seconds.
class RunWriter {
 public:
  RunWriter(const ExperimentConfig& config, std::string command);

  void write(const std::string& name, const std::string& contents);
  void write_table(const std::string& stem, const CsvTable& table);
  void write_json(const std::string& name, const nlohmann::json& j);

  void begin_stage(const std::string& name);
  void end_stage();

  /// Writes manifest.json and returns its path.
  std::string finish();
  const std::string& directory() const { return dir_; }

 private:
  struct FileEntry {
    std::string name;
    std::size_t bytes = 0;
    std::uint32_t crc = 0;
  };
  struct Stage {
    std::string name;
    double seconds = 0.0;
  };

  ExperimentConfig config_;
  std::string command_;
  std::string dir_;
  std::vector<FileEntry> files_;
  std::vector<Stage> stages_;
  std::optional<std::chrono::steady_clock::time_point> stage_start_;
};

}  // namespace psums

#include "psums/report_io.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace psums {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || t.empty()) throw ConfigError("cannot parse " + what + " '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("cannot parse integer '" + text + "'");
  return v;
}

std::string format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat format_from_name(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw ConfigError("format must be csv or json, got '" + s + "'");
}

Complex complex_from_json(const json& j, const std::string& key) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(key + ": expected [re, im], a number or a complex literal");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    if (item.empty()) throw ConfigError("empty entry in integer list '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    std::string rest = item.substr(dots + 2);
    int step = 1;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
      step = parse_int(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const int lo = parse_int(item.substr(0, dots)), hi = parse_int(rest);
    if (step <= 0 || hi < lo) throw ConfigError("bad range '" + item + "'");
    for (int k = lo; k <= hi; k += step) out.push_back(k);
  }
  return out;
}

Complex parse_complex(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty complex literal");
  if (t.back() != 'i' && t.back() != 'j') return {parse_real(t, "complex literal"), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, "imaginary part of '" + text + "'");
  };
  if (cut == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, cut), "real part of '" + text + "'"), imag_part(body.substr(cut))};
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_complex(item));
  return out;
}

WRect parse_w_rect(const std::string& text, int resolution) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw ConfigError("w-rect must be re_min:re_max:im_min:im_max, got '" + text + "'");
  WRect r;
  r.re_min = parse_real(parts[0], "w-rect");
  r.re_max = parse_real(parts[1], "w-rect");
  r.im_min = parse_real(parts[2], "w-rect");
  r.im_max = parse_real(parts[3], "w-rect");
  r.resolution = resolution;
  return r;
}

void validate(const ExperimentConfig& c, bool needs_w_grid) {
  if (c.n_grid.empty()) throw ConfigError("n grid is empty");
  for (int n : c.n_grid)
    if (n < 1) throw ConfigError("n values must be positive");
  if (needs_w_grid && c.w_points.empty() && !c.w_rect) throw ConfigError("w grid is empty");
  if (c.w_rect) {
    const WRect& r = *c.w_rect;
    if (r.resolution < 1) throw ConfigError("w-rect resolution must be positive");
    if (!(r.re_min <= r.re_max) || !(r.im_min <= r.im_max)) throw ConfigError("w-rect bounds out of order");
  }
  if (!(c.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (!(c.epsilon > 0.0 && c.epsilon < 0.5)) throw ConfigError("epsilon must lie in (0, 1/2)");
  if (c.precision_bits != 53 && c.precision_bits != 106 && c.precision_bits != 256 && c.precision_bits != 512)
    throw ConfigError("precision ceiling must be one of 53, 106, 256, 512");
  if (c.lambda && !(*c.lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (c.theorem != "main" && c.theorem != "newman-rivlin" && c.theorem != "esv")
    throw ConfigError("theorem must be main, newman-rivlin or esv");
  if (c.scaling != "none" && c.scaling != "by_n" && c.scaling != "by_r_n")
    throw ConfigError("scaling must be none, by_n or by_r_n");
  if (!c.overlay.empty() && c.overlay != "parabola" && c.overlay != "szego" && c.overlay != "both")
    throw ConfigError("overlay must be parabola, szego or both");
  if (c.window < 0.0) throw ConfigError("window must be non-negative");
  if (c.output_dir.empty()) throw ConfigError("output directory is empty");
  try {
    (void)make_model(c);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["model"] = c.model;
  j["lambda"] = c.lambda ? json(*c.lambda) : json(nullptr);
  j["n_grid"] = c.n_grid;
  json w = json::array();
  for (Complex z : c.w_points) w.push_back(complex_json(z));
  j["w_points"] = w;
  if (c.w_rect) {
    j["w_rect"] = {{"re_min", c.w_rect->re_min},
                   {"re_max", c.w_rect->re_max},
                   {"im_min", c.w_rect->im_min},
                   {"im_max", c.w_rect->im_max},
                   {"resolution", c.w_rect->resolution}};
  } else {
    j["w_rect"] = nullptr;
  }
  j["epsilon"] = c.epsilon;
  j["tolerance"] = c.tolerance;
  j["precision_bits"] = c.precision_bits;
  j["output_dir"] = c.output_dir;
  j["format"] = format_name(c.format);
  j["theorem"] = c.theorem;
  j["scaling"] = c.scaling;
  j["overlay"] = c.overlay;
  j["window"] = c.window;
  j["lemmas"] = c.lemmas;
  j["check"] = c.check;
  j["z_probe"] = complex_json(c.z_probe);
  return j;
}

ExperimentConfig config_from_json(const json& j, ExperimentConfig c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {"schema_version", "model",    "lambda",    "n_grid",  "w_points",
                                              "w_rect",         "epsilon",  "tolerance", "precision_bits",
                                              "output_dir",     "format",   "theorem",   "scaling", "overlay",
                                              "window",         "lemmas",   "check",     "z_probe"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
  try {
    if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion)
      throw ConfigError("unsupported schema_version");
    if (j.contains("model")) c.model = j["model"].get<std::string>();
    if (j.contains("lambda")) {
      if (j["lambda"].is_null()) c.lambda.reset();
      else c.lambda = j["lambda"].get<double>();
    }
    if (j.contains("n_grid")) {
      if (j["n_grid"].is_string()) c.n_grid = parse_int_list(j["n_grid"].get<std::string>());
      else c.n_grid = j["n_grid"].get<std::vector<int>>();
    }
    if (j.contains("w_points")) {
      c.w_points.clear();
      for (const json& w : j["w_points"]) c.w_points.push_back(complex_from_json(w, "w_points"));
    }
    if (j.contains("w_rect")) {
      if (j["w_rect"].is_null()) {
        c.w_rect.reset();
      } else {
        const json& r = j["w_rect"];
        WRect rect;
        rect.re_min = r.at("re_min").get<double>();
        rect.re_max = r.at("re_max").get<double>();
        rect.im_min = r.at("im_min").get<double>();
        rect.im_max = r.at("im_max").get<double>();
        rect.resolution = r.value("resolution", 21);
        c.w_rect = rect;
      }
    }
    if (j.contains("epsilon")) c.epsilon = j["epsilon"].get<double>();
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
    if (j.contains("precision_bits")) c.precision_bits = j["precision_bits"].get<int>();
    if (j.contains("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("format")) c.format = format_from_name(j["format"].get<std::string>());
    if (j.contains("theorem")) c.theorem = j["theorem"].get<std::string>();
    if (j.contains("scaling")) c.scaling = j["scaling"].get<std::string>();
    if (j.contains("overlay")) c.overlay = j["overlay"].get<std::string>();
    if (j.contains("window")) c.window = j["window"].get<double>();
    if (j.contains("lemmas")) c.lemmas = j["lemmas"].get<std::string>();
    if (j.contains("check")) c.check = j["check"].get<std::string>();
    if (j.contains("z_probe")) c.z_probe = complex_from_json(j["z_probe"], "z_probe");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

EntireFunctionModel make_model(const ExperimentConfig& c) {
  if (c.model == "mittag_leffler" || c.model == "ml") {
    if (!c.lambda) throw DomainError("Mittag-Leffler model needs lambda");
    return EntireFunctionModel::mittag_leffler(*c.lambda);
  }
  return builtin_model(c.model);
}

Precision precision_ceiling(const ExperimentConfig& c) { return precision_from_bits(c.precision_bits); }

std::vector<Complex> expand_w_grid(const ExperimentConfig& c) {
  if (!c.w_points.empty() || !c.w_rect) return c.w_points;
  const WRect& r = *c.w_rect;
  std::vector<Complex> out;
  const int m = r.resolution;
  auto at = [m](double lo, double hi, int k) { return m == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (m - 1); };
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) out.emplace_back(at(r.re_min, r.re_max, k), at(r.im_min, r.im_max, i));
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip form
  (void)ec;
  return std::string(buf, ptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

CsvTable& CsvTable::row() {
  if (!rows_.empty() && rows_.back().size() != columns_.size())
    throw std::logic_error("csv: previous row has " + std::to_string(rows_.back().size()) + " fields, expected " +
                           std::to_string(columns_.size()));
  rows_.emplace_back();
  return *this;
}

CsvTable& CsvTable::add(const std::string& s) {
  if (rows_.empty()) throw std::logic_error("csv: add() before row()");
  rows_.back().push_back(s);
  return *this;
}

CsvTable& CsvTable::add(double x) { return add(format_double(x)); }
CsvTable& CsvTable::add(long x) { return add(std::to_string(x)); }
CsvTable& CsvTable::add(Complex z) { return add(z.real()).add(z.imag()); }

std::string CsvTable::str() const {
  std::ostringstream out;
  out << "schema_version";
  for (const auto& c : columns_) out << ',' << csv_escape(c);
  out << "\r\n";
  for (const auto& r : rows_) {
    if (r.size() != columns_.size()) throw std::logic_error("csv: ragged row");
    out << kSchemaVersion;
    for (const auto& f : r) out << ',' << csv_escape(f);
    out << "\r\n";
  }
  return out.str();
}

json CsvTable::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t k = 0; k < columns_.size() && k < r.size(); ++k) {
      const std::string& f = r[k];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f == "true" || f == "false") obj[columns_[k]] = (f == "true");
      else if (ec == std::errc() && ptr == f.data() + f.size() && std::isfinite(v)) obj[columns_[k]] = v;
      else obj[columns_[k]] = f;
    }
    arr.push_back(obj);
  }
  return {{"schema_version", kSchemaVersion}, {"rows", arr}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::uint32_t crc32_of(const std::string& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

RunWriter::RunWriter(const ExperimentConfig& config, std::string command)
    : config_(config), command_(std::move(command)), dir_(config.output_dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir_ + "': " + ec.message());
}

void RunWriter::write(const std::string& name, const std::string& contents) {
  const std::filesystem::path path = std::filesystem::path(dir_) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  out.close();
  auto it = std::find_if(files_.begin(), files_.end(), [&](const FileEntry& f) { return f.name == name; });
  FileEntry entry{name, contents.size(), crc32_of(contents)};
  if (it != files_.end()) *it = entry;
  else files_.push_back(entry);
}

void RunWriter::write_table(const std::string& stem, const CsvTable& table) {
  if (config_.format == OutputFormat::Csv) write(stem + ".csv", table.str());
  else write(stem + ".json", table.json().dump(2) + "\n");
}

void RunWriter::write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

void RunWriter::begin_stage(const std::string& name) {
  if (stage_start_) end_stage();
  stages_.push_back({name, 0.0});
  stage_start_ = std::chrono::steady_clock::now();
}

void RunWriter::end_stage() {
  if (!stage_start_) return;
  stages_.back().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - *stage_start_).count();
  stage_start_.reset();
}

std::string RunWriter::finish() {
  end_stage();
  json m;
  m["schema_version"] = kSchemaVersion;
  m["artifact_version"] = kArtifactVersion;
  m["command"] = command_;
  m["config"] = to_json(config_);
  json files = json::array();
  for (const FileEntry& f : files_) {
    char hex[9];
    std::snprintf(hex, sizeof hex, "%08x", f.crc);
    files.push_back({{"name", f.name}, {"bytes", f.bytes}, {"crc32", hex}});
  }
  m["files"] = files;
  json stages = json::array();
  for (const Stage& s : stages_) stages.push_back({{"name", s.name}, {"seconds", s.seconds}});
  m["stages"] = stages;
  m["created_unix"] = static_cast<long long>(std::time(nullptr));
  const std::filesystem::path path = std::filesystem::path(dir_) / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << m.dump(2) << "\n";
  return path.string();
}

}  // namespace psums

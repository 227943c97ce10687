// psums: desk-scale experiments on sections of entire functions.
//
//   psums ratio   --model exp --theorem main --n 64,256,1024 --w-rect -2:-0.1:-1:1 --res 21
//   psums zeros   --model exp --n 1..50 --scaling none --overlay parabola
//   psums disks   --model exp --n 50,100,200,400 --eps 0.1
//   psums rh      --model exp --lemmas all --n 16,32,64,128,256
//   psums selftest
//
// Exit codes: 0 success, 1 numeric failure, 2 configuration error.

#include "psums/partial_sums.hpp"
#include "psums/report_io.hpp"
#include "psums/rh_verifier.hpp"
#include "psums/saddle_geometry.hpp"
#include "psums/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

using namespace psums;
using nlohmann::json;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

// Raw flag values; only the ones given on the command line override the config file.
struct Flags {
  std::string config_path;
  std::string model, n, w, w_rect, out, format, theorem, scaling, overlay, lemmas, check, z_probe;
  double lambda = 0.0, eps = 0.0, tol = 0.0, window = 0.0;
  int res = 21, precision = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
  cmd->add_option("--model", f.model, "exp | ml | mittag_leffler | section5");
  cmd->add_option("--lambda", f.lambda, "order for the Mittag-Leffler model");
  cmd->add_option("--n", f.n, "n values: 64,256 or 1..50 or 4..40:2");
  cmd->add_option("--tol", f.tol, "quadrature tolerance");
  cmd->add_option("--precision", f.precision, "precision ceiling in bits: 53, 106, 256, 512");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--format", f.format, "csv | json");
}

ExperimentConfig build_config(CLI::App* cmd, const Flags& f) {
  ExperimentConfig c;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw ConfigError("cannot open config file '" + f.config_path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config file: ") + e.what());
    }
    c = config_from_json(j);
  }
  auto given = [&](const char* name) {
    try {
      return cmd->count(name) > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  if (given("--model")) c.model = f.model;
  if (given("--lambda")) c.lambda = f.lambda;
  if (given("--n")) c.n_grid = parse_int_list(f.n);
  if (given("--w")) {
    c.w_points = parse_complex_list(f.w);
    c.w_rect.reset();
  }
  if (given("--w-rect")) {
    c.w_rect = parse_w_rect(f.w_rect, f.res);
    c.w_points.clear();
  } else if (given("--res") && c.w_rect) {
    c.w_rect->resolution = f.res;
  }
  if (given("--eps")) c.epsilon = f.eps;
  if (given("--tol")) c.tolerance = f.tol;
  if (given("--precision")) c.precision_bits = f.precision;
  if (given("--out")) c.output_dir = f.out;
  if (given("--format")) {
    if (f.format == "csv") c.format = OutputFormat::Csv;
    else if (f.format == "json") c.format = OutputFormat::Json;
    else throw ConfigError("format must be csv or json");
  }
  if (given("--theorem")) c.theorem = f.theorem;
  if (given("--scaling")) c.scaling = f.scaling;
  if (given("--overlay")) c.overlay = f.overlay;
  if (given("--window")) c.window = f.window;
  if (given("--lemmas")) c.lemmas = f.lemmas;
  if (given("--check")) c.check = f.check;
  if (given("--z-probe")) c.z_probe = parse_complex(f.z_probe);
  // the ml shorthand implies the model when only --lambda is given
  if (c.lambda && c.model == "exp" && !given("--model") && f.config_path.empty()) c.model = "ml";
  return c;
}

std::string n_stem(const std::string& prefix, int n) { return prefix + "_n" + std::to_string(n); }

// ---------------------------------------------------------------- ratio

int cmd_ratio(const ExperimentConfig& cfg) {
  const EntireFunctionModel model = make_model(cfg);
  const Precision ceiling = precision_ceiling(cfg);
  if (cfg.theorem == "newman-rivlin" && model.kind() != ModelKind::Exp)
    throw ConfigError("the newman-rivlin scaling is defined for the exp model only");
  if (cfg.theorem == "esv" && model.kind() != ModelKind::Exp && model.kind() != ModelKind::MittagLeffler)
    throw ConfigError("the esv scaling needs the exp or Mittag-Leffler model");

  std::vector<Complex> ws = expand_w_grid(cfg);
  if (cfg.theorem == "main") {
    const auto before = ws.size();
    ws.erase(std::remove_if(ws.begin(), ws.end(), [](Complex w) { return w.real() >= 0.0; }), ws.end());
    if (ws.size() != before)
      std::cerr << "note: dropped " << before - ws.size() << " w points with Re w >= 0 (outside the theorem)\n";
    if (ws.empty()) throw ConfigError("no w points with Re w < 0 remain");
  }

  RunWriter out(cfg, "ratio");
  CsvTable summary({"n", "points", "sup_error", "ratio_to_previous"});
  double prev = 0.0;
  for (int n : cfg.n_grid) {
    out.begin_stage(n_stem("ratio", n));
    std::vector<RatioSample> rows;
    if (cfg.theorem == "main") {
      rows = ratio_on_window(model, make_window(model, n, ws), ceiling);
    } else {
      for (Complex w : ws)
        rows.push_back(cfg.theorem == "newman-rivlin" ? newman_rivlin_ratio(n, w, ceiling)
                                                      : esv_ratio(model.lambda(), n, w, ceiling));
    }
    CsvTable t({"n", "w_re", "w_im", "ratio_re", "ratio_im", "target_re", "target_im", "abs_error"});
    double sup = 0.0;
    for (const RatioSample& s : rows) {
      t.row().add(s.n).add(s.w).add(s.ratio).add(s.target).add(s.abs_error);
      sup = std::max(sup, s.abs_error);
    }
    out.write_table(n_stem("ratio", n), t);
    summary.row().add(n).add(long(rows.size())).add(sup).add(prev > 0.0 ? sup / prev : std::nan(""));
    prev = sup;
  }
  out.end_stage();
  out.write_table("ratio_summary", summary);
  out.finish();
  std::cout << summary.str();
  return 0;
}

// ---------------------------------------------------------------- zeros

int cmd_zeros(const ExperimentConfig& cfg) {
  const EntireFunctionModel model = make_model(cfg);
  const ZeroScaling scaling = zero_scaling_from_string(cfg.scaling);
  RunWriter out(cfg, "zeros");
  CsvTable zeros({"n", "index", "re", "im", "backward_residual", "inclusion_radius"});
  CsvTable clouds({"n", "zeros", "precision_bits", "sweeps", "vieta", "conjugate_error", "min_parabola_slack"});
  json window = json::array();
  int violations = 0, checked = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  out.begin_stage("zero clouds");
  for (int n : cfg.n_grid) {
    const ZeroCloud c = zero_cloud(model, n, scaling, precision_ceiling(cfg));
    double slack = std::numeric_limits<double>::infinity();
    std::vector<double> args;
    for (std::size_t k = 0; k < c.zeros.size(); ++k) {
      const Complex z = c.zeros[k];
      zeros.row().add(n).add(long(k)).add(z).add(c.residuals[k]).add(c.inclusion_radii[k]);
      // -1 sits on the boundary of the parabola region and does not count against it
      if (std::abs(z + 1.0) > 1e-12) slack = std::min(slack, parabola_slack(z));
      if (inside_parabola(z)) ++violations;
      if (cfg.window > 0.0 && std::abs(z - 1.0) <= cfg.window) args.push_back(std::abs(std::arg(z - 1.0)));
    }
    checked += int(c.zeros.size());
    min_slack = std::min(min_slack, slack);
    clouds.row()
        .add(n)
        .add(long(c.zeros.size()))
        .add(c.precision_bits)
        .add(c.sweeps)
        .add(vieta_discrepancy(model, c))
        .add(conjugate_symmetry_error(c))
        .add(slack);
    if (cfg.window > 0.0) {
      std::sort(args.begin(), args.end());
      json row = {{"n", n}, {"zeros_in_window", args.size()}};
      if (!args.empty()) {
        const std::size_t m = args.size();
        row["median_abs_arg"] = m % 2 ? args[m / 2] : 0.5 * (args[m / 2 - 1] + args[m / 2]);
        row["min_abs_arg"] = args.front();
      }
      window.push_back(row);
    }
  }
  out.end_stage();
  out.write_table("zeros", zeros);
  out.write_table("clouds", clouds);
  if (cfg.window > 0.0) out.write_json("window.json", {{"window", cfg.window}, {"rows", window}});
  if (scaling == ZeroScaling::None) {
    out.write_json("parabola.json", {{"schema_version", kSchemaVersion},
                                     {"zeros_checked", checked},
                                     {"violations", violations},
                                     {"min_slack", min_slack}});
  }
  if (!cfg.overlay.empty()) {
    CsvTable overlay({"curve", "x", "y"});
    if (cfg.overlay == "parabola" || cfg.overlay == "both")
      for (int k = -200; k <= 200; ++k) {
        const double y = 0.06 * k;
        overlay.row().add(std::string("parabola")).add(y * y / 4.0 - 1.0).add(y);
      }
    if (cfg.overlay == "szego" || cfg.overlay == "both")
      for (Complex z : limit_curve(model.lambda(), 400).points) overlay.row().add(std::string("szego")).add(z);
    out.write_table("overlay", overlay);
  }
  out.finish();
  std::cout << clouds.str();
  if (scaling == ZeroScaling::None)
    std::cout << "parabola: " << violations << " violations among " << checked << " zeros, min slack "
              << format_double(min_slack) << "\n";
  return 0;
}

// ---------------------------------------------------------------- disks

int cmd_disks(const ExperimentConfig& cfg) {
  const EntireFunctionModel model = make_model(cfg);
  RunWriter out(cfg, "disks");
  out.begin_stage("disk counts");
  const auto rows = disk_count(model, cfg.n_grid, cfg.epsilon, precision_ceiling(cfg));
  out.end_stage();
  CsvTable t({"n", "epsilon", "radius", "count"});
  bool nondecreasing = true;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    t.row().add(rows[k].n).add(rows[k].epsilon).add(rows[k].radius).add(rows[k].count);
    if (k > 0 && rows[k].count < rows[k - 1].count) nondecreasing = false;
  }
  out.write_table("disks", t);
  out.write_json("disks_summary.json", {{"schema_version", kSchemaVersion},
                                        {"epsilon", cfg.epsilon},
                                        {"nondecreasing", nondecreasing},
                                        {"first_count", rows.front().count},
                                        {"last_count", rows.back().count}});
  out.finish();
  std::cout << t.str();
  return 0;
}

// ---------------------------------------------------------------- rh

json fit_json(const DecayFit& f) {
  json j = {{"label", f.label},
            {"n_values", f.n_values},
            {"magnitudes", f.magnitudes},
            {"fitted_slope", f.fitted_slope},
            {"intercept", f.intercept},
            {"fit_residual", f.fit_residual},
            {"fit", f.log_linear ? "log_linear" : "power_law"},
            {"quadrature_errors", f.errors}};
  if (!f.sup_norms.empty()) {
    j["sup_norms"] = f.sup_norms;
    j["sup_norm_slope"] = f.sup_norm_slope;
  }
  return j;
}

std::set<std::string> parse_names(const std::string& text, const std::set<std::string>& all) {
  if (text == "all") return all;
  std::set<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!all.count(item)) throw ConfigError("unknown entry '" + item + "'");
    out.insert(item);
  }
  return out;
}

int cmd_rh(const ExperimentConfig& cfg) {
  const EntireFunctionModel model = make_model(cfg);
  const Contour contour = model_contour(model);
  std::string lemmas = cfg.lemmas, checks = cfg.check;
  if (lemmas.empty() && checks.empty()) lemmas = "all";
  const auto lemma_set = lemmas.empty() ? std::set<std::string>{} : parse_names(lemmas, {"2", "3", "4", "5"});
  const auto check_set =
      checks.empty() ? std::set<std::string>{} : parse_names(checks, {"jumps", "fnexplicit", "m", "fg", "pipeline"});
  std::vector<Complex> ws = expand_w_grid(cfg);
  if (ws.empty()) ws = {Complex(-1.0, 0.0)};

  RunWriter out(cfg, "rh");
  SuiteSettings settings;
  settings.inner_tol = cfg.tolerance;
  settings.outer_tol = std::max(cfg.tolerance, 1e-9);
  bool all_ok = true;

  if (!lemma_set.empty()) {
    json fits = json::array();
    const std::map<std::string, LemmaSuite> suites = {{"2", LemmaSuite::GOnGamma1},
                                                      {"3", LemmaSuite::Gamma2Tail},
                                                      {"4", LemmaSuite::FOnGamma1},
                                                      {"5", LemmaSuite::POnGamma1}};
    for (const auto& [key, suite] : suites) {
      if (!lemma_set.count(key)) continue;
      out.begin_stage("lemma " + key);
      const DecayFit f = lemma_decay_suite(suite, model, contour, cfg.n_grid, cfg.z_probe, settings);
      json j = fit_json(f);
      j["lemma"] = std::stoi(key);
      fits.push_back(j);
      std::cout << "lemma " << key << " (" << f.label << "): slope " << format_double(f.fitted_slope)
                << ", residual " << format_double(f.fit_residual) << "\n";
    }
    out.end_stage();
    out.write_json("lemma_fits.json", {{"schema_version", kSchemaVersion},
                                       {"z_probe", complex_json(cfg.z_probe)},
                                       {"fits", fits}});
  }
  if (check_set.count("jumps")) {
    out.begin_stage("jumps");
    CsvTable t({"object", "n", "z0_re", "z0_im", "residual", "quadrature_error", "extrapolation_error", "tolerance",
                "pass"});
    for (int n : cfg.n_grid) {
      std::vector<JumpCheck> all = jump_checks_F(model, contour, n, cfg.tolerance);
      for (const auto& j : jump_checks_G(contour, n, cfg.tolerance)) all.push_back(j);
      for (const auto& j : jump_checks_P(contour, n)) all.push_back(j);
      for (const JumpCheck& j : all) {
        t.row().add(j.object).add(n).add(j.z0).add(j.residual).add(j.quadrature_error).add(j.extrapolation_error)
            .add(j.tolerance).add(j.pass);
        all_ok = all_ok && j.pass;
      }
    }
    out.write_table("jumps", t);
    std::cout << "jumps: " << (all_ok ? "all within tolerance" : "FAILURES, see jumps table") << "\n";
  }
  if (check_set.count("fnexplicit")) {
    out.begin_stage("fnexplicit");
    CsvTable t({"n", "z_re", "z_im", "inside", "quadrature_re", "quadrature_im", "closed_re", "closed_im",
                "relative_error"});
    double worst = 0.0;
    for (const ClosedFormRow& r :
         fn_explicit_check(model, contour, cfg.n_grid, interior_probes(contour), cfg.tolerance)) {
      t.row().add(r.n).add(r.z).add(r.inside).add(r.quadrature).add(r.closed_form).add(r.relative_error);
      worst = std::max(worst, r.relative_error);
    }
    out.write_table("fnexplicit", t);
    std::cout << "fnexplicit: max relative error " << format_double(worst) << "\n";
    all_ok = all_ok && worst <= 1e-6;
  }
  if (check_set.count("m")) {
    out.begin_stage("m decomposition");
    json rows = json::array();
    for (int n : cfg.n_grid) {
      const MDecomposition d = m_decomposition(model, contour, n, cfg.z_probe, settings);
      rows.push_back({{"n", n},
                      {"z", complex_json(d.z)},
                      {"p_term", complex_json(d.p_term)},
                      {"g_term", complex_json(d.g_term)},
                      {"f_term", complex_json(d.f_term)},
                      {"tail_term", complex_json(d.tail_term)},
                      {"m", complex_json(d.m)},
                      {"abs_m", std::abs(d.m)},
                      {"g_minus_p", complex_json(d.g_minus_p)},
                      {"discrepancy", d.discrepancy},
                      {"error_estimate", d.error_estimate},
                      {"consistent", d.consistent}});
      all_ok = all_ok && d.consistent;
    }
    out.write_json("m_decomposition.json", {{"schema_version", kSchemaVersion}, {"rows", rows}});
    std::cout << "m decomposition: " << rows.size() << " rows\n";
  }
  if (check_set.count("fg")) {
    out.begin_stage("F - G");
    json fits = json::array();
    for (Complex w : ws) {
      json j = fit_json(fn_gn_agreement(model, contour, cfg.n_grid, w, cfg.tolerance));
      j["w"] = complex_json(w);
      fits.push_back(j);
    }
    out.write_json("fn_gn.json", {{"schema_version", kSchemaVersion}, {"fits", fits}});
  }
  if (check_set.count("pipeline")) {
    out.begin_stage("pipeline");
    CsvTable t({"n", "w_re", "w_im", "F_re", "F_im", "composite_re", "composite_im", "f_discrepancy", "ratio_re",
                "ratio_im", "target_re", "target_im", "ratio_error", "window_abs_error", "path_agreement"});
    for (int n : cfg.n_grid)
      for (const PipelineRow& r : theorem1_pipeline(model, contour, n, ws, cfg.tolerance))
        t.row().add(r.n).add(r.w).add(r.F).add(r.composite).add(r.f_discrepancy).add(r.ratio_from_F).add(r.target)
            .add(r.ratio_error).add(r.window_abs_error).add(r.path_agreement);
    out.write_table("pipeline", t);
  }
  out.end_stage();
  out.finish();
  return all_ok ? 0 : kExitNumeric;
}

int cmd_selftest() {
  const SelfTestReport r = run_selftest();
  std::cout << r.text();
  return r.all_pass() ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sections of entire functions near the scaling radius"};
  app.require_subcommand(1);
  Flags f;

  auto* ratio = app.add_subcommand("ratio", "section-to-function ratio on the critical window");
  add_common(ratio, f);
  ratio->add_option("--theorem", f.theorem, "main | newman-rivlin | esv");
  ratio->add_option("--w", f.w, "w points, e.g. -1,i,1+i");
  ratio->add_option("--w-rect", f.w_rect, "re_min:re_max:im_min:im_max");
  ratio->add_option("--res", f.res, "points per side of the w rectangle");

  auto* zeros = app.add_subcommand("zeros", "zero clouds of scaled sections");
  add_common(zeros, f);
  zeros->add_option("--scaling", f.scaling, "none | by_n | by_r_n");
  zeros->add_option("--overlay", f.overlay, "parabola | szego | both");
  zeros->add_option("--window", f.window, "summarize zeros with |z - 1| <= window");

  auto* disks = app.add_subcommand("disks", "zero counts in shrinking disks about the scaling radius");
  add_common(disks, f);
  disks->add_option("--eps", f.eps, "exponent offset in (0, 1/2)");

  auto* rh = app.add_subcommand("rh", "Cauchy-integral objects, jump checks and decay suites");
  add_common(rh, f);
  rh->add_option("--lemmas", f.lemmas, "all or a list of 2,3,4,5");
  rh->add_option("--check", f.check, "jumps,fnexplicit,m,fg,pipeline or all");
  rh->add_option("--w", f.w, "w points for the fg and pipeline checks");
  rh->add_option("--z-probe", f.z_probe, "probe point in the ball about 1");

  auto* selftest = app.add_subcommand("selftest", "fast invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (selftest->parsed()) return cmd_selftest();
    CLI::App* cmd = ratio->parsed() ? ratio : zeros->parsed() ? zeros : disks->parsed() ? disks : rh;
    ExperimentConfig cfg = build_config(cmd, f);
    if (cmd == rh && cfg.n_grid.empty()) cfg.n_grid = {16, 32, 64, 128, 256};
    validate(cfg, cmd == ratio);
    if (cmd == ratio) return cmd_ratio(cfg);
    if (cmd == zeros) return cmd_zeros(cfg);
    if (cmd == disks) return cmd_disks(cfg);
    return cmd_rh(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}

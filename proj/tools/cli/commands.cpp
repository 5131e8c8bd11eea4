// Copyright 2026 The thermolength Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "emit.hpp"
#include "validate.hpp"

namespace tlcli {

namespace {

constexpr double kDefaultScanTol = 1e-10;

// --- argument helpers -------------------------------------------------------

double parse_double(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || !std::isfinite(x)) {
    throw CliError(kExitUsage, what + ": \"" + text + "\" is not a finite number");
  }
  return x;
}

int parse_count(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long n = std::strtol(begin, &end, 10);
  if (text.empty() || end != begin + text.size() || n < 0 || n > 1000000) {
    throw CliError(kExitUsage, what + ": \"" + text + "\" is not a count in [0, 1000000]");
  }
  return static_cast<int>(n);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// "s=0,v=1", "u=3,v=1" or "T=2,v=1".
tl_state parse_state(const tl_model* model, const std::string& text,
                     const std::optional<std::string>& rep_flag, const std::string& flag) {
  if (text.empty()) throw CliError(kExitUsage, flag + " is required");
  std::map<std::string, double> kv;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw CliError(kExitUsage, flag + ": expected key=value, got \"" + item + "\"");
    }
    const std::string key = item.substr(0, eq);
    if (key != "s" && key != "u" && key != "v" && key != "T") {
      throw CliError(kExitUsage, flag + ": unknown coordinate \"" + key + "\" (use s, u, v or T)");
    }
    if (!kv.emplace(key, parse_double(item.substr(eq + 1), flag + " " + key)).second) {
      throw CliError(kExitUsage, flag + ": coordinate \"" + key + "\" given twice");
    }
  }
  const auto has = [&](const char* k) { return kv.count(k) != 0; };
  if (!has("v") || kv.size() != 2) {
    throw CliError(kExitUsage, flag + ": give v and exactly one of s, u, T");
  }
  tl_state st{};
  if (has("T")) {
    const tl_rep rep = rep_flag ? parse_rep(*rep_flag) : TL_REP_ENERGY;
    check(tl_state_from_tv(model, kv["T"], kv["v"], rep, &st), flag);
    return st;
  }
  st = has("s") ? tl_state{TL_REP_ENERGY, kv["s"], kv["v"]}
                : tl_state{TL_REP_ENTROPY, kv["u"], kv["v"]};
  if (rep_flag) {
    const tl_rep rep = parse_rep(*rep_flag);
    if (rep != st.rep) {
      tl_state converted{};
      check(tl_convert_state(model, st, rep, &converted), flag);
      return converted;
    }
  }
  return st;
}

tl_state convert(const tl_model* model, const tl_state& st, tl_rep rep) {
  if (st.rep == rep) return st;
  tl_state out{};
  check(tl_convert_state(model, st, rep, &out), "state conversion");
  return out;
}

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;

  double at(int i) const {
    if (n == 1) return lo;
    return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
};

// "Tmin:Tmax:nT,vmin:vmax:nv"
std::pair<GridAxis, GridAxis> parse_grid(const std::string& text) {
  if (text.empty()) throw CliError(kExitUsage, "--grid is required");
  const auto axes = split(text, ',');
  if (axes.size() != 2) throw CliError(kExitUsage, "--grid: expected Tmin:Tmax:nT,vmin:vmax:nv");
  auto axis = [](const std::string& s, const char* name) {
    const auto f = split(s, ':');
    if (f.size() != 3) {
      throw CliError(kExitUsage, std::string("--grid: ") + name + " axis must be min:max:n");
    }
    GridAxis a{parse_double(f[0], std::string("--grid ") + name + "min"),
               parse_double(f[1], std::string("--grid ") + name + "max"),
               parse_count(f[2], std::string("--grid n") + name)};
    if (a.hi < a.lo) throw CliError(kExitUsage, std::string("--grid: ") + name + "max < " + name + "min");
    return a;
  };
  return {axis(axes[0], "T"), axis(axes[1], "v")};
}

Format format_or(const Options& o, Format fallback) {
  return o.format ? parse_format(*o.format) : fallback;
}

void emit(const Options& o, Format format, const Json& doc, const Table& table) {
  std::ostringstream os;
  if (format == Format::Json) {
    write_json(os, doc);
  } else {
    write_csv(os, table);
  }
  emit_text(o.out, os.str());
}

tl_quad_options quad_options(const Options& o) {
  tl_quad_options q = tl_quad_options_default();
  if (o.tol) {
    if (!(*o.tol > 0.0)) throw CliError(kExitUsage, "--tol must be > 0");
    q.abs_tol = *o.tol;
    q.rel_tol = *o.tol;
  }
  return q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Metric in the given rep, falling back to the limit form on the spinodal.
std::pair<tl_metric, bool> metric_or_limit(const tl_model* model, const tl_state& st) {
  tl_metric g{};
  const tl_status status = st.rep == TL_REP_ENERGY ? tl_energy_metric(model, st, &g)
                                                   : tl_entropy_metric(model, st, &g);
  if (status == TL_ERR_DEGENERATE_STATE) {
    check(tl_metric_at(model, st, &g), "metric");
    return {g, true};
  }
  check(status, "metric");
  return {g, false};
}

Json metric_json(const tl_metric& g) {
  Json j;
  j["g11"] = g.g11;
  j["g12"] = g.g12;
  j["g22"] = g.g22;
  j["det"] = g.g11 * g.g22 - g.g12 * g.g12;
  return j;
}

}  // namespace

// --- metric -----------------------------------------------------------------

int run_metric(const Options& o) {
  const Format format = format_or(o, Format::Json);
  const auto model = load_model(o.config);
  const tl_state st = parse_state(model.get(), o.state, o.rep, "--state");
  const tl_state es = convert(model.get(), st, TL_REP_ENERGY);
  const tl_state ss = convert(model.get(), st, TL_REP_ENTROPY);

  double T = 0.0, det_u = 0.0, det_s = 0.0, t4 = 0.0;
  check(tl_temperature(model.get(), es, &T), "temperature");
  check(tl_det_energy(model.get(), es, &det_u), "det_u");
  check(tl_det_entropy(model.get(), ss, &det_s), "det_s");
  check(tl_t4_residual(model.get(), es, &t4), "t4 residual");
  tl_material mat{};
  const tl_status mst = tl_material_at(model.get(), es, &mat);
  if (mst != TL_ERR_DEGENERATE_STATE) check(mst, "material");
  const auto [gu, deg_u] = metric_or_limit(model.get(), es);
  const auto [gs, deg_s] = metric_or_limit(model.get(), ss);
  const tl_metric& g = st.rep == TL_REP_ENERGY ? gu : gs;

  Json doc;
  doc["command"] = "metric";
  doc["family"] = family_name(tl_model_family(model.get()));
  doc["rep"] = rep_name(st.rep);
  Json state;
  state["s"] = es.x1;
  state["u"] = ss.x1;
  state["v"] = es.x2;
  state["T"] = T;
  if (mst == TL_OK) state["p"] = mat.p;
  doc["state"] = std::move(state);
  doc["g11"] = g.g11;
  doc["g12"] = g.g12;
  doc["g22"] = g.g22;
  doc["det"] = g.g11 * g.g22 - g.g12 * g.g12;
  doc["energy_metric"] = metric_json(gu);
  doc["entropy_metric"] = metric_json(gs);
  doc["det_u"] = det_u;
  doc["det_s"] = det_s;
  doc["t4_residual"] = t4;
  doc["degenerate"] = deg_u || deg_s || det_u == 0.0;

  Table table;
  table.header = {"rep", "g11", "g12", "g22", "det"};
  for (const auto* m : {&gu, &gs}) {
    table.rows.push_back({rep_name(m->rep), format_number(m->g11), format_number(m->g12),
                          format_number(m->g22), format_number(m->g11 * m->g22 - m->g12 * m->g12)});
  }
  emit(o, format, doc, table);
  return kExitOk;
}

// --- length -----------------------------------------------------------------

int run_length(const Options& o) {
  const Format format = format_or(o, Format::Json);
  const auto model = load_model(o.config);
  if (o.path.empty()) throw CliError(kExitUsage, "--path is required");
  const auto path = load_path(o.path);
  const tl_rep path_rep = tl_path_rep(path.get());
  const tl_rep metric = o.rep ? parse_rep(*o.rep) : path_rep;
  const tl_quad_options q = quad_options(o);
  tl_length_result r{};
  check(tl_length(model.get(), metric, path.get(), &q, &r), "length");

  Json doc;
  doc["command"] = "length";
  doc["family"] = family_name(tl_model_family(model.get()));
  doc["path_rep"] = rep_name(path_rep);
  doc["metric"] = rep_name(metric);
  doc["length"] = r.length;
  doc["error_estimate"] = r.error_estimate;
  doc["evaluations"] = r.evaluations;
  doc["touched_degeneracy"] = r.touched_degeneracy != 0;

  Table table;
  table.header = {"metric", "length", "error_estimate", "evaluations", "touched_degeneracy"};
  table.rows.push_back({rep_name(metric), format_number(r.length), format_number(r.error_estimate),
                        std::to_string(r.evaluations), r.touched_degeneracy ? "true" : "false"});

  // Isotherms on the gases also get the work-relation length, whose integrand
  // differs from the general one by the heat-capacity ratio.
  const auto spec = Json::parse(read_file(o.path), nullptr, false);
  const tl_family fam = tl_model_family(model.get());
  if (spec.is_object() && spec.value("variant", "") == "isotherm" &&
      (fam == TL_FAMILY_IDEAL || fam == TL_FAMILY_QUASI_IDEAL)) {
    const double T = spec.at("T").get<double>();
    const auto range = spec.at("v_range");
    const double v1 = range.at(0).get<double>();
    const double v2 = range.at(1).get<double>();
    tl_theorem_report tr{};
    check(metric == TL_REP_ENERGY ? tl_theorem1_check(model.get(), T, v1, v2, &tr)
                                  : tl_theorem2_check(model.get(), T, v1, v2, &tr),
          "work relation");
    doc["work"] = tr.work;
    doc["work_relation_length"] = tr.length;
    table.header.push_back("work");
    table.header.push_back("work_relation_length");
    table.rows.back().push_back(format_number(tr.work));
    table.rows.back().push_back(format_number(tr.length));
  }
  emit(o, format, doc, table);
  return kExitOk;
}

// --- sweep ------------------------------------------------------------------

namespace {

const std::vector<std::string> kSweepColumns = {
    "T",     "v",     "p",     "det_u", "det_s", "t4_residual", "nu_i",
    "nu_a",  "g11_u", "g12_u", "g22_u", "g11_s", "g12_s",       "g22_s"};

using Cell = std::variant<double, std::string>;

std::vector<Cell> sweep_cell(const tl_model* model, double T, double v) {
  std::vector<Cell> row(kSweepColumns.size(), std::string("nonphysical"));
  row[0] = T;
  row[1] = v;
  tl_state es{}, ss{};
  const tl_status st = tl_state_from_tv(model, T, v, TL_REP_ENERGY, &es);
  if (st != TL_OK) {
    if (is_state_error(st) || st == TL_ERR_INVALID_ARGUMENT) return row;
    check(st, "sweep state");
  }
  check(tl_state_from_tv(model, T, v, TL_REP_ENTROPY, &ss), "sweep state");
  double p = 0.0, det_u = 0.0, det_s = 0.0, t4 = 0.0;
  check(tl_pressure(model, T, v, &p), "pressure");
  check(tl_det_energy(model, es, &det_u), "det_u");
  check(tl_det_entropy(model, ss, &det_s), "det_s");
  check(tl_t4_residual(model, es, &t4), "t4 residual");
  row[2] = p;
  row[3] = det_u;
  row[4] = det_s;
  row[5] = t4;

  tl_sound_speeds nu{};
  const tl_status sst = tl_sound_speeds_at(model, es, &nu);
  if (sst == TL_OK) {
    row[6] = nu.nu_isothermal;
    row[7] = nu.nu_adiabatic;
  } else if (is_state_error(sst)) {
    row[6] = std::string("unstable");
    row[7] = std::string("unstable");
  } else {
    check(sst, "sound speeds");
  }

  const bool spinodal = det_u == 0.0;
  for (const auto& [st_rep, offset] : {std::pair{es, 8}, std::pair{ss, 11}}) {
    if (spinodal) {
      for (int k = 0; k < 3; ++k) row[offset + k] = std::string("degenerate");
      continue;
    }
    tl_metric g{};
    check(tl_metric_at(model, st_rep, &g), "metric");
    row[offset] = g.g11;
    row[offset + 1] = g.g12;
    row[offset + 2] = g.g22;
  }
  return row;
}

}  // namespace

int run_sweep(const Options& o) {
  const Format format = format_or(o, Format::Csv);
  const auto model = load_model(o.config);
  const auto [Ta, va] = parse_grid(o.grid);

  Table table;
  table.header = kSweepColumns;
  Json rows = Json::array();
  for (int i = 0; i < Ta.n; ++i) {
    for (int j = 0; j < va.n; ++j) {
      const auto cells = sweep_cell(model.get(), Ta.at(i), va.at(j));
      std::vector<std::string> text;
      Json obj;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (const auto* x = std::get_if<double>(&cells[k])) {
          text.push_back(format_number(*x));
          obj[kSweepColumns[k]] = *x;
        } else {
          text.push_back(std::get<std::string>(cells[k]));
          obj[kSweepColumns[k]] = std::get<std::string>(cells[k]);
        }
      }
      table.rows.push_back(std::move(text));
      rows.push_back(std::move(obj));
    }
  }
  Json doc;
  doc["command"] = "sweep";
  doc["family"] = family_name(tl_model_family(model.get()));
  doc["rows"] = std::move(rows);
  emit(o, format, doc, table);
  return kExitOk;
}

// --- degeneracy -------------------------------------------------------------

int run_degeneracy(const Options& o) {
  const Format format = format_or(o, Format::Json);
  const auto model = load_model(o.config);
  const auto [Ta, va] = parse_grid(o.grid);
  const double tol = o.tol.value_or(kDefaultScanTol);

  Table table;
  table.header = {"T", "index", "v", "residual", "bracket_lo", "bracket_hi"};
  Json isotherms = Json::array();
  for (int i = 0; i < Ta.n; ++i) {
    const double T = Ta.at(i);
    tl_degeneracy* raw = nullptr;
    check(tl_degeneracy_scan(model.get(), T, va.lo, va.hi, tol, va.n, &raw), "degeneracy scan");
    const DegeneracyPtr scan(raw);
    Json iso;
    iso["T"] = T;
    Json roots = Json::array();
    const std::size_t count = tl_degeneracy_root_count(scan.get());
    for (std::size_t k = 0; k < count; ++k) {
      double v = 0.0, res = 0.0, lo = 0.0, hi = 0.0;
      check(tl_degeneracy_root(scan.get(), k, &v, &res, &lo, &hi), "degeneracy root");
      Json r;
      r["v"] = v;
      r["residual"] = res;
      r["bracket"] = Json::array({lo, hi});
      roots.push_back(std::move(r));
      table.rows.push_back({format_number(T), std::to_string(k), format_number(v),
                            format_number(res), format_number(lo), format_number(hi)});
    }
    iso["roots"] = std::move(roots);
    isotherms.push_back(std::move(iso));
  }
  Json doc;
  doc["command"] = "degeneracy";
  doc["family"] = family_name(tl_model_family(model.get()));
  doc["v_range"] = Json::array({va.lo, va.hi});
  doc["cells"] = va.n > 0 ? va.n : 512;
  doc["tol"] = tol;
  doc["isotherms"] = std::move(isotherms);
  emit(o, format, doc, table);
  return kExitOk;
}

// --- geodesic ---------------------------------------------------------------

int run_geodesic(const Options& o) {
  const Format format = format_or(o, Format::Json);
  const auto model = load_model(o.config);
  tl_state a = parse_state(model.get(), o.from, o.rep, "--from");
  const tl_rep rep = o.rep ? parse_rep(*o.rep) : a.rep;
  a = convert(model.get(), a, rep);
  const tl_state b = convert(model.get(), parse_state(model.get(), o.to, o.rep, "--to"), rep);
  tl_geodesic_options go = tl_geodesic_options_default();
  go.quadrature = quad_options(o);
  tl_geodesic* raw = nullptr;
  check(tl_geodesic_solve(model.get(), rep, a, b, o.segments, &go, &raw), "geodesic");
  const GeodesicPtr geo(raw);
  const tl_length_result len = tl_geodesic_length(geo.get());

  Json doc;
  doc["command"] = "geodesic";
  doc["family"] = family_name(tl_model_family(model.get()));
  doc["rep"] = rep_name(rep);
  doc["segments"] = o.segments;
  doc["iterations"] = tl_geodesic_iterations(geo.get());
  doc["converged"] = tl_geodesic_converged(geo.get()) != 0;
  doc["initial_length"] = tl_geodesic_initial_length(geo.get());
  doc["length"] = len.length;
  doc["error_estimate"] = len.error_estimate;
  Json nodes = Json::array();
  Table table;
  table.header = {"index", "x1", "x2"};
  const std::size_t n = tl_geodesic_node_count(geo.get());
  for (std::size_t k = 0; k < n; ++k) {
    double x1 = 0.0, x2 = 0.0;
    check(tl_geodesic_node(geo.get(), k, &x1, &x2), "geodesic node");
    nodes.push_back(Json::array({x1, x2}));
    table.rows.push_back({std::to_string(k), format_number(x1), format_number(x2)});
  }
  doc["nodes"] = std::move(nodes);
  emit(o, format, doc, table);
  return kExitOk;
}

// --- validate ---------------------------------------------------------------

int run_validate(const Options& o) {
  const Format format = format_or(o, Format::Json);
  Thresholds th = Thresholds::defaults();
  std::string source = kThresholdTableVersion;
  if (!o.threshold_file.empty()) {
    th.override_from_file(o.threshold_file);
    source = std::string(kThresholdTableVersion) + "+" + o.threshold_file;
  }
  const auto model = load_model(o.config);
  const ValidationReport report = run_validation(model.get(), th);
  emit(o, format, to_json(report, source), to_table(report));
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Fail) {
      std::cerr << "validate: " << c.name << " failed: max residual "
                << format_number(c.max_residual) << " > " << format_number(c.threshold) << '\n';
    }
  }
  return report.passed() ? kExitOk : kExitValidationFailed;
}

// --- entry point ------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"thermolength: thermodynamic metrics, lengths and identity checks"};
  app.set_version_flag("--version", std::string(tl_version()));
  app.require_subcommand(1, 1);
  Options o;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Model config JSON")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--format", o.format, "json|csv");
  };
  auto add_rep = [&](CLI::App* sub) { sub->add_option("--rep", o.rep, "energy|entropy"); };

  auto* metric = app.add_subcommand("metric", "Both metric tensors and determinants at a state");
  add_config(metric);
  add_rep(metric);
  metric->add_option("--state", o.state, "Coordinates, e.g. s=0,v=1 or T=2,v=1")->required();
  add_output(metric);

  auto* length = app.add_subcommand("length", "Thermodynamic length of a path");
  add_config(length);
  add_rep(length);
  length->add_option("--path", o.path, "Path JSON")->required();
  length->add_option("--tol", o.tol, "Quadrature tolerance (abs and rel)");
  add_output(length);

  auto* sweep = app.add_subcommand("sweep", "Rasterize a (T, v) rectangle");
  add_config(sweep);
  sweep->add_option("--grid", o.grid, "Tmin:Tmax:nT,vmin:vmax:nv")->required();
  add_output(sweep);

  auto* degeneracy = app.add_subcommand("degeneracy", "Spinodal roots per isotherm");
  add_config(degeneracy);
  degeneracy->add_option("--grid", o.grid, "Tmin:Tmax:nT,vmin:vmax:cells")->required();
  degeneracy->add_option("--tol", o.tol, "Root tolerance in v");
  add_output(degeneracy);

  auto* geodesic = app.add_subcommand("geodesic", "Minimal-length polyline between two states");
  add_config(geodesic);
  add_rep(geodesic);
  geodesic->add_option("--from", o.from, "Start state")->required();
  geodesic->add_option("--to", o.to, "End state")->required();
  geodesic->add_option("--segments", o.segments, "Number of segments")->check(CLI::Range(2, 100000));
  geodesic->add_option("--tol", o.tol, "Quadrature tolerance (abs and rel)");
  add_output(geodesic);

  auto* validate = app.add_subcommand("validate", "Run the identity suite");
  add_config(validate);
  validate->add_option("--threshold-file", o.threshold_file, "JSON overrides for thresholds");
  add_output(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (metric->parsed()) return run_metric(o);
    if (length->parsed()) return run_length(o);
    if (sweep->parsed()) return run_sweep(o);
    if (degeneracy->parsed()) return run_degeneracy(o);
    if (geodesic->parsed()) return run_geodesic(o);
    if (validate->parsed()) return run_validate(o);
  } catch (const CliError& e) {
    std::cerr << "thermolength: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "thermolength: internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace tlcli

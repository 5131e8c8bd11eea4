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

#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "common.hpp"

namespace tlcli {

namespace {

constexpr int kT4Samples = 1000;
constexpr int kStateSamples = 100;
constexpr int kSegments = 50;
// Attempts per requested sample before a check gives up on the model domain.
constexpr int kAttemptFactor = 20;
constexpr double kHessianStep = 1e-4;

double param(const tl_model* model, const char* name) {
  double x = 0.0;
  check(tl_model_parameter(model, name, &x), name);
  return x;
}

// Residual accumulator: NaN counts as an infinitely bad sample.
struct MaxResidual {
  double value = 0.0;
  int samples = 0;
  void add(double r) {
    ++samples;
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    value = std::max(value, r);
  }
};

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Component-wise relative error; off-diagonal scale is floored by the
// geometric mean of the diagonal so a vanishing g12 does not blow up.
double metric_rel_error(const tl_metric& a, const tl_metric& b) {
  const double s11 = std::abs(a.g11);
  const double s22 = std::abs(a.g22);
  const double s12 = std::max(std::abs(a.g12), std::sqrt(s11 * s22));
  auto comp = [](double x, double y, double scale) {
    return scale == 0.0 ? std::abs(x - y) : std::abs(x - y) / scale;
  };
  return std::max({comp(a.g11, b.g11, s11), comp(a.g12, b.g12, s12), comp(a.g22, b.g22, s22)});
}

struct StatePair {
  tl_state energy;
  tl_state entropy;
};

class Sampler {
 public:
  Sampler(const tl_model* model, std::uint64_t seed) : model_(model), rng_(seed) {
    family_ = tl_model_family(model);
    b_ = param(model, "b");
    switch (family_) {
      case TL_FAMILY_VAN_DER_WAALS: {
        double T_c = 0.0, v_c = 0.0;
        check(tl_model_critical_point(model, &T_c, &v_c, nullptr), "critical point");
        // Supercritical, so every v > b is stable.
        T_lo_ = 1.05 * T_c;
        T_hi_ = 3.0 * T_c;
        v_lo_ = 1.5 * b_;
        v_hi_ = 30.0 * b_;
        break;
      }
      default:
        T_lo_ = 0.5;
        T_hi_ = 5.0;
        v_lo_ = b_ + 0.5;
        v_hi_ = b_ + 5.0;
        break;
    }
  }

  bool linear() const {
    return family_ == TL_FAMILY_LINEAR_SV || family_ == TL_FAMILY_LINEAR_UV;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // One attempt; std::nullopt when the drawn point is outside the usable
  // domain.
  std::optional<StatePair> draw() {
    StatePair sp{};
    if (linear()) {
      const tl_rep native = family_ == TL_FAMILY_LINEAR_SV ? TL_REP_ENERGY : TL_REP_ENTROPY;
      const tl_state p{native, uniform(0.5, 2.0), uniform(0.5, 2.0)};
      const tl_rep other = native == TL_REP_ENERGY ? TL_REP_ENTROPY : TL_REP_ENERGY;
      tl_state q{};
      if (!usable(tl_convert_state(model_, p, other, &q))) return std::nullopt;
      sp.energy = native == TL_REP_ENERGY ? p : q;
      sp.entropy = native == TL_REP_ENERGY ? q : p;
      return sp;
    }
    const double T = uniform(T_lo_, T_hi_);
    const double v = uniform(v_lo_, v_hi_);
    check(tl_state_from_tv(model_, T, v, TL_REP_ENERGY, &sp.energy), "state");
    check(tl_state_from_tv(model_, T, v, TL_REP_ENTROPY, &sp.entropy), "state");
    return sp;
  }

  // Feeds `samples` usable states to `body`, which returns false when the
  // state turned out to be unusable for that check.
  int run(int samples, const std::function<bool(const StatePair&)>& body) {
    int used = 0;
    for (int attempt = 0; attempt < samples * kAttemptFactor && used < samples; ++attempt) {
      const auto sp = draw();
      if (sp && body(*sp)) ++used;
    }
    return used;
  }

  double T_lo() const { return T_lo_; }
  double T_hi() const { return T_hi_; }
  double b() const { return b_; }
  tl_family family() const { return family_; }

  // Domain errors on an individual state mean "draw again"; anything else is a
  // real failure.
  static bool usable(tl_status st) {
    if (st == TL_OK) return true;
    if (is_state_error(st)) return false;
    check(st);
    return false;
  }

 private:
  const tl_model* model_;
  std::mt19937_64 rng_;
  tl_family family_;
  double b_ = 0.0;
  double T_lo_ = 0.0, T_hi_ = 0.0, v_lo_ = 0.0, v_hi_ = 0.0;
};

CheckResult finish(const std::string& name, const MaxResidual& acc, const Thresholds& th,
                   int wanted) {
  CheckResult r;
  r.name = name;
  r.threshold = th.at(name);
  r.samples = acc.samples;
  r.max_residual = acc.value;
  if (acc.samples == 0) {
    r.status = CheckStatus::Skipped;
    r.note = "no usable states for this model";
  } else {
    r.status = acc.value <= r.threshold ? CheckStatus::Pass : CheckStatus::Fail;
    if (acc.samples < wanted) r.note = "fewer usable states than requested";
  }
  return r;
}

CheckResult skipped(const std::string& name, const Thresholds& th, const std::string& why) {
  CheckResult r;
  r.name = name;
  r.threshold = th.at(name);
  r.status = CheckStatus::Skipped;
  r.note = why;
  return r;
}

}  // namespace

double Thresholds::at(const std::string& name) const {
  for (const auto& [k, v] : entries) {
    if (k == name) return v;
  }
  throw CliError(kExitUsage, "no threshold named \"" + name + "\"");
}

Thresholds Thresholds::defaults() {
  return Thresholds{{
      {"t4_identity", 1e-10},
      {"hessian_oracle_energy", 1e-6},
      {"hessian_oracle_entropy", 1e-6},
      {"heat_capacity_identity", 1e-10},
      {"sound_speed_routes", 1e-12},
      {"sound_speed_ratio", 1e-12},
      {"theorem1", 1e-8},
      {"theorem2", 1e-8},
      {"theorem_cross_ratio", 1e-8},
      {"ode_solution", 1e-12},
  }};
}

void Thresholds::override_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, path + ": cannot open threshold file");
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw CliError(kExitUsage, path + ": " + e.what());
  }
  if (!doc.is_object()) throw CliError(kExitUsage, path + ": threshold file must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const auto& e) { return e.first == key; });
    if (it == entries.end()) throw CliError(kExitUsage, path + ": unknown threshold \"" + key + "\"");
    if (!value.is_number() || !(value.get<double>() > 0.0)) {
      throw CliError(kExitUsage, path + ": threshold \"" + key + "\" must be a positive number");
    }
    it->second = value.get<double>();
  }
}

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

ValidationReport run_validation(const tl_model* model, const Thresholds& th, std::uint64_t seed) {
  ValidationReport report;
  Sampler sampler(model, seed);
  report.family = sampler.family();
  const bool gas = report.family == TL_FAMILY_IDEAL || report.family == TL_FAMILY_QUASI_IDEAL;

  {
    MaxResidual acc;
    sampler.run(kT4Samples, [&](const StatePair& sp) {
      tl_metric gu{}, gs{};
      double T = 0.0;
      if (!Sampler::usable(tl_energy_metric(model, sp.energy, &gu))) return false;
      if (!Sampler::usable(tl_entropy_metric(model, sp.entropy, &gs))) return false;
      check(tl_temperature(model, sp.energy, &T), "temperature");
      const double det_u = gu.g11 * gu.g22 - gu.g12 * gu.g12;
      const double det_s = gs.g11 * gs.g22 - gs.g12 * gs.g12;
      acc.add(std::abs(det_u - T * T * T * T * det_s) / std::max(1.0, std::abs(det_u)));
      return true;
    });
    report.checks.push_back(finish("t4_identity", acc, th, kT4Samples));
  }

  for (const tl_rep rep : {TL_REP_ENERGY, TL_REP_ENTROPY}) {
    MaxResidual acc;
    sampler.run(kStateSamples, [&](const StatePair& sp) {
      const tl_state& x = rep == TL_REP_ENERGY ? sp.energy : sp.entropy;
      tl_metric closed{}, fd{};
      const tl_status st = rep == TL_REP_ENERGY ? tl_energy_metric(model, x, &closed)
                                                : tl_entropy_metric(model, x, &closed);
      if (!Sampler::usable(st)) return false;
      if (!Sampler::usable(tl_metric_from_hessian(model, x, kHessianStep, &fd))) return false;
      acc.add(metric_rel_error(closed, fd));
      return true;
    });
    report.checks.push_back(finish(
        rep == TL_REP_ENERGY ? "hessian_oracle_energy" : "hessian_oracle_entropy", acc, th,
        kStateSamples));
  }

  {
    MaxResidual acc;
    sampler.run(kStateSamples, [&](const StatePair& sp) {
      tl_material m{};
      if (!Sampler::usable(tl_material_at(model, sp.energy, &m))) return false;
      const double v = sp.energy.x2;
      const double rhs = m.T * v * m.alpha * m.alpha / m.kappa_T;
      acc.add(std::abs(m.c_p - m.c_v - rhs) / std::abs(m.c_p));
      return true;
    });
    report.checks.push_back(finish("heat_capacity_identity", acc, th, kStateSamples));
  }

  {
    MaxResidual routes, ratio;
    sampler.run(kStateSamples, [&](const StatePair& sp) {
      tl_sound_speeds a{}, b{};
      tl_material m{};
      double nu_k = 0.0;
      if (!Sampler::usable(tl_material_at(model, sp.energy, &m))) return false;
      if (!Sampler::usable(tl_sound_speeds_at(model, sp.energy, &a))) return false;
      if (!Sampler::usable(tl_sound_speeds_at(model, sp.entropy, &b))) return false;
      if (!Sampler::usable(
              tl_isothermal_sound_speed_from_compressibility(model, sp.energy, &nu_k))) {
        return false;
      }
      if (a.degenerate || b.degenerate) return false;
      routes.add(std::max({rel_diff(nu_k, a.nu_isothermal), rel_diff(nu_k, b.nu_isothermal),
                           rel_diff(a.nu_adiabatic, b.nu_adiabatic)}));
      ratio.add(rel_diff(a.nu_adiabatic / a.nu_isothermal, std::sqrt(m.c_p / m.c_v)));
      return true;
    });
    report.checks.push_back(finish("sound_speed_routes", routes, th, kStateSamples));
    report.checks.push_back(finish("sound_speed_ratio", ratio, th, kStateSamples));
  }

  if (gas) {
    MaxResidual t1, t2, cross;
    const double b = sampler.b();
    for (int i = 0; i < kSegments; ++i) {
      SegmentReport s1, s2;
      s1.T = sampler.uniform(sampler.T_lo(), sampler.T_hi());
      s1.v1 = b + sampler.uniform(0.5, 3.0);
      s1.v2 = s1.v1 + sampler.uniform(0.1, 3.0);
      s2 = s1;
      check(tl_theorem1_check(model, s1.T, s1.v1, s1.v2, &s1.report), "theorem 1");
      check(tl_theorem2_check(model, s2.T, s2.v1, s2.v2, &s2.report), "theorem 2");
      if (!report.theorem1_worst || s1.report.residual > report.theorem1_worst->report.residual) {
        report.theorem1_worst = s1;
      }
      if (!report.theorem2_worst || s2.report.residual > report.theorem2_worst->report.residual) {
        report.theorem2_worst = s2;
      }
      t1.add(s1.report.residual);
      t2.add(s2.report.residual);
      cross.add(rel_diff(s1.report.length / s2.report.length, std::sqrt(s1.T)));
    }
    report.checks.push_back(finish("theorem1", t1, th, kSegments));
    report.checks.push_back(finish("theorem2", t2, th, kSegments));
    report.checks.push_back(finish("theorem_cross_ratio", cross, th, kSegments));
  } else {
    const char* why = "applies to ideal and quasi-ideal gases only";
    report.checks.push_back(skipped("theorem1", th, why));
    report.checks.push_back(skipped("theorem2", th, why));
    report.checks.push_back(skipped("theorem_cross_ratio", th, why));
  }

  if (report.family == TL_FAMILY_IDEAL) {
    MaxResidual acc;
    for (const double T : {0.5, 1.0, 2.0, 5.0}) {
      double r = 0.0;
      check(tl_ode_solution_check(model, T, 0.0, 0.0, 0, &r), "ode check");
      acc.add(r);
    }
    report.checks.push_back(finish("ode_solution", acc, th, 4));
  } else {
    report.checks.push_back(skipped("ode_solution", th, "applies to the ideal gas only"));
  }
  return report;
}

namespace {

Json segment_json(const SegmentReport& s) {
  Json j;
  j["T"] = s.T;
  j["v1"] = s.v1;
  j["v2"] = s.v2;
  j["work"] = s.report.work;
  j["length"] = s.report.length;
  j["predicted_length"] = s.report.predicted_length;
  j["residual"] = s.report.residual;
  return j;
}

}  // namespace

Json to_json(const ValidationReport& report, const std::string& threshold_source) {
  Json doc;
  doc["command"] = "validate";
  doc["family"] = family_name(report.family);
  doc["thresholds"] = threshold_source;
  doc["seed"] = kValidationSeed;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    j["max_residual"] = c.max_residual;
    j["threshold"] = c.threshold;
    j["samples"] = c.samples;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  doc["theorem1_worst"] = report.theorem1_worst ? segment_json(*report.theorem1_worst) : Json();
  doc["theorem2_worst"] = report.theorem2_worst ? segment_json(*report.theorem2_worst) : Json();
  doc["passed"] = report.passed();
  return doc;
}

Table to_table(const ValidationReport& report) {
  Table t;
  t.header = {"name", "status", "max_residual", "threshold", "samples"};
  for (const auto& c : report.checks) {
    t.rows.push_back({c.name, status_name(c.status), format_number(c.max_residual),
                      format_number(c.threshold), std::to_string(c.samples)});
  }
  return t;
}

}  // namespace tlcli

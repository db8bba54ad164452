// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qchan/lessnoisy.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qchan/error.hpp"

namespace qchan {
namespace {

using Json = nlohmann::json;

void require_gammas(double p, double g1, double g2) {
  for (double x : {p, g1, g2}) {
    require(std::isfinite(x) && x >= 0.0 && x <= 1.0, ErrorCode::kBadParam,
            "p, gamma1 and gamma2 must lie in [0,1]");
  }
}

// η̌ factor times (1 − η of the degrading map) for the branch `g` whose
// degrading map is A_{(1−2g)/(1−g)}, against the complement of `other`.
double threshold_factor(double g, double other) {
  const double degr = (1.0 - 2.0 * g) / (1.0 - g);
  const double eta_ub = std::sqrt(1.0 - degr);
  const double expansion = (1.0 - g) * (1.0 - other) / (g * other);
  return (1.0 - eta_ub) * expansion;
}

std::vector<double> default_grid(std::size_t grid) {
  std::vector<double> g(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    g[i] = round12(static_cast<double>(i + 1) / static_cast<double>(grid + 1));
  }
  return g;
}

template <typename F>
void parallel_for(std::size_t n, std::size_t jobs, F&& body) {
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::kParse, "bad number '" + s + "'");
  }
  require(used == s.size(), ErrorCode::kParse, "bad number '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  fail(ErrorCode::kParse, "bad boolean '" + s + "'");
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

std::string optional_cell(const std::optional<double>& v) { return v ? format12(*v) : ""; }

Json optional_json(const std::optional<double>& v) { return v ? Json(round12(*v)) : Json(nullptr); }

std::optional<double> json_optional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

Json parse_stream(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

void expect_header(std::istream& in, const char* header) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && line == header, ErrorCode::kParse,
          std::string("expected CSV header '") + header + "'");
}

}  // namespace

Degradability classify_degradability(double p, double g1, double g2) {
  require_gammas(p, g1, g2);
  const double s = g1 + g2;
  Degradability d;
  if (p == 0.5) {
    d.degradable = s <= 1.0;
    d.antidegradable = s >= 1.0;
  } else if (p > 0.5) {
    d.degradable = s <= 1.0 && g1 <= 0.5;
    d.antidegradable = s >= 1.0 && g1 >= 0.5;
  } else {
    d.degradable = s <= 1.0 && g2 <= 0.5;
    d.antidegradable = s >= 1.0 && g2 >= 0.5;
  }
  return d;
}

Channel make_flagged_ampdamp(double p, double g1, double g2) {
  return make_flagged_mixture(p, make_amplitude_damping(g1), make_amplitude_damping(g2));
}

double p_min(double g1, double g2) {
  require_gammas(0.0, g1, g2);
  require(g1 + g2 > 1.0 && g1 < 0.5 && g1 > 0.0 && g2 < 1.0, ErrorCode::kBadParam,
          "p_min needs gamma1 + gamma2 > 1 and gamma1 < 1/2");
  return 1.0 / (1.0 + threshold_factor(g1, g2));
}

double p_max(double g1, double g2) {
  require_gammas(0.0, g1, g2);
  require(g1 + g2 > 1.0 && g2 < 0.5 && g2 > 0.0 && g1 < 1.0, ErrorCode::kBadParam,
          "p_max needs gamma1 + gamma2 > 1 and gamma2 < 1/2");
  const double x = threshold_factor(g2, g1);
  return x / (1.0 + x);
}

bool proven_less_noisy(double p, double g1, double g2) {
  if (classify_degradability(p, g1, g2).degradable) return true;
  const bool first = g1 + g2 > 1.0 && g1 > 0.0 && g1 < 0.5 && g2 < 1.0;
  const bool second = g1 + g2 > 1.0 && g2 > 0.0 && g2 < 0.5 && g1 < 1.0;
  return (first && p >= p_min(g1, g2)) || (second && p <= p_max(g1, g2));
}

void validate_ensemble(const Ensemble& ensemble) {
  require(!ensemble.empty(), ErrorCode::kBadEnsemble, "ensemble is empty");
  double total = 0.0;
  for (const auto& m : ensemble) {
    require(std::isfinite(m.weight) && m.weight >= 0.0, ErrorCode::kBadEnsemble,
            "ensemble weights must be non-negative");
    require(m.state.dim() == ensemble.front().state.dim(), ErrorCode::kBadEnsemble,
            "ensemble states differ in dimension");
    total += m.weight;
  }
  require(std::abs(total - 1.0) <= 1e-9, ErrorCode::kBadEnsemble, "ensemble weights must sum to 1");
}

double holevo_information(const Channel& ch, const Ensemble& ensemble) {
  validate_ensemble(ensemble);
  require(ensemble.front().state.dim() == ch.dim_in(), ErrorCode::kBadEnsemble,
          "ensemble states do not match the channel input");
  ComplexMatrix avg = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  double conditional = 0.0;
  for (const auto& m : ensemble) {
    const DensityMatrix out = ch.apply(m.state);
    avg += m.weight * out.matrix();
    conditional += m.weight * vn_entropy(out);
  }
  return vn_entropy(DensityMatrix::assume_valid(avg)) - conditional;
}

double holevo_margin(double p, double g1, double g2, const Ensemble& ensemble) {
  require_gammas(p, g1, g2);
  validate_ensemble(ensemble);
  require(ensemble.front().state.dim() == 2, ErrorCode::kBadEnsemble, "ensemble must be qubit");
  auto branch = [&](double g) {
    const Channel a = make_amplitude_damping(g);
    return holevo_information(a, ensemble) - holevo_information(complementary(a), ensemble);
  };
  return p * branch(g1) + (1.0 - p) * branch(g2);
}

double holevo_margin_direct(double p, double g1, double g2, const Ensemble& ensemble) {
  require_gammas(p, g1, g2);
  validate_ensemble(ensemble);
  require(ensemble.front().state.dim() == 2, ErrorCode::kBadEnsemble, "ensemble must be qubit");
  const Channel psi = make_flagged_ampdamp(p, g1, g2);
  return holevo_information(psi, ensemble) - holevo_information(complementary(psi), ensemble);
}

Ensemble sample_ensemble(Rng& rng) {
  std::uniform_int_distribution<int> size(2, 4);
  std::bernoulli_distribution coin(0.5);
  const auto n = static_cast<std::size_t>(size(rng));
  const std::vector<double> w = dirichlet(n, rng);
  Ensemble e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back({w[i], coin(rng) ? haar_pure(2, rng) : hilbert_schmidt_state(2, rng)});
  }
  return e;
}

std::vector<RegionSample> sweep_region(std::size_t grid, const std::vector<double>& p_list,
                                       const SweepOptions& options) {
  const std::vector<double> g1s =
      options.gamma1_values.empty() ? default_grid(grid) : options.gamma1_values;
  const std::vector<double> g2s =
      options.gamma2_values.empty() ? default_grid(grid) : options.gamma2_values;
  require(!g1s.empty() && !g2s.empty(), ErrorCode::kBadParam, "empty gamma grid");
  for (double p : p_list) require_gammas(p, 0.0, 0.0);

  const std::size_t np = p_list.size();
  const std::size_t total = g1s.size() * g2s.size() * np;
  std::vector<std::optional<RegionSample>> rows(total);
  parallel_for(total, options.jobs, [&](std::size_t idx) {
    RegionSample r;
    r.gamma1 = g1s[idx / (g2s.size() * np)];
    r.gamma2 = g2s[(idx / np) % g2s.size()];
    r.p = p_list[idx % np];
    const Degradability d = classify_degradability(r.p, r.gamma1, r.gamma2);
    r.degradable = d.degradable;
    r.antidegradable = d.antidegradable;
    if (r.gamma1 + r.gamma2 > 1.0 && r.gamma1 > 0.0 && r.gamma1 < 0.5 && r.gamma2 < 1.0) {
      r.p_min = p_min(r.gamma1, r.gamma2);
    }
    r.proven_less_noisy = proven_less_noisy(r.p, r.gamma1, r.gamma2);
    if (options.holevo_samples > 0) {
      Rng rng = make_rng(options.seed, idx);
      double lo = kInfinity;
      for (std::size_t s = 0; s < options.holevo_samples; ++s) {
        lo = std::min(lo, holevo_margin(r.p, r.gamma1, r.gamma2, sample_ensemble(rng)));
      }
      r.holevo_margin_min = lo;
    }
    rows[idx] = r;
  });
  std::vector<RegionSample> out;
  out.reserve(total);
  for (auto& r : rows) out.push_back(*r);
  return out;
}

std::vector<SurfacePoint> relative_expansion_surface(
    std::size_t grid, const std::optional<OptimizerConfig>& numerical) {
  require(grid >= 2, ErrorCode::kBadParam, "grid must be at least 2");
  const std::vector<double> g = default_grid(grid);
  std::vector<SurfacePoint> out;
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      SurfacePoint s;
      s.gamma1 = g[i];
      s.gamma2 = g[j];
      s.conjectured = *ampdamp_expansion_conjecture(g[i], g[j]).value;
      if (numerical) {
        OptimizerConfig cfg = *numerical;
        cfg.mode = OptimizeMode::kMin;
        cfg.seed = numerical->seed + i * grid + j;
        s.numerical = *estimate_coefficient(make_amplitude_damping(g[i]),
                                            make_amplitude_damping(g[j]), cfg)
                           .value;
      }
      out.push_back(s);
    }
  }
  return out;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format12(x));
}

std::string format12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_region_csv(std::ostream& out, const std::vector<RegionSample>& samples) {
  out << kRegionCsvHeader << '\n';
  for (const auto& r : samples) {
    out << format12(r.gamma1) << ',' << format12(r.gamma2) << ',' << format12(r.p) << ','
        << (r.degradable ? "true" : "false") << ',' << (r.antidegradable ? "true" : "false") << ','
        << optional_cell(r.p_min) << ',' << (r.proven_less_noisy ? "true" : "false") << ','
        << optional_cell(r.holevo_margin_min) << '\n';
  }
}

std::vector<RegionSample> read_region_csv(std::istream& in) {
  expect_header(in, kRegionCsvHeader);
  std::vector<RegionSample> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split_csv(line);
    require(c.size() == 8, ErrorCode::kParse, "region row needs 8 fields: " + line);
    RegionSample r;
    r.gamma1 = parse_double(c[0]);
    r.gamma2 = parse_double(c[1]);
    r.p = parse_double(c[2]);
    r.degradable = parse_bool(c[3]);
    r.antidegradable = parse_bool(c[4]);
    r.p_min = parse_optional(c[5]);
    r.proven_less_noisy = parse_bool(c[6]);
    r.holevo_margin_min = parse_optional(c[7]);
    out.push_back(r);
  }
  return out;
}

void write_region_json(std::ostream& out, const std::vector<RegionSample>& samples,
                       const std::map<std::string, std::string>& meta) {
  Json records = Json::array();
  for (const auto& r : samples) {
    records.push_back({{"gamma1", round12(r.gamma1)},
                       {"gamma2", round12(r.gamma2)},
                       {"p", round12(r.p)},
                       {"degradable", r.degradable},
                       {"antidegradable", r.antidegradable},
                       {"p_min", optional_json(r.p_min)},
                       {"proven_less_noisy", r.proven_less_noisy},
                       {"holevo_margin_min", optional_json(r.holevo_margin_min)}});
  }
  out << Json{{"meta", meta}, {"records", records}}.dump(2) << '\n';
}

std::vector<RegionSample> read_region_json(std::istream& in) {
  const Json j = parse_stream(in);
  std::vector<RegionSample> out;
  try {
    for (const auto& r : j.at("records")) {
      RegionSample s;
      s.gamma1 = r.at("gamma1").get<double>();
      s.gamma2 = r.at("gamma2").get<double>();
      s.p = r.at("p").get<double>();
      s.degradable = r.at("degradable").get<bool>();
      s.antidegradable = r.at("antidegradable").get<bool>();
      s.p_min = json_optional(r.at("p_min"));
      s.proven_less_noisy = r.at("proven_less_noisy").get<bool>();
      s.holevo_margin_min = json_optional(r.at("holevo_margin_min"));
      out.push_back(s);
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed region JSON: ") + e.what());
  }
  return out;
}

void write_surface_csv(std::ostream& out, const std::vector<SurfacePoint>& points) {
  out << kSurfaceCsvHeader << '\n';
  for (const auto& s : points) {
    out << format12(s.gamma1) << ',' << format12(s.gamma2) << ',' << format12(s.conjectured) << ','
        << optional_cell(s.numerical) << '\n';
  }
}

std::vector<SurfacePoint> read_surface_csv(std::istream& in) {
  expect_header(in, kSurfaceCsvHeader);
  std::vector<SurfacePoint> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split_csv(line);
    require(c.size() == 4, ErrorCode::kParse, "surface row needs 4 fields: " + line);
    out.push_back({parse_double(c[0]), parse_double(c[1]), parse_double(c[2]), parse_optional(c[3])});
  }
  return out;
}

void write_surface_json(std::ostream& out, const std::vector<SurfacePoint>& points,
                        const std::map<std::string, std::string>& meta) {
  Json records = Json::array();
  for (const auto& s : points) {
    records.push_back({{"gamma1", round12(s.gamma1)},
                       {"gamma2", round12(s.gamma2)},
                       {"conjectured", round12(s.conjectured)},
                       {"numerical", optional_json(s.numerical)}});
  }
  out << Json{{"meta", meta}, {"records", records}}.dump(2) << '\n';
}

std::vector<SurfacePoint> read_surface_json(std::istream& in) {
  const Json j = parse_stream(in);
  std::vector<SurfacePoint> out;
  try {
    for (const auto& r : j.at("records")) {
      out.push_back({r.at("gamma1").get<double>(), r.at("gamma2").get<double>(),
                     r.at("conjectured").get<double>(), json_optional(r.at("numerical"))});
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("malformed surface JSON: ") + e.what());
  }
  return out;
}

}  // namespace qchan

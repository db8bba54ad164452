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

#include "qchan/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qchan/channel_spec.hpp"
#include "qchan/coefficients.hpp"
#include "qchan/divergences.hpp"
#include "qchan/error.hpp"
#include "qchan/estimator.hpp"
#include "qchan/lessnoisy.hpp"
#include "qchan/manifest.hpp"
#include "qchan/verify.hpp"
#include "qchan/version.hpp"

namespace qchan::cli {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitAssumption = 3;
constexpr int kExitOther = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAssumptionFailed:
    case ErrorCode::kNotStrictlyPositive:
    case ErrorCode::kPurityPreserving:
      return kExitAssumption;
    case ErrorCode::kSupportViolation:
    case ErrorCode::kBadEnsemble:
      return kExitOther;
    default:
      return kExitBadInput;
  }
}

struct Common {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string format;
  Clock::time_point started = Clock::now();
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct CoeffArgs {
  std::string n;
  std::string m;
  std::string which = "both";
  std::size_t restarts = 50;
  std::size_t max_iters = 2000;
  std::optional<double> eps;
  std::size_t conjecture_grid = 2000;
};

struct RegionArgs {
  std::size_t grid = 50;
  std::vector<double> p{0.6, 0.75, 0.9};
  std::string out;
  int fig = 0;
  std::size_t holevo_samples = 16;
  std::vector<double> gamma1;
  std::vector<double> gamma2;
  bool numerical = false;
  std::size_t restarts = 20;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t trials = 0;
};

struct NogoArgs {
  std::string channel;
  std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
};

struct BkmArgs {
  std::string state_file;
  std::string bloch;
  std::string pert_file;
  std::string y;
  std::string channel;
};

ordered_json number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

ordered_json estimate_json(const std::string& quantity, const CoefficientEstimate& e) {
  ordered_json j;
  j["quantity"] = quantity;
  j["kind"] = std::string(to_string(e.kind));
  j["value"] = e.value ? number_or_null(*e.value) : ordered_json(nullptr);
  j["lo"] = number_or_null(e.lo);
  j["hi"] = number_or_null(e.hi);
  j["source"] = e.source;
  if (e.meta) {
    ordered_json m;
    m["seed"] = e.meta->seed;
    m["maximize"] = e.meta->maximize;
    m["restarts"] = e.meta->restart_values.size();
    ordered_json vals = ordered_json::array();
    for (double v : e.meta->restart_values) vals.push_back(number_or_null(v));
    m["restart_values"] = vals;
    std::size_t conv = 0;
    for (bool c : e.meta->converged) conv += c ? 1 : 0;
    m["converged"] = conv;
    j["numerical"] = m;
  }
  return j;
}

ordered_json manifest_json(const RunManifest& m) { return ordered_json::parse(m.to_json()); }

std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::string list_string(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format12(v[i]);
  }
  return s;
}

// Depolarizing parameters, with the identity read as p = 0.
std::optional<std::pair<std::size_t, double>> as_depol(const SpecFields& f) {
  if (f.kind == "depol") return std::pair{static_cast<std::size_t>(f.number("d")), f.number("p")};
  if (f.kind == "id") return std::pair{static_cast<std::size_t>(f.number("d")), 0.0};
  return std::nullopt;
}

std::optional<DephasingSpec> as_dephasing(const SpecFields& f) {
  if (f.kind == "deph") return DephasingSpec::qubit(f.number("p"));
  if (f.kind == "dephgen") {
    const auto it = f.params.find("file");
    if (it == f.params.end()) fail(ErrorCode::kParse, "dephgen: missing key 'file'");
    return DephasingSpec::from_matrix(read_matrix_csv(it->second));
  }
  if (f.kind == "id") {
    const auto d = static_cast<Eigen::Index>(f.number("d"));
    return DephasingSpec::from_matrix(ComplexMatrix::Ones(d, d));
  }
  return std::nullopt;
}

// Smallest ε on a 1e-4 grid for which the CP-order hypotheses hold.
std::optional<CoefficientEstimate> scan_dephasing_bound(const DephasingSpec& m, const DephasingSpec& n,
                                                        double& eps_out) {
  for (int k = 1; k < 5000; ++k) {
    const double eps = k * 1e-4;
    try {
      auto e = dephasing_cp_expansion_bound(m, n, eps);
      eps_out = eps;
      return e;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kAssumptionFailed) throw;
    }
  }
  return std::nullopt;
}

int cmd_coeff(const CoeffArgs& a, const Common& c, RunManifest& man, std::ostream& out) {
  if (a.which != "contraction" && a.which != "expansion" && a.which != "both") {
    fail(ErrorCode::kParse, "--which must be contraction, expansion or both");
  }
  const bool want_c = a.which != "expansion";
  const bool want_e = a.which != "contraction";
  const Channel n = parse_channel_spec(a.n);
  const std::string m_spec = a.m.empty() ? "id:d=" + std::to_string(n.dim_in()) : a.m;
  const Channel m = parse_channel_spec(m_spec);
  require(n.dim_in() == m.dim_in(), ErrorCode::kDimMismatch, "--n and --m must share an input dimension");
  const SpecFields fn = parse_spec_fields(a.n);
  const SpecFields fm = parse_spec_fields(m_spec);

  ordered_json report;
  report["n"] = a.n;
  report["m"] = m_spec;
  ordered_json est = ordered_json::array();
  ordered_json notes = ordered_json::array();
  auto add = [&](const std::string& q, const CoefficientEstimate& e) { est.push_back(estimate_json(q, e)); };

  const auto dn = as_depol(fn);
  const auto dm = as_depol(fm);
  if (dn && dm && dn->first == dm->first && !(fn.kind == "id" && fm.kind == "id")) {
    const auto [d, p1] = *dn;
    const double p2 = dm->second;
    if (d == 2 && p1 > 0.0) {
      const ContractionExpansion ce = depol_qubit_exact(p1, p2);
      if (want_c) add("contraction", ce.contraction);
      if (want_e) add("expansion", ce.expansion);
    } else if (p2 <= p1 && p1 > 0.0) {
      if (want_c) add("contraction", depol_relative_bounds(d, p1, p2));
    } else if (p1 < p2 && p2 > 0.0) {
      // η̌_{N,M} = 1/η_{M,N}.
      const CoefficientEstimate r = depol_relative_bounds(d, p2, p1);
      CoefficientEstimate e;
      e.kind = EstimateKind::kBoundPair;
      e.lo = 1.0 / r.hi;
      e.hi = r.lo > 0.0 ? 1.0 / r.lo : kInfinity;
      e.source = r.source + " (reciprocal)";
      if (want_e) add("expansion", e);
    }
  }

  if (fn.kind == "amp" && fm.kind == "amp") {
    const double g1 = fn.number("gamma");
    const double g2 = fm.number("gamma");
    if (want_c) add("contraction", ampdamp_contraction_conjecture(g1, g2, a.conjecture_grid));
    if (want_e) add("expansion", ampdamp_expansion_conjecture(g1, g2));
  }
  if (fn.kind == "amp" && fm.kind == "id" && want_c) {
    const TraceContraction tc = ampdamp_trace_contraction(fn.number("gamma"));
    CoefficientEstimate e;
    e.kind = EstimateKind::kBoundPair;
    e.lo = tc.entropy_sandwich.lo;
    e.hi = tc.entropy_sandwich.hi;
    e.source = "trace-distance sandwich";
    add("contraction", e);
  }

  const auto gn = as_dephasing(fn);
  const auto gm = as_dephasing(fm);
  if (gn && gm && want_e && !(fn.kind == "id" && fm.kind == "id") && fn.kind != "id") {
    if (a.eps) {
      add("expansion", dephasing_cp_expansion_bound(*gm, *gn, *a.eps));
    } else {
      double eps = 0.0;
      if (auto e = scan_dephasing_bound(*gm, *gn, eps)) {
        e->source += " (eps=" + format12(eps) + ")";
        add("expansion", *e);
      } else {
        notes.push_back("no eps in (0, 1/2) satisfies the dephasing CP-order hypotheses");
      }
    }
  }

  if (fm.kind == "id" && want_e && n.dim_out() > n.dim_in()) {
    notes.push_back("no-go witness skipped: output dimension exceeds input dimension");
  } else if (fm.kind == "id" && want_e) {
    const NogoReport r = nogo_report(n, {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, c.seed);
    ordered_json nj;
    CoefficientEstimate e;
    if (r.outcome == NogoReport::Outcome::kUnitary) {
      nj["outcome"] = "unitary";
      e.kind = EstimateKind::kExactClosedForm;
      e.value = 1.0;
      e.lo = e.hi = 1.0;
      e.source = "unitary channel";
    } else {
      nj["outcome"] = r.outcome == NogoReport::Outcome::kReplacer ? "replacer" : "ladder";
      e.kind = EstimateKind::kExactClosedForm;
      e.value = 0.0;
      e.lo = e.hi = 0.0;
      e.source = "no-go witness ladder";
    }
    nj["eps"] = r.eps;
    ordered_json ratios = ordered_json::array();
    for (double x : r.ratios) ratios.push_back(number_or_null(x));
    nj["ratios"] = ratios;
    nj["smallest_ratio"] = r.expansion;
    report["nogo"] = nj;
    add("expansion", e);
  }

  if (a.restarts > 0) {
    OptimizerConfig cfg;
    cfg.restarts = a.restarts;
    cfg.max_iters = a.max_iters;
    cfg.seed = c.seed;
    cfg.jobs = c.jobs;
    const auto t0 = Clock::now();
    if (want_c) {
      cfg.mode = OptimizeMode::kMax;
      add("contraction", estimate_coefficient(n, m, cfg));
      man.timings.emplace_back("numerical_contraction", std::chrono::duration<double>(Clock::now() - t0).count());
    }
    const auto t1 = Clock::now();
    if (want_e) {
      cfg.mode = OptimizeMode::kMin;
      add("expansion", estimate_coefficient(n, m, cfg));
      man.timings.emplace_back("numerical_expansion", std::chrono::duration<double>(Clock::now() - t1).count());
    }
  }

  report["estimates"] = est;
  if (!notes.empty()) report["notes"] = notes;

  if (c.format == "csv") {
    out << "quantity,kind,value,lo,hi,source\n";
    for (const auto& e : est) {
      auto cell = [](const ordered_json& v) { return v.is_null() ? std::string() : format12(v.get<double>()); };
      out << e["quantity"].get<std::string>() << ',' << e["kind"].get<std::string>() << ','
          << cell(e["value"]) << ',' << cell(e["lo"]) << ',' << cell(e["hi"]) << ",\""
          << e["source"].get<std::string>() << "\"\n";
    }
  } else {
    man.wall_seconds = since(c.started);
    report["manifest"] = manifest_json(man);
    out << report.dump(2) << '\n';
  }
  return 0;
}

int cmd_region(const RegionArgs& a, const Common& c, RunManifest& man, std::ostream& out) {
  require(a.grid >= 1, ErrorCode::kParse, "--grid must be positive");
  require(a.fig == 0 || (a.fig >= 2 && a.fig <= 4), ErrorCode::kParse, "--fig must be 2, 3 or 4");
  const std::string format = c.format.empty() ? "csv" : c.format;
  std::ostringstream body;
  std::map<std::string, std::string> meta{{"manifest_hash", man.hash()}, {"version", kVersion}};
  if (a.fig != 2) meta["p_min_basis"] = "conditional on the amplitude-damping expansion conjecture";
  const auto t0 = Clock::now();
  if (a.fig == 2) {
    std::optional<OptimizerConfig> cfg;
    if (a.numerical) {
      cfg.emplace();
      cfg->restarts = a.restarts;
      cfg->seed = c.seed;
      cfg->jobs = c.jobs;
      cfg->mode = OptimizeMode::kMin;
    }
    const auto pts = relative_expansion_surface(a.grid, cfg);
    if (format == "json") write_surface_json(body, pts, meta);
    else write_surface_csv(body, pts);
  } else {
    SweepOptions opt;
    opt.holevo_samples = a.holevo_samples;
    opt.seed = c.seed;
    opt.jobs = c.jobs;
    opt.gamma1_values = a.gamma1;
    opt.gamma2_values = a.gamma2;
    const auto rows = sweep_region(a.grid, a.p, opt);
    if (format == "json") write_region_json(body, rows, meta);
    else write_region_csv(body, rows);
  }
  man.timings.emplace_back("sweep", std::chrono::duration<double>(Clock::now() - t0).count());

  if (a.out.empty() || a.out == "-") {
    out << body.str();
    return 0;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) fail(ErrorCode::kIo, "cannot open '" + a.out + "' for writing");
  f << body.str();
  f.close();
  if (!f) fail(ErrorCode::kIo, "failed writing '" + a.out + "'");
  man.wall_seconds = since(c.started);
  const auto side = write_sidecar(man, a.out);
  out << "wrote " << a.out << " (manifest " << man.hash() << ", " << side.string() << ")\n";
  return 0;
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.trials = a.trials;
  const auto results = run_suite(a.suite, opt);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    char t[32];
    std::snprintf(t, sizeof t, "%8.3fs", r.seconds);
    out << (r.passed ? "PASS " : "FAIL ") << t << "  [" << r.suite << "] " << r.name << ": " << r.detail << '\n';
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed ? kExitVerifyFailed : 0;
}

int cmd_nogo(const NogoArgs& a, const Common& c, RunManifest& man, std::ostream& out) {
  const Channel ch = parse_channel_spec(a.channel);
  const NogoReport r = nogo_report(ch, a.eps, c.seed);
  ordered_json j;
  j["channel"] = a.channel;
  switch (r.outcome) {
    case NogoReport::Outcome::kUnitary: j["outcome"] = "unitary"; break;
    case NogoReport::Outcome::kReplacer: j["outcome"] = "replacer"; break;
    case NogoReport::Outcome::kLadder: j["outcome"] = "ladder"; break;
  }
  j["expansion"] = r.expansion;
  j["eps"] = r.eps;
  ordered_json ratios = ordered_json::array();
  for (double x : r.ratios) ratios.push_back(number_or_null(x));
  j["ratios"] = ratios;
  if (c.format == "csv") {
    out << "eps,ratio\n";
    for (std::size_t i = 0; i < r.ratios.size(); ++i) out << format12(r.eps[i]) << ',' << format12(r.ratios[i]) << '\n';
    return 0;
  }
  man.wall_seconds = since(c.started);
  j["manifest"] = manifest_json(man);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_bkm(const BkmArgs& a, const Common& c, RunManifest& man, std::ostream& out) {
  require(a.state_file.empty() != a.bloch.empty(), ErrorCode::kParse, "give exactly one of --state, --bloch");
  require(a.pert_file.empty() != a.y.empty(), ErrorCode::kParse, "give exactly one of --pert, --y");
  const DensityMatrix sigma = a.bloch.empty() ? DensityMatrix::from_matrix(read_matrix_json(a.state_file))
                                              : DensityMatrix::bloch(parse_vec3(a.bloch));
  ComplexMatrix x;
  if (a.y.empty()) {
    x = read_matrix_json(a.pert_file);
  } else {
    const Vec3 y = parse_vec3(a.y);
    x = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 3; ++i) x += y(i) * pauli(i + 1);
  }
  ordered_json j;
  j["metric"] = number_or_null(bkm_metric(sigma, x));
  if (sigma.dim() == 2 && x.rows() == 2) {
    const ComplexMatrix xt = x - (x.trace() / 2.0) * ComplexMatrix::Identity(2, 2);
    if (x.trace() == Complex(0.0)) {
      Vec3 y;
      for (int i = 0; i < 3; ++i) y(i) = 0.5 * (pauli(i + 1) * xt).trace().real();
      j["metric_qubit_closed_form"] = number_or_null(bkm_qubit(sigma.bloch_vector(), y));
    }
  }
  if (!a.channel.empty()) {
    const Channel ch = parse_channel_spec(a.channel);
    const double g = bkm_metric(ch.apply(sigma), ch.apply(x));
    j["channel"] = a.channel;
    j["metric_after_channel"] = number_or_null(g);
    const double g0 = bkm_metric(sigma, x);
    j["ratio"] = g0 > 0.0 ? number_or_null(g / g0) : ordered_json(nullptr);
  }
  if (c.format == "csv") {
    out << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_number()) out << it.key() << ',' << format12(it.value().get<double>()) << '\n';
    }
    return 0;
  }
  man.wall_seconds = since(c.started);
  j["manifest"] = manifest_json(man);
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contraction and expansion coefficients of quantum channels"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--seed", common.seed, "RNG seed")->envname("QCHAN_SEED")->default_val(0);
    sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber)->default_val(1);
    if (with_format) sub->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CoeffArgs coeff;
  auto* s_coeff = app.add_subcommand("coeff", "closed forms, bounds and numerical estimates for a channel pair");
  s_coeff->add_option("--n", coeff.n, "numerator channel")->required();
  s_coeff->add_option("--m", coeff.m, "denominator channel (identity when omitted)");
  s_coeff->add_option("--which", coeff.which, "contraction, expansion or both")
      ->check(CLI::IsMember({"contraction", "expansion", "both"}))->capture_default_str();
  s_coeff->add_option("--restarts", coeff.restarts, "optimizer restarts; 0 disables")->capture_default_str();
  s_coeff->add_option("--max-iters", coeff.max_iters, "Nelder-Mead iterations per restart")->capture_default_str();
  s_coeff->add_option("--eps", coeff.eps, "dephasing comparison parameter");
  add_common(s_coeff, true);

  RegionArgs region;
  auto* s_region = app.add_subcommand("region", "less-noisy region or expansion surface sweep");
  s_region->add_option("--grid", region.grid, "points per gamma axis")->capture_default_str();
  s_region->add_option("--p", region.p, "flag probabilities")->delimiter(',');
  s_region->add_option("--out", region.out, "output file ('-' or omitted for stdout)");
  s_region->add_option("--fig", region.fig, "2 selects the expansion surface");
  s_region->add_option("--holevo-samples", region.holevo_samples, "ensembles per point")->capture_default_str();
  s_region->add_option("--gamma1", region.gamma1, "explicit gamma1 values")->delimiter(',');
  s_region->add_option("--gamma2", region.gamma2, "explicit gamma2 values")->delimiter(',');
  s_region->add_flag("--numerical", region.numerical, "add optimizer estimates to the surface");
  s_region->add_option("--restarts", region.restarts, "restarts per surface point")->capture_default_str();
  add_common(s_region, true);

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "run property checks");
  s_verify->add_option("--suite", verify.suite)->check(CLI::IsMember({"dpi", "bkm", "sandwich", "integral", "region", "all"}))
      ->capture_default_str();
  s_verify->add_option("--trials", verify.trials, "trial count override");
  add_common(s_verify, false);

  NogoArgs nogo;
  auto* s_nogo = app.add_subcommand("nogo", "witness ladder for a vanishing expansion coefficient");
  s_nogo->add_option("--channel", nogo.channel)->required();
  s_nogo->add_option("--eps", nogo.eps, "ladder")->delimiter(',');
  add_common(s_nogo, true);

  BkmArgs bkm;
  auto* s_bkm = app.add_subcommand("bkm", "evaluate the BKM metric");
  s_bkm->add_option("--state", bkm.state_file, "JSON density matrix");
  s_bkm->add_option("--bloch", bkm.bloch, "qubit Bloch vector x,y,z");
  s_bkm->add_option("--pert", bkm.pert_file, "JSON Hermitian perturbation");
  s_bkm->add_option("--y", bkm.y, "qubit perturbation y.sigma as x,y,z");
  s_bkm->add_option("--channel", bkm.channel, "channel applied to state and perturbation");
  add_common(s_bkm, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitBadInput;
  }

  common.started = Clock::now();
  RunManifest man;
  man.command_line = join_args(argc, argv);
  man.seed = common.seed;
  man.version = kVersion;
  man.started_utc = utc_now();

  try {
    if (s_coeff->parsed()) {
      man.subcommand = "coeff";
      man.config = {{"n", coeff.n}, {"m", coeff.m}, {"which", coeff.which},
                    {"restarts", std::to_string(coeff.restarts)}, {"max_iters", std::to_string(coeff.max_iters)},
                    {"eps", coeff.eps ? format12(*coeff.eps) : ""}};
      return cmd_coeff(coeff, common, man, out);
    }
    if (s_region->parsed()) {
      man.subcommand = "region";
      man.config = {{"grid", std::to_string(region.grid)}, {"p", list_string(region.p)},
                    {"fig", std::to_string(region.fig)}, {"holevo_samples", std::to_string(region.holevo_samples)},
                    {"gamma1", list_string(region.gamma1)}, {"gamma2", list_string(region.gamma2)},
                    {"numerical", region.numerical ? "true" : "false"}, {"restarts", std::to_string(region.restarts)}};
      return cmd_region(region, common, man, out);
    }
    if (s_verify->parsed()) return cmd_verify(verify, common, out);
    if (s_nogo->parsed()) {
      man.subcommand = "nogo";
      man.config = {{"channel", nogo.channel}, {"eps", list_string(nogo.eps)}};
      return cmd_nogo(nogo, common, man, out);
    }
    if (s_bkm->parsed()) {
      man.subcommand = "bkm";
      man.config = {{"state", bkm.state_file}, {"bloch", bkm.bloch}, {"pert", bkm.pert_file},
                    {"y", bkm.y}, {"channel", bkm.channel}};
      return cmd_bkm(bkm, common, man, out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitBadInput;
}

}  // namespace qchan::cli

#include "curvcmp/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "curvcmp/cli/csv.hpp"
#include "curvcmp/cli/figure.hpp"
#include "curvcmp/comparison_engine.hpp"
#include "curvcmp/distance_like.hpp"
#include "curvcmp/fitting.hpp"
#include "curvcmp/inequality_checker.hpp"
#include "curvcmp/model_spaces.hpp"
#include "curvcmp/sampled_function.hpp"

namespace curvcmp::cli {

using nlohmann::json;

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::argument: return 2;
    case ErrorKind::infeasible: return 3;
    case ErrorKind::domain:
    case ErrorKind::singular:
    case ErrorKind::grid: return 4;
    case ErrorKind::bracket: return 5;
  }
  return 1;
}

namespace {

constexpr std::size_t kOraclePairCap = 100000;

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

SampledFunction load(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_csv(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::argument, "cannot open '" + path + "' for reading");
  return read_csv(file);
}

void store(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::argument, "cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw Error(ErrorKind::argument, "failed writing '" + path + "'");
}

std::string csv_text(const SampledFunction& f) {
  std::ostringstream os;
  write_csv(os, f);
  return os.str();
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

json pair_json(const std::optional<IndexPair>& pair, const SampledFunction& f) {
  if (!pair) return nullptr;
  return {{"i", pair->i}, {"j", pair->j}, {"t_i", f.t(pair->i)}, {"t_j", f.t(pair->j)}};
}

json verdict_json(const Verdict& v) {
  return {{"kind", to_string(v.kind)},
          {"min_residual", v.min_residual},
          {"max_residual", v.max_residual},
          {"tol", v.tol}};
}

// Every stride-th node plus the last, so that the sub-grid has at most
// kOraclePairCap pairs.
std::vector<std::size_t> oracle_nodes(std::size_t n) {
  std::size_t stride = 1;
  auto count = [&](std::size_t s) { return (n - 1) / s + 1 + ((n - 1) % s ? 1 : 0); };
  while (true) {
    const std::size_t m = count(stride);
    if (m * (m - 1) / 2 <= kOraclePairCap) break;
    ++stride;
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

struct Options {
  double k = 0, u = 0, v = 0, t1 = 0, t2 = 1, g1 = 0, g2 = 0;
  double from = 0, to = 1;
  std::size_t n = 0;
  std::vector<double> ts;
  std::string in_path, out_path, csv_path;
  double tol = 0;
  bool oracle = false;
  int order = 2;
  std::size_t resample = 0;
  std::size_t pairs = 200;
  std::uint64_t seed = 0;
  std::string side;
  double k_min = 0, k_max = 0, k_tol = 1e-4;
  double amp = 0, center = 0, width = 0;
  std::vector<double> ks;
};

int cmd_fit(const Options& o, Io io) {
  const FitResult r = fit({o.t1, o.t2, o.g1, o.g2, Curvature(o.k)});
  emit(io.out, {{"k", o.k},
                {"u", r.params.u()},
                {"v", r.params.v()},
                {"residuals", {r.residual_t1, r.residual_t2}}});
  return 0;
}

int cmd_eval(const Options& o, Io io) {
  const ComparisonParams params(Curvature(o.k), o.u, o.v);
  std::vector<double> ts = o.ts.empty() ? uniform_grid(o.from, o.to, o.n) : o.ts;
  std::vector<double> gs;
  gs.reserve(ts.size());
  for (double t : ts) gs.push_back(eval_g(params, t));
  std::string text = "t,g\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    text += format_csv_double(ts[i]) + "," + format_csv_double(gs[i]) + "\n";
  }
  store(o.out_path, text, io.out);
  return 0;
}

int cmd_synth(const Options& o, Io io, bool perturbed) {
  const ComparisonParams params(Curvature(o.k), o.u, o.v);
  SampledFunction f = synth(params, o.from, o.to, o.n);
  if (perturbed) f = perturb(f, o.amp, o.center, o.width);
  store(o.out_path, csv_text(f), io.out);
  return 0;
}

int cmd_validate(const Options& o, Io io) {
  const SampledFunction f = load(o.in_path, io.in);
  const double tol = o.tol > 0 ? o.tol : kDefaultSlopeTolerance;
  const DistanceLikeReport r = is_distance_like(f, tol);
  json report = {{"distance_like", r.distance_like()},
                 {"nonexpanding", r.nonexpanding},
                 {"endpoint_ok", r.endpoint_ok},
                 {"first_violation", pair_json(r.first_violation, f)},
                 {"worst_slack", r.worst_slack},
                 {"slope_tol", tol},
                 {"pairwise_ok", nullptr},
                 {"oracle_violation", nullptr}};
  if (o.oracle) {
    const std::vector<std::size_t> idx = oracle_nodes(f.size());
    std::vector<double> ts, gs;
    for (std::size_t i : idx) {
      ts.push_back(f.t(i));
      gs.push_back(f.g(i));
    }
    const PairCheck check = pairwise_oracle(SampledFunction(std::move(ts), std::move(gs)), tol);
    std::optional<IndexPair> violation;
    if (check.violation) violation = IndexPair{idx[check.violation->i], idx[check.violation->j]};
    report["pairwise_ok"] = check.ok;
    report["oracle_violation"] = pair_json(violation, f);
    report["oracle_nodes"] = idx.size();
  }
  emit(io.out, report);
  return 0;
}

int cmd_check(const Options& o, Io io) {
  SampledFunction f = load(o.in_path, io.in);
  if (o.resample) f = resample_uniform(f, o.resample);
  const Curvature k(o.k);
  const ResidualSeries series = residual_series(f, k, kDefaultGridTolerance, o.order);
  const double tol = o.tol > 0 ? o.tol : default_tolerance(series);
  const Verdict verdict = classify(series, tol);
  json report = verdict_json(verdict);
  report["k"] = o.k;
  report["stencil_order"] = series.stencil.order;
  report["step"] = series.stencil.step;
  json witness = nullptr;
  try {
    const WitnessSeries w = witness_series(f, k);
    const double wtol = default_witness_tolerance(w, tol);
    const auto [lo, hi] = std::minmax_element(w.ws.begin(), w.ws.end());
    witness = {{"kind", to_string(w.kind)},
               {"monotone", witness_monotone(w, wtol)},
               {"tol", wtol},
               {"min", *lo},
               {"max", *hi}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::domain) throw;
    io.err << "note: witness unavailable: " << e.what() << '\n';
  }
  report["witness"] = witness;
  emit(io.out, report);
  return 0;
}

int cmd_audit(const Options& o, Io io) {
  const SampledFunction f = load(o.in_path, io.in);
  const AuditReport r = equivalence_audit(f, Curvature(o.k), o.pairs, o.seed, o.tol);
  json mismatches = json::array();
  for (const ChordMismatch& m : r.mismatches) mismatches.push_back({{"t1", m.t1}, {"t2", m.t2}, {"gap", m.gap}});
  emit(io.out, {{"k", o.k},
                {"seed", o.seed},
                {"verdict", verdict_json(r.verdict)},
                {"tol", r.tol},
                {"chords_tested", r.chords_tested},
                {"agreements", r.agreements},
                {"inconclusive", r.inconclusive},
                {"relations", {{"below", r.below}, {"above", r.above}, {"equal", r.equal}, {"mixed", r.mixed}}},
                {"mismatches", mismatches}});
  return 0;
}

int cmd_estimate(const Options& o, Io io) {
  const SampledFunction f = load(o.in_path, io.in);
  const Side side = o.side == "upper" ? Side::upper : Side::lower;
  const ThresholdResult r = estimate_threshold(f, side, o.k_min, o.k_max, o.k_tol);
  emit(io.out, {{"side", to_string(r.side)},
                {"k_star", r.estimate()},
                {"k_lo", r.k_lo},
                {"k_hi", r.k_hi},
                {"k_tol", o.k_tol},
                {"iterations", r.iterations}});
  return 0;
}

int cmd_figure(const Options& o, Io io) {
  FigureConfig config;
  if (!o.ks.empty()) config.ks = o.ks;
  config.t1 = o.t1;
  config.t2 = o.t2;
  config.g1 = o.g1;
  config.g2 = o.g2;
  config.n = o.n;
  const FigureData data = figure_data(config);
  for (const std::string& w : data.warnings) io.err << "warning: " << w << '\n';
  store(o.out_path, render_svg(data), io.out);
  if (!o.csv_path.empty()) store(o.csv_path, render_csv(data), io.out);
  json drawn = json::array();
  for (const FigureCurve& c : data.curves) drawn.push_back(c.k);
  if (o.out_path != "-") emit(io.out, {{"svg", o.out_path}, {"curves", drawn}, {"skipped", data.warnings.size()}});
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Model-space comparison functions and Alexandrov-type curvature checks"};
  app.name("curvcmp");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  const Io io{out, err, in};

  auto finite = CLI::Validator(
      [](std::string& s) {
        double x = 0;
        try {
          x = std::stod(s);
        } catch (...) {
          return std::string("not a number: ") + s;
        }
        return std::isfinite(x) ? std::string() : std::string("must be finite");
      },
      "FINITE");

  auto sub = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  {
    CLI::App* s = sub("fit", "fit g_k to boundary values g(t1)=g1, g(t2)=g2 (JSON)", [&] { return cmd_fit(o, io); });
    s->add_option("--k", o.k, "curvature")->required()->check(finite);
    s->add_option("--t1", o.t1, "left endpoint")->required()->check(finite);
    s->add_option("--t2", o.t2, "right endpoint")->required()->check(finite);
    s->add_option("--g1", o.g1, "value at t1")->required()->check(finite);
    s->add_option("--g2", o.g2, "value at t2")->required()->check(finite);
  }
  {
    CLI::App* s = sub("eval", "evaluate g_k for parameters (u, v) (CSV)", [&] { return cmd_eval(o, io); });
    s->add_option("--k", o.k)->required()->check(finite);
    s->add_option("--u", o.u)->required()->check(finite);
    s->add_option("--v", o.v)->required()->check(finite);
    auto* t = s->add_option("--t", o.ts, "comma-separated times")->delimiter(',');
    auto* from = s->add_option("--from", o.from)->check(finite);
    auto* to = s->add_option("--to", o.to)->check(finite);
    auto* n = s->add_option("--n", o.n)->check(CLI::PositiveNumber);
    t->excludes(from)->excludes(to)->excludes(n);
    from->needs(to)->needs(n);
    to->needs(from);
    s->add_option("--out", o.out_path, "output CSV (default stdout)");
    s->callback([&, t, from] {
      if (t->count() == 0 && from->count() == 0) throw CLI::ValidationError("eval needs --t or --from/--to/--n");
      action = [&] { return cmd_eval(o, io); };
    });
  }
  {
    CLI::App* s = sub("synth", "sample g_k on a uniform grid, optionally bumped (CSV)", {});
    s->add_option("--k", o.k)->required()->check(finite);
    s->add_option("--u", o.u)->required()->check(finite);
    s->add_option("--v", o.v)->required()->check(finite);
    s->add_option("--from", o.from)->required()->check(finite);
    s->add_option("--to", o.to)->required()->check(finite);
    s->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    auto* amp = s->add_option("--amp", o.amp, "bump amplitude (negative dents)")->check(finite);
    auto* center = s->add_option("--center", o.center)->check(finite);
    auto* width = s->add_option("--width", o.width)->check(finite);
    amp->needs(center)->needs(width);
    s->add_option("--out", o.out_path, "output CSV (default stdout)");
    s->callback([&, amp] {
      action = [&, perturbed = amp->count() > 0] { return cmd_synth(o, io, perturbed); };
    });
  }
  {
    CLI::App* s = sub("validate", "distance-like check via nonexpanding + endpoint bound; --oracle adds the pairwise check",
                      [&] { return cmd_validate(o, io); });
    s->add_option("--in", o.in_path, "input CSV (default stdin)");
    s->add_option("--tol", o.tol, "slope tolerance")->check(CLI::PositiveNumber);
    s->add_flag("--oracle", o.oracle, "run the pairwise oracle (capped at 1e5 pairs)");
  }
  {
    CLI::App* s = sub("check", "classify the differential inequality at curvature k",
                      [&] { return cmd_check(o, io); });
    s->add_option("--in", o.in_path, "input CSV (default stdin)");
    s->add_option("--k", o.k)->required()->check(finite);
    s->add_option("--tol", o.tol, "classification tolerance (default: grid-based)")->check(CLI::PositiveNumber);
    s->add_option("--order", o.order, "central stencil order")->check(CLI::IsMember({2, 4, 6}));
    s->add_option("--resample", o.resample, "resample to N uniform nodes first")->check(CLI::Range(3, 100000000));
  }
  {
    CLI::App* s = sub("audit", "cross-check the verdict against seeded chord comparisons",
                      [&] { return cmd_audit(o, io); });
    s->add_option("--in", o.in_path, "input CSV (default stdin)");
    s->add_option("--k", o.k)->required()->check(finite);
    s->add_option("--pairs", o.pairs, "number of chords")->check(CLI::PositiveNumber);
    s->add_option("--seed", o.seed, "generator seed");
    s->add_option("--tol", o.tol, "classification tolerance (default: grid-based)")->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = sub("estimate", "bisect for the curvature threshold of one inequality side",
                      [&] { return cmd_estimate(o, io); });
    s->add_option("--in", o.in_path, "input CSV (default stdin)");
    s->add_option("--side", o.side)->required()->check(CLI::IsMember({"upper", "lower"}));
    s->add_option("--kmin", o.k_min)->required()->check(finite);
    s->add_option("--kmax", o.k_max)->required()->check(finite);
    s->add_option("--ktol", o.k_tol)->check(CLI::PositiveNumber);
  }
  {
    CLI::App* s = sub("figure", "curvature-scale SVG of fitted g_k", [&] { return cmd_figure(o, io); });
    s->add_option("--out", o.out_path, "SVG path")->required();
    s->add_option("--csv", o.csv_path, "companion CSV path");
    s->add_option("--ks", o.ks, "comma-separated curvatures")->delimiter(',')->check(finite);
    s->add_option("--t1", o.t1)->check(finite);
    s->add_option("--t2", o.t2)->check(finite);
    s->add_option("--g1", o.g1)->check(finite);
    s->add_option("--g2", o.g2)->check(finite);
    s->add_option("--n", o.n, "grid points")->check(CLI::Range(2, 10000000));
  }
  // Figure defaults differ from the plain option defaults above.
  o.g1 = 0.6;
  o.g2 = 0.8;
  o.n = 1001;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err, in);
}

}  // namespace curvcmp::cli

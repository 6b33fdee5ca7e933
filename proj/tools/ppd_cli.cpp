// Command-line front end: single runs, step-size sweeps, method comparisons,
// stationarity classification, and benchmark info dumps.

#include "ppd/analysis.hpp"
#include "ppd/experiments.hpp"
#include "ppd/io.hpp"
#include "ppd/prox.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace ppd;

namespace {

Vec parse_point(const std::string& s) {
  std::vector<double> vals;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  Vec x(static_cast<int>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) x[static_cast<int>(i)] = vals[i];
  return x;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i)
    g.push_back(lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1)));
  return g;
}

// "lo:hi:n" log-spaced, or an explicit comma list.
std::vector<double> parse_eta_grid(const std::string& s) {
  if (s.find(':') != std::string::npos) {
    double lo, hi;
    int n;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1 ||
        lo <= 0 || hi < lo)
      throw CLI::ValidationError("--eta-grid", "expected lo:hi:n");
    return log_grid(lo, hi, n);
  }
  std::vector<double> g;
  for (double v : parse_point(s)) g.push_back(v);
  return g;
}

void write_trace_csv(const std::string& path, const RunReport& rep,
                     bool include_points) {
  io::Row header = {"iter", "phi", "gm_norm", "perturbed_flag"};
  int dim = 0;
  if (include_points && !rep.trace.empty() && rep.trace.front().point)
    dim = static_cast<int>(rep.trace.front().point->size());
  for (int i = 1; i <= dim; ++i) header.push_back("x_" + std::to_string(i));
  std::vector<io::Row> rows;
  for (const auto& rec : rep.trace) {
    io::Row row = {std::to_string(rec.iter), io::fmt_double(rec.phi),
                   io::fmt_double(rec.gm_norm),
                   rec.perturbed_window ? "1" : "0"};
    if (dim > 0 && rec.point)
      for (int i = 0; i < rec.point->size(); ++i)
        row.push_back(io::fmt_double((*rec.point)[i]));
    rows.push_back(std::move(row));
  }
  io::write_csv(path, header, rows);
}

struct CommonOpts {
  std::string problem = "octopus";
  std::string method = "ppd";
  double eta = 0;  // 0: derive from c/ell
  double eps = 0.1;
  double c = 3;
  double delta = 0.1;
  double lambda = 0.01;
  int dim = 2;
  std::size_t max_iter = 1000;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  double radius = 0.1;
  bool certify = false;
  std::string x0;
  bool trace_points = false;  // store x_1..x_d columns (dim <= 32)
};

int cmd_run(const CommonOpts& o) {
  if (o.method != "ppd" && o.method != "pd" && o.method != "gd" &&
      o.method != "pgd")
    throw CLI::ValidationError("--method", "unknown method " + o.method);
  if (o.problem != "octopus" && o.problem != "bump")
    throw CLI::ValidationError("--problem", "unknown problem " + o.problem);
  auto t_start = std::chrono::steady_clock::now();
  fs::create_directories(o.out_dir);
  RunReport rep;
  double final_phi_full = 0;
  std::string params_note;
  CompositeObjective classify_obj;
  double classify_eta = 0, classify_gamma = 0;

  if (o.problem == "octopus") {
    OctopusRunConfig cfg;
    cfg.dim = o.dim;
    cfg.method = o.method;
    cfg.lambda = o.lambda;
    cfg.eps = o.eps;
    cfg.c = o.c;
    cfg.delta = o.delta;
    cfg.max_iter = o.max_iter;
    if (o.eta > 0) cfg.eta = o.eta;
    cfg.perturbation_radius = o.radius;
    cfg.certify_return = o.certify;
    cfg.seed = o.seed;
    if (!o.x0.empty()) cfg.x0 = parse_point(o.x0);
    OctopusRunOutcome out = run_octopus_experiment(cfg);
    rep = std::move(out.report);
    final_phi_full = rep.final_phi;
    classify_obj = out.objective;
    classify_eta = out.params.eta;
    classify_gamma = canonical_octopus(o.dim).gamma;
    params_note = io::summary_record(
        {{"eta", io::fmt_double(out.params.eta)},
         {"chi", io::fmt_double(out.params.chi)},
         {"g_thres", io::fmt_double(out.params.g_thres)},
         {"phi_thres", io::fmt_double(out.params.phi_thres)},
         {"t_thres", std::to_string(out.params.t_thres)},
         {"composite_min", io::fmt_double(out.composite_min_value)},
         {"best_phi", io::fmt_double(out.best_phi)}});
    for (const auto& w : out.params.warnings)
      std::cerr << "warning: " << w << "\n";
  } else if (o.problem == "bump") {
    GaussianBumpProblem prob = make_gaussian_bump(BumpMode::huber_in_f);
    CompositeObjective obj{prob.smooth, o.lambda};
    Vec x0(2);
    x0 << 0.3, 0.01;
    if (!o.x0.empty()) x0 = parse_point(o.x0);
    double eta = o.eta > 0 ? o.eta : o.c / prob.smooth.grad_lipschitz;
    RunOptions opt;
    opt.max_iter = o.max_iter;
    Rng rng(o.seed);
    if (o.method == "ppd") {
      ProblemConstants pc;
      pc.ell = prob.smooth.grad_lipschitz;
      pc.rho = prob.smooth.hess_lipschitz;
      pc.eps = o.eps;
      pc.c = o.c;
      pc.delta = o.delta;
      pc.delta_phi = std::abs(eval_phi(obj, x0)) + 1;
      pc.dim = 2;
      PpdParams params = make_ppd_params(pc);
      if (o.eta > 0) params.eta = o.eta;
      opt.certify_return = o.certify;
      opt.perturbation_radius = o.radius;
      rep = run_ppd(obj, x0, params, opt, rng);
    } else {
      FirstOrderMethod m = o.method == "gd"   ? FirstOrderMethod::gd
                           : o.method == "pd" ? FirstOrderMethod::pd
                                              : FirstOrderMethod::pgd;
      std::optional<PerturbationSchedule> sched;
      if (o.method == "pgd") sched = PerturbationSchedule{o.radius, 1e-4, 100};
      rep = run_first_order(obj, x0, m, eta, opt, sched, rng);
    }
    final_phi_full = rep.final_phi;
    classify_obj = obj;
    classify_eta = eta;
  }

  write_trace_csv(o.out_dir + "/trace.csv", rep, o.trace_points);
  std::string verdict = "unavailable";
  if (rep.termination != Termination::aborted_nonfinite) {
    StationarityVerdict v =
        classify_point(classify_obj, rep.final_point, o.eps,
                       classify_obj.smooth.hess_lipschitz, classify_eta,
                       classify_gamma);
    verdict = to_string(v.verdict);
  }
  std::string final_x;
  if (rep.final_point.size() <= 32)
    for (int i = 0; i < rep.final_point.size(); ++i)
      final_x += (i ? "," : "") + io::fmt_double(rep.final_point[i]);
  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t_start)
                     .count();
  std::string summary = io::summary_record(
      {{"problem", o.problem},
       {"method", o.method},
       {"dim", std::to_string(o.dim)},
       {"seed", std::to_string(o.seed)},
       {"iterations", std::to_string(rep.iterations)},
       {"termination", to_string(rep.termination)},
       {"final_phi", io::fmt_double(final_phi_full)},
       {"final_x", final_x},
       {"verdict", verdict},
       {"perturbations", std::to_string(rep.perturbations.size())},
       {"wall_ms", std::to_string(wall_ms)}});
  if (!params_note.empty()) summary += " " + params_note;
  std::ofstream(o.out_dir + "/summary.txt", std::ios::binary) << summary << "\n";
  std::cout << summary << "\n";
  // A dead run still flushes its partial trace, but reports failure.
  return rep.termination == Termination::aborted_nonfinite ? 3 : 0;
}

int cmd_sweep(const CommonOpts& o, const std::string& grid_spec,
              std::size_t trials) {
  fs::create_directories(o.out_dir);
  std::vector<double> etas = parse_eta_grid(grid_spec);
  BumpMinima minima = bump_minima();
  auto cells = sweep_gaussian_bump(etas, trials, o.seed, o.max_iter, minima);

  std::vector<io::Row> rows;
  for (const auto& c : cells)
    rows.push_back({io::fmt_double(c.eta), c.method,
                    io::fmt_double(c.success_rate), std::to_string(c.trials)});
  io::write_csv(o.out_dir + "/sweep.csv",
                {"eta", "method", "success_rate", "trials"}, rows);

  std::vector<io::Series> series(2);
  series[0].name = "gd";
  series[1].name = "prox";
  for (const auto& c : cells) {
    auto& s = series[c.method == "gd" ? 0 : 1];
    s.x.push_back(c.eta);
    s.y.push_back(c.success_rate);
  }
  io::write_svg_plot(o.out_dir + "/sweep.svg",
                     "success rate vs step size (gaussian bump)", "eta",
                     "success rate", series, /*log_x=*/true);
  std::cout << io::summary_record(
                   {{"cells", std::to_string(cells.size())},
                    {"trials", std::to_string(trials)},
                    {"min_value", io::fmt_double(minima.value)},
                    {"min_y", io::fmt_double(minima.minimum_pos[1])}})
            << "\n";
  return 0;
}

int cmd_compare(const CommonOpts& o, const std::string& dims_spec) {
  fs::create_directories(o.out_dir);
  std::vector<int> dims;
  for (double v : parse_point(dims_spec)) dims.push_back(static_cast<int>(v));
  const std::vector<std::string> methods = {"ppd", "pd", "gd", "pgd"};

  struct Cell {
    int dim;
    std::string method;
    RunReport rep;
  };
  std::vector<Cell> cells(dims.size() * methods.size());
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (long di = 0; di < static_cast<long>(dims.size()); ++di)
    for (long mi = 0; mi < static_cast<long>(methods.size()); ++mi) {
      OctopusRunConfig cfg;
      cfg.dim = dims[di];
      cfg.method = methods[mi];
      cfg.lambda = o.lambda;
      cfg.eps = o.eps;
      cfg.c = o.c;
      cfg.delta = o.delta;
      cfg.max_iter = o.max_iter;
      cfg.perturbation_radius = o.radius;
      cfg.certify_return = o.certify;
      cfg.seed = mix_seed(o.seed, {static_cast<std::uint64_t>(dims[di]),
                                   static_cast<std::uint64_t>(mi)});
      OctopusRunOutcome out = run_octopus_experiment(cfg);
      cells[di * methods.size() + mi] = {dims[di], methods[mi],
                                         std::move(out.report)};
    }

  for (std::size_t di = 0; di < dims.size(); ++di) {
    std::vector<io::Series> series;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      const auto& cell = cells[di * methods.size() + mi];
      std::string base = o.out_dir + "/compare_d" + std::to_string(cell.dim) +
                         "_" + cell.method;
      std::vector<io::Row> rows;
      io::Series s;
      s.name = cell.method;
      for (const auto& rec : cell.rep.trace) {
        rows.push_back({std::to_string(rec.iter), io::fmt_double(rec.phi),
                        io::fmt_double(rec.gm_norm),
                        rec.perturbed_window ? "1" : "0"});
        s.x.push_back(static_cast<double>(rec.iter));
        s.y.push_back(rec.phi);
      }
      io::write_csv(base + ".csv", {"iter", "phi", "gm_norm", "perturbed_flag"},
                    rows);
      series.push_back(std::move(s));
    }
    io::write_svg_plot(
        o.out_dir + "/compare_d" + std::to_string(dims[di]) + ".svg",
        "objective vs iteration, octopus d=" + std::to_string(dims[di]),
        "iteration", "phi", series);
  }
  std::cout << io::summary_record({{"dims", dims_spec},
                                   {"methods", "ppd,pd,gd,pgd"},
                                   {"eps", io::fmt_double(o.eps)},
                                   {"seed", std::to_string(o.seed)}})
            << "\n";
  return 0;
}

int cmd_classify(const CommonOpts& o, const std::string& point_spec,
                 double gamma) {
  Vec x = parse_point(point_spec);
  CompositeObjective obj;
  double rho = 0, eta = o.eta;
  if (o.problem == "octopus") {
    OctopusParams op = canonical_octopus(static_cast<int>(x.size()));
    obj = {make_octopus(op), o.lambda};
    if (gamma <= 0) gamma = op.gamma;
  } else {
    obj = {make_gaussian_bump(BumpMode::huber_in_f).smooth, o.lambda};
  }
  rho = obj.smooth.hess_lipschitz;
  if (eta <= 0) eta = o.c / obj.smooth.grad_lipschitz;
  StationarityVerdict v = classify_point(obj, x, o.eps, rho, eta, gamma);
  std::cout << io::summary_record(
                   {{"gm_norm", io::fmt_double(v.gm_norm)},
                    {"min_eig", io::fmt_double(v.min_eig)},
                    {"eps", io::fmt_double(v.eps)},
                    {"rho", io::fmt_double(v.rho)},
                    {"sosp_curvature_floor", io::fmt_double(-std::sqrt(rho * o.eps))},
                    {"verdict", to_string(v.verdict)}})
            << "\n";
  return 0;
}

int cmd_bench_info(const CommonOpts& o) {
  OctopusParams op = canonical_octopus(o.dim);
  SmoothObjective obj = make_octopus(op);
  OctopusCatalog cat = octopus_catalog(op);
  LambdaBoundInputs lbi;
  lbi.eta = o.eta > 0 ? o.eta : o.c / obj.grad_lipschitz;
  lbi.ell = obj.grad_lipschitz;
  lbi.rho = obj.hess_lipschitz;
  lbi.gamma = op.gamma;
  lbi.delta = o.delta;
  lbi.dim = o.dim;
  lbi.lambda = o.lambda;
  LambdaBoundDiagnostic lb = lambda_bound_diagnostic(lbi);
  std::cout << io::summary_record(
                   {{"problem", "octopus"},
                    {"dim", std::to_string(o.dim)},
                    {"sharpness", io::fmt_double(op.sharpness)},
                    {"gamma", io::fmt_double(op.gamma)},
                    {"tau", io::fmt_double(op.tau)},
                    {"nu", io::fmt_double(gluing_balance(op))},
                    {"ell", io::fmt_double(obj.grad_lipschitz)},
                    {"rho", io::fmt_double(obj.hess_lipschitz)},
                    {"min_value", io::fmt_double(cat.min_value)},
                    {"saddle_min_eig", io::fmt_double(cat.saddle_min_eig)},
                    {"composite_min_value",
                     io::fmt_double(octopus_composite_min_value(op, o.lambda))},
                    {"lambda", io::fmt_double(o.lambda)},
                    {"lambda_bound1", io::fmt_double(lb.bound1)},
                    {"lambda_bound2", io::fmt_double(lb.bound2)},
                    {"lambda_ok", lb.lambda_ok ? "true" : "false"}})
            << "\n";
  for (std::size_t i = 0; i < cat.saddles.size(); ++i) {
    std::cout << "saddle_" << i << " =";
    for (int j = 0; j < cat.saddles[i].size(); ++j)
      std::cout << " " << io::fmt_double(cat.saddles[i][j]);
    std::cout << "\n";
  }
  std::cout << "global_min =";
  for (int j = 0; j < cat.global_min.size(); ++j)
    std::cout << " " << io::fmt_double(cat.global_min[j]);
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proximal descent benchmark driver"};
  app.require_subcommand(1);
  app.set_config("--config");

  CommonOpts o;
  std::string grid_spec = "1e-3:1:20";
  std::string dims_spec = "2,5,10,20";
  std::string point_spec;
  std::size_t trials = 200;
  double gamma = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", o.problem, "octopus | bump");
    sub->add_option("--eta", o.eta, "step size; 0 derives c/ell");
    sub->add_option("--eps", o.eps, "accuracy target");
    sub->add_option("--c", o.c, "step/threshold scale");
    sub->add_option("--delta", o.delta, "failure probability");
    sub->add_option("--lambda", o.lambda, "l1 weight");
    sub->add_option("--dim", o.dim, "problem dimension");
    sub->add_option("--max-iter", o.max_iter, "iteration budget");
    sub->add_option("--seed", o.seed, "rng seed");
    sub->add_option("--out-dir", o.out_dir, "output directory");
    sub->add_option("--radius", o.radius, "perturbation radius");
    sub->add_flag("--certify", o.certify,
                  "enable the certify-and-return branch");
    sub->add_flag("--trace-points", o.trace_points,
                  "include x_1..x_d columns in the trace CSV (dim <= 32)");
  };

  CLI::App* run = app.add_subcommand("run", "single optimizer run");
  add_common(run);
  run->add_option("--method", o.method, "ppd | pd | gd | pgd");
  run->add_option("--x0", o.x0, "comma-separated start point");

  CLI::App* sweep =
      app.add_subcommand("sweep", "gd vs prox success rates on the bump");
  add_common(sweep);
  sweep->add_option("--eta-grid", grid_spec, "lo:hi:n (log) or comma list");
  sweep->add_option("--trials", trials, "trials per cell");

  CLI::App* compare =
      app.add_subcommand("compare", "all methods on the octopus family");
  add_common(compare);
  compare->add_option("--dims", dims_spec, "comma-separated dimensions");

  CLI::App* classify =
      app.add_subcommand("classify", "stationarity verdict for a point");
  add_common(classify);
  classify->add_option("--point", point_spec, "comma-separated coordinates")
      ->required();
  classify->add_option("--gamma", gamma, "saddle-region curvature margin");

  CLI::App* info = app.add_subcommand("bench-info", "benchmark catalog");
  add_common(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(o);
    if (sweep->parsed()) return cmd_sweep(o, grid_spec, trials);
    if (compare->parsed()) return cmd_compare(o, dims_spec);
    if (classify->parsed()) return cmd_classify(o, point_spec, gamma);
    if (info->parsed()) return cmd_bench_info(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

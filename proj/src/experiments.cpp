#include "ppd/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace ppd {

std::uint64_t mix_seed(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = 14695981039346656037ull ^ seed;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (std::uint64_t c : coords) mix(c);
  return h;
}

OctopusRunOutcome run_octopus_experiment(const OctopusRunConfig& cfg) {
  OctopusParams op = canonical_octopus(cfg.dim);
  OctopusRunOutcome out;
  out.objective = {make_octopus(op), cfg.lambda};
  out.composite_min_value = octopus_composite_min_value(op, cfg.lambda);

  Vec x0 = cfg.x0.value_or([&] {
    Vec v = Vec::Zero(cfg.dim);
    v[0] = 0.3;
    return v;
  }());

  ProblemConstants pc;
  pc.ell = out.objective.smooth.grad_lipschitz;
  pc.rho = out.objective.smooth.hess_lipschitz;
  pc.eps = cfg.eps;
  pc.c = cfg.c;
  pc.delta = cfg.delta;
  pc.delta_phi = eval_phi(out.objective, x0) - out.composite_min_value;
  pc.dim = cfg.dim;
  out.params = make_ppd_params(pc);
  if (cfg.eta) out.params.eta = *cfg.eta;

  RunOptions opt;
  opt.max_iter = cfg.max_iter;
  opt.certify_return = cfg.certify_return;
  opt.perturbation_radius = cfg.perturbation_radius.value_or(0.1);
  opt.trace_stride = cfg.trace_stride;

  Rng rng(cfg.seed);
  if (cfg.method == "ppd") {
    out.report = run_ppd(out.objective, x0, out.params, opt, rng);
  } else {
    FirstOrderMethod m;
    std::optional<PerturbationSchedule> sched;
    if (cfg.method == "pd") {
      m = FirstOrderMethod::pd;
    } else if (cfg.method == "gd") {
      m = FirstOrderMethod::gd;
    } else if (cfg.method == "pgd") {
      m = FirstOrderMethod::pgd;
      sched = PerturbationSchedule{*opt.perturbation_radius,
                                   out.params.g_thres, out.params.t_thres};
    } else {
      throw std::invalid_argument("unknown method: " + cfg.method);
    }
    out.report = run_first_order(out.objective, x0, m, out.params.eta, opt,
                                 sched, rng);
  }

  out.best_phi = eval_phi(out.objective, x0);
  for (const auto& rec : out.report.trace)
    out.best_phi = std::min(out.best_phi, rec.phi);
  return out;
}

bool bump_trial_success(double eta, const std::string& method,
                        std::uint64_t seed, std::size_t max_iter,
                        const BumpMinima& minima) {
  GaussianBumpProblem prob = make_gaussian_bump(
      method == "gd" ? BumpMode::huber_in_f : BumpMode::huber_as_g);
  CompositeObjective obj{prob.smooth, 0.0};

  Rng rng(seed);
  Vec x0(2);
  x0 << 0.3, 0.01;
  Vec x = x0 + sample_ball(rng, 2, 0.1 * x0.norm());

  RunOptions opt;
  opt.max_iter = max_iter;
  opt.trace_stride = max_iter;  // no trace needed, keep memory flat
  FirstOrderMethod m = FirstOrderMethod::gd;
  if (method != "gd") {
    m = FirstOrderMethod::pd;
    HuberFn hub = prob.huber;
    double w = prob.huber_weight;
    opt.custom_prox = [hub, w](const Vec& y, double step) {
      return hub.prox(y, step * w);
    };
  }
  RunReport rep = run_first_order(obj, x, m, eta, opt, std::nullopt, rng);
  if (rep.termination == Termination::aborted_nonfinite) return false;
  if (rep.final_point.norm() > 1e6) return false;
  double d = std::min((rep.final_point - minima.minimum_pos).norm(),
                      (rep.final_point - minima.minimum_neg).norm());
  return d < 0.2;
}

std::vector<SweepCellResult> sweep_gaussian_bump(
    const std::vector<double>& etas, std::size_t trials, std::uint64_t seed,
    std::size_t max_iter, const BumpMinima& minima) {
  const std::vector<std::string> methods = {"gd", "prox"};
  std::vector<SweepCellResult> out(etas.size() * methods.size());
  const long cells = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long cell = 0; cell < cells; ++cell) {
    std::size_t mi = cell / etas.size(), ei = cell % etas.size();
    std::size_t ok = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      // Seeds are paired across methods: same cell trial, same start draw.
      std::uint64_t s = mix_seed(seed, {ei, t});
      if (bump_trial_success(etas[ei], methods[mi], s, max_iter, minima)) ++ok;
    }
    out[cell] = {etas[ei], methods[mi],
                 trials ? double(ok) / double(trials) : 0.0, trials};
  }
  return out;
}

}  // namespace ppd

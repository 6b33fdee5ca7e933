#include "ppd/optimizer.hpp"

#include "ppd/prox.hpp"

#include <cmath>

namespace ppd {

Vec sample_ball(Rng& rng, int dim, double radius) {
  if (dim < 1) throw std::invalid_argument("sample_ball: dim < 1");
  if (radius < 0) throw std::invalid_argument("sample_ball: radius < 0");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Vec dir(dim);
  double n = 0;
  do {
    for (int i = 0; i < dim; ++i) dir[i] = gauss(rng);
    n = dir.norm();
  } while (n == 0);
  double scale = radius * std::pow(unif(rng), 1.0 / dim) / n;
  return scale * dir;
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::ppd_certified: return "ppd_certified";
    case Termination::max_iter: return "max_iter";
    case Termination::gm_below_tol: return "gm_below_tol";
    case Termination::aborted_nonfinite: return "aborted_nonfinite";
  }
  return "unknown";
}

namespace {

Vec sign0(const Vec& x) {
  return x.unaryExpr(
      [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); });
}

void record_trace(std::vector<TraceRecord>& trace, const RunOptions& opt,
                  int dim, std::size_t t, double phi, double gm, bool window,
                  bool force) {
  if (!force && opt.trace_stride > 1 && t % opt.trace_stride != 0) return;
  TraceRecord rec;
  rec.iter = t;
  rec.phi = phi;
  rec.gm_norm = gm;
  rec.perturbed_window = window;
  trace.push_back(std::move(rec));
}

void maybe_store_point(TraceRecord& rec, const RunOptions& opt, const Vec& x) {
  if (x.size() <= opt.point_storage_dim) rec.point = x;
}

RunReport abort_report(const EvaluationError& e, std::size_t t,
                       std::vector<TraceRecord> trace,
                       std::vector<PerturbationEvent> perts) {
  RunReport rep;
  rep.final_point = e.point;
  rep.final_phi = std::nan("");
  rep.iterations = t;
  rep.termination = Termination::aborted_nonfinite;
  rep.message = e.what();
  rep.trace = std::move(trace);
  rep.perturbations = std::move(perts);
  return rep;
}

}  // namespace

RunReport run_ppd(const CompositeObjective& obj, const Vec& x0,
                  const PpdParams& params, const RunOptions& opt, Rng& rng) {
  require_finite(x0, "run_ppd: non-finite x0");
  const int dim = static_cast<int>(x0.size());
  const double eta = params.eta;
  const double r = opt.perturbation_radius.value_or(params.r);
  const std::size_t max_iter =
      opt.max_iter ? opt.max_iter : default_max_iter(params);
  const long long t_thres = static_cast<long long>(params.t_thres);

  RunReport rep;
  long long t_noise = -t_thres - 1;
  Vec x = x0;
  Vec anchor;
  double phi_anchor = 0;
  bool has_anchor = false;
  Vec best_point = x0;
  double best_phi = eval_phi(obj, x0);

  std::size_t t = 0;
  try {
    for (; t < max_iter; ++t) {
      ProxStepResult step = prox_step(obj, x, eta);
      double gm = step.gm_norm;
      bool perturbed_now = false;

      if (gm < params.g_thres &&
          static_cast<long long>(t) - t_noise > t_thres) {
        anchor = x;
        phi_anchor = eval_phi(obj, x);
        has_anchor = true;
        t_noise = static_cast<long long>(t);
        Vec noise = sample_ball(rng, dim, r);
        rep.perturbations.push_back({t, x, noise});
        x += noise;
        step = prox_step(obj, x, eta);
        gm = step.gm_norm;
        perturbed_now = true;
      }

      double phi = eval_phi(obj, x);
      if (phi < best_phi) {
        best_phi = phi;
        best_point = x;
      }
      bool window = t_noise >= 0 &&
                    static_cast<long long>(t) - t_noise <= t_thres;
      record_trace(rep.trace, opt, dim, t, phi, gm, window, perturbed_now);
      if (!rep.trace.empty() && rep.trace.back().iter == t)
        maybe_store_point(rep.trace.back(), opt, x);

      if (opt.certify_return && has_anchor &&
          static_cast<long long>(t) - t_noise == t_thres &&
          phi - phi_anchor > -params.phi_thres) {
        rep.final_point = anchor;
        rep.final_phi = phi_anchor;
        rep.iterations = t;
        rep.termination = Termination::ppd_certified;
        return rep;
      }

      if (opt.gm_tol > 0 && gm < opt.gm_tol) {
        rep.final_point = x;
        rep.final_phi = phi;
        rep.iterations = t;
        rep.termination = Termination::gm_below_tol;
        return rep;
      }

      x = step.next;
    }
    // Budget exhausted: hand back the best iterate seen, not the last one.
    double phi_last = eval_phi(obj, x);
    if (phi_last < best_phi) {
      best_phi = phi_last;
      best_point = x;
    }
    rep.final_point = best_point;
    rep.final_phi = best_phi;
  } catch (const EvaluationError& e) {
    return abort_report(e, t, std::move(rep.trace), std::move(rep.perturbations));
  }
  rep.iterations = max_iter;
  rep.termination = Termination::max_iter;
  return rep;
}

RunReport run_first_order(const CompositeObjective& obj, const Vec& x0,
                          FirstOrderMethod method, double eta,
                          const RunOptions& opt,
                          const std::optional<PerturbationSchedule>& sched,
                          Rng& rng) {
  require_finite(x0, "run_first_order: non-finite x0");
  if (eta <= 0) throw std::invalid_argument("run_first_order: eta <= 0");
  const int dim = static_cast<int>(x0.size());
  const std::size_t max_iter = opt.max_iter ? opt.max_iter : 1000;
  const long long cooldown =
      sched ? static_cast<long long>(sched->cooldown) : 0;

  RunReport rep;
  Vec x = x0;
  long long last_pert = -cooldown - 1;

  auto take_step = [&](const Vec& pt, Vec& next, double& gm) {
    if (method == FirstOrderMethod::pd) {
      Vec pre = pt - eta * eval_grad_f(obj, pt);
      next = opt.custom_prox ? opt.custom_prox(pre, eta)
                             : soft_threshold(pre, eta * obj.lambda);
    } else {
      Vec sub = eval_grad_f(obj, pt) + obj.lambda * sign0(pt);
      next = pt - eta * sub;
    }
    gm = (pt - next).norm();
  };

  std::size_t t = 0;
  try {
    for (; t < max_iter; ++t) {
      Vec next;
      double gm = 0;
      take_step(x, next, gm);
      bool perturbed_now = false;

      if (method == FirstOrderMethod::pgd && sched &&
          gm < sched->gm_threshold &&
          static_cast<long long>(t) - last_pert > cooldown) {
        Vec noise = sample_ball(rng, dim, sched->radius);
        rep.perturbations.push_back({t, x, noise});
        x += noise;
        last_pert = static_cast<long long>(t);
        take_step(x, next, gm);
        perturbed_now = true;
      }

      double phi = eval_phi(obj, x);
      bool window = last_pert >= 0 &&
                    static_cast<long long>(t) - last_pert <= cooldown;
      record_trace(rep.trace, opt, dim, t, phi, gm, window, perturbed_now);
      if (!rep.trace.empty() && rep.trace.back().iter == t)
        maybe_store_point(rep.trace.back(), opt, x);

      if (opt.gm_tol > 0 && gm < opt.gm_tol) {
        rep.final_point = x;
        rep.final_phi = phi;
        rep.iterations = t;
        rep.termination = Termination::gm_below_tol;
        return rep;
      }

      x = next;
      require_finite(x, "run_first_order: non-finite iterate");
    }
    rep.final_point = x;
    rep.final_phi = eval_phi(obj, x);
  } catch (const EvaluationError& e) {
    return abort_report(e, t, std::move(rep.trace), std::move(rep.perturbations));
  }
  rep.iterations = max_iter;
  rep.termination = Termination::max_iter;
  return rep;
}

}  // namespace ppd

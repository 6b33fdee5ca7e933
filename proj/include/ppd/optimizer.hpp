#pragma once

#include "ppd/core.hpp"
#include "ppd/params.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace ppd {

using Rng = std::mt19937_64;

// Uniform sample from the closed Euclidean ball of given radius.
Vec sample_ball(Rng& rng, int dim, double radius);

enum class Termination {
  ppd_certified,        // second-order certificate fired; anchor returned
  max_iter,             // iteration budget exhausted
  gm_below_tol,         // optional plain stopping rule hit
  aborted_nonfinite,    // iterate or value left the representable domain
};

const char* to_string(Termination t);

struct TraceRecord {
  std::size_t iter = 0;
  double phi = 0;
  double gm_norm = 0;
  bool perturbed_window = false;  // within t_thres of the last perturbation
  std::optional<Vec> point;       // stored when dim <= point_storage_dim
};

struct PerturbationEvent {
  std::size_t iter = 0;
  Vec anchor;  // iterate right before noise injection
  Vec noise;
};

struct RunReport {
  Vec final_point;
  double final_phi = 0;
  std::size_t iterations = 0;
  Termination termination = Termination::max_iter;
  std::string message;
  std::vector<TraceRecord> trace;
  std::vector<PerturbationEvent> perturbations;
};

struct RunOptions {
  std::size_t max_iter = 0;  // 0: use default_max_iter for PPD, 1000 otherwise
  double gm_tol = 0;         // >0 enables the gm_below_tol stop
  bool certify_return = true;   // PPD only: keep the certify-and-return branch
  std::optional<double> perturbation_radius;  // PPD: overrides params.r
  int point_storage_dim = 32;   // store trace points when dim <= this
  std::size_t trace_stride = 1; // record every k-th iteration (and events)
  // PD only: replace the l1 prox with a custom prox of (eta * g).
  std::function<Vec(const Vec&, double)> custom_prox;
};

// Perturbed proximal descent. Each iteration takes a proximal step; when the
// gradient mapping is small and no perturbation is in flight, uniform ball
// noise is injected, and if Phi has not dropped by phi_thres within t_thres
// iterations the pre-noise anchor is returned as certified.
RunReport run_ppd(const CompositeObjective& obj, const Vec& x0,
                  const PpdParams& params, const RunOptions& opt, Rng& rng);

enum class FirstOrderMethod {
  gd,   // subgradient step on f + lambda ||.||_1, sign(0) = 0
  pgd,  // gd plus scheduled ball perturbations
  pd,   // proximal descent, no perturbation
};

struct PerturbationSchedule {
  double radius = 0;
  double gm_threshold = 0;   // perturb when the gm proxy falls below this
  std::size_t cooldown = 0;  // minimum iterations between perturbations
};

RunReport run_first_order(const CompositeObjective& obj, const Vec& x0,
                          FirstOrderMethod method, double eta,
                          const RunOptions& opt,
                          const std::optional<PerturbationSchedule>& sched,
                          Rng& rng);

}  // namespace ppd

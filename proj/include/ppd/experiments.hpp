#pragma once

#include "ppd/gaussian_bump.hpp"
#include "ppd/octopus.hpp"
#include "ppd/optimizer.hpp"

#include <cstdint>

namespace ppd {

// Stable per-cell seed derivation (FNV-1a over the cell coordinates), so
// parallel experiment grids reproduce regardless of scheduling.
std::uint64_t mix_seed(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> coords);

// One octopus run in the experiment regime of the saddle-escape comparison:
// canonical instance, start on branch 1 near the origin saddle.
struct OctopusRunConfig {
  int dim = 2;
  std::string method = "ppd";  // ppd | pd | gd | pgd
  double lambda = 0.01;
  double eps = 0.1;
  double c = 3;
  double delta = 0.1;
  std::size_t max_iter = 1000;
  std::optional<double> eta;                  // overrides c/ell
  std::optional<double> perturbation_radius;  // default 0.1
  bool certify_return = false;  // full traces by default (see README)
  std::uint64_t seed = 0;
  std::optional<Vec> x0;
  std::size_t trace_stride = 1;
};

struct OctopusRunOutcome {
  RunReport report;
  PpdParams params;
  CompositeObjective objective;
  double composite_min_value = 0;
  double best_phi = 0;  // running minimum over the trace
};

OctopusRunOutcome run_octopus_experiment(const OctopusRunConfig& cfg);

// Success-rate sweep on the Gaussian bump: gradient descent versus proximal
// descent with the Huber term handled by its prox.
struct SweepCellResult {
  double eta = 0;
  std::string method;
  double success_rate = 0;
  std::size_t trials = 0;
};

std::vector<SweepCellResult> sweep_gaussian_bump(
    const std::vector<double>& etas, std::size_t trials, std::uint64_t seed,
    std::size_t max_iter, const BumpMinima& minima);

bool bump_trial_success(double eta, const std::string& method,
                        std::uint64_t seed, std::size_t max_iter,
                        const BumpMinima& minima);

}  // namespace ppd

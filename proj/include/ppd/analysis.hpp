#pragma once

#include "ppd/core.hpp"
#include "ppd/optimizer.hpp"

namespace ppd {

// Central differences, componentwise step h.
Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                double h = 1e-5);
// One Richardson extrapolation pass (steps h and h/2).
Vec fd_gradient_refined(const std::function<double(const Vec&)>& f,
                        const Vec& x, double h = 1e-5);
// Second-order central differences, symmetrized.
Mat fd_hessian(const std::function<double(const Vec&)>& f, const Vec& x,
               double h = 1e-4);

// Smallest eigenvalue of a symmetric matrix; rejects asymmetric input.
double min_eigenvalue(const Mat& h, double sym_tol = 1e-8);

// ell * gradient mapping at step 1/ell; vanishes exactly where the
// unit-scaled mapping does.
Vec scaled_gradient_mapping(const CompositeObjective& obj, const Vec& x,
                            double ell);

enum class Verdict { eps_sosp, first_order_only, saddle_region, non_stationary };

const char* to_string(Verdict v);

struct StationarityVerdict {
  double gm_norm = 0;
  double min_eig = 0;
  double eps = 0;
  double rho = 0;
  Verdict verdict = Verdict::non_stationary;
};

// Classifies x against the second-order stationarity target: gm_norm <= eps
// and min_eig >= -sqrt(rho eps). With gamma > 0, points whose curvature drops
// to -gamma or below are reported as saddle_region. Uses the objective's
// Hessian when present, finite differences otherwise.
StationarityVerdict classify_point(const CompositeObjective& obj, const Vec& x,
                                   double eps, double rho, double eta,
                                   double gamma = 0);

// Natural scales of the analysis: script-F (value), script-G (gradient),
// script-S (length), script-T (iterations), with kappa = ell/gamma.
struct ProofUnits {
  double kappa = 0;
  double log_term = 0;  // ln(d kappa / delta)
  double f_unit = 0;    // eta ell (gamma^3/rho^2) log^-3
  double g_unit = 0;    // sqrt(eta ell) (gamma^2/rho) log^-2
  double s_unit = 0;    // sqrt(eta ell) (gamma/rho) log^-1
  double t_unit = 0;    // log / (eta gamma)
};

ProofUnits proof_units(double eta, double ell, double rho, double gamma,
                       double delta, int dim);

// Heuristic check that the regularization weight is small enough for the
// saddle-escape analysis to apply. The bounds carry proof-internal constants
// with defaulted values; the verdict is advisory and never gates a run.
struct LambdaBoundInputs {
  double eta = 0;
  double ell = 0;
  double rho = 0;
  double gamma = 0;
  double delta = 0.1;
  int dim = 1;
  double lambda = 0;
  double hat_c = 0;   // 0: solve hat_c = 2 + ln(400 hat_c)
  double mu = 0;      // 0: delta / (2 sqrt(d))
  double theta = 1;
};

struct LambdaBoundDiagnostic {
  double hat_c = 0;
  double bound1 = 0;  // geometric-series bound; 0 when degenerate (eta ell >= 1)
  double bound2 = 0;  // projection bound with worst-case sign pattern
  bool lambda_ok = false;
};

LambdaBoundDiagnostic lambda_bound_diagnostic(const LambdaBoundInputs& in);

// Empirical Lipschitz ratios over sampled pairs; flags violations of the
// objective's declared constants.
struct LipschitzAudit {
  double grad_ratio_max = 0;
  double hess_ratio_max = 0;
  std::size_t pairs_used = 0;
  bool within_declared = false;
};

LipschitzAudit lipschitz_audit(const SmoothObjective& obj,
                               const std::function<Vec(Rng&)>& sampler,
                               std::size_t n_pairs, Rng& rng,
                               double min_separation = 1e-8);

}  // namespace ppd

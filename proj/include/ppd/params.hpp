#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ppd {

// Inputs to the parameter preamble of the perturbed proximal descent method.
struct ProblemConstants {
  double ell = 0;        // gradient Lipschitz constant
  double rho = 0;        // Hessian Lipschitz constant
  double eps = 0;        // target accuracy
  double c = 1;          // step/threshold scale, intended in (0, 1]
  double delta = 0.1;    // failure probability
  double delta_phi = 1;  // Phi(x_0) - inf Phi upper bound
  int dim = 1;
};

struct PpdParams {
  ProblemConstants in;
  double chi = 0;        // chi = 3 max(ln(d ell delta_phi / (c eps^2 delta)), 4)
  double eta = 0;        // c / ell
  double r = 0;          // (sqrt(c)/chi^2) (eps/ell)
  double g_thres = 0;    // (sqrt(c)/chi^2) eps
  double phi_thres = 0;  // (c/chi^3) sqrt(eps^3/rho)
  std::size_t t_thres = 0;  // ceil((chi/c^2) ell / sqrt(rho eps))
  std::vector<std::string> warnings;
};

PpdParams make_ppd_params(const ProblemConstants& in);

// Ten times the iteration bound the parameter choice is designed around,
// capped at 1e6.
std::size_t default_max_iter(const PpdParams& p);

}  // namespace ppd

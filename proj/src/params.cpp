#include "ppd/params.hpp"

#include <cmath>
#include <stdexcept>

namespace ppd {

PpdParams make_ppd_params(const ProblemConstants& in) {
  if (in.ell <= 0 || in.rho <= 0 || in.eps <= 0 || in.c <= 0 ||
      in.delta_phi <= 0 || in.dim < 1)
    throw std::invalid_argument("make_ppd_params: constants must be positive");
  if (in.delta <= 0 || in.delta >= 1)
    throw std::invalid_argument("make_ppd_params: delta must lie in (0, 1)");

  PpdParams p;
  p.in = in;
  double log_arg =
      in.dim * in.ell * in.delta_phi / (in.c * in.eps * in.eps * in.delta);
  p.chi = 3.0 * std::max(std::log(log_arg), 4.0);
  p.eta = in.c / in.ell;
  p.r = std::sqrt(in.c) / (p.chi * p.chi) * (in.eps / in.ell);
  p.g_thres = std::sqrt(in.c) / (p.chi * p.chi) * in.eps;
  p.phi_thres =
      in.c / (p.chi * p.chi * p.chi) * std::sqrt(in.eps * in.eps * in.eps / in.rho);
  p.t_thres = static_cast<std::size_t>(
      std::ceil(p.chi / (in.c * in.c) * in.ell / std::sqrt(in.rho * in.eps)));

  if (in.c > 1)
    p.warnings.push_back(
        "c > 1: step size exceeds 1/ell; descent guarantees no longer apply");
  if (in.eps > in.ell * in.ell / in.rho)
    p.warnings.push_back(
        "eps > ell^2/rho: accuracy target outside the analyzed regime");
  return p;
}

std::size_t default_max_iter(const PpdParams& p) {
  double chi4 = p.chi * p.chi * p.chi * p.chi;
  double c3 = p.in.c * p.in.c * p.in.c;
  double bound =
      10.0 * chi4 / c3 * p.in.ell * p.in.delta_phi / (p.in.eps * p.in.eps);
  double capped = std::min(bound, 1e6);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(capped)));
}

}  // namespace ppd

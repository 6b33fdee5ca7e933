#include "ppd/analysis.hpp"

#include "ppd/prox.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace ppd {

Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                double h) {
  if (h <= 0) throw std::invalid_argument("fd_gradient: h <= 0");
  Vec g(x.size());
  Vec p = x;
  for (int i = 0; i < x.size(); ++i) {
    p[i] = x[i] + h;
    double fp = f(p);
    p[i] = x[i] - h;
    double fm = f(p);
    p[i] = x[i];
    g[i] = (fp - fm) / (2 * h);
  }
  return g;
}

Vec fd_gradient_refined(const std::function<double(const Vec&)>& f,
                        const Vec& x, double h) {
  Vec coarse = fd_gradient(f, x, h);
  Vec fine = fd_gradient(f, x, h / 2);
  return (4 * fine - coarse) / 3;
}

Mat fd_hessian(const std::function<double(const Vec&)>& f, const Vec& x,
               double h) {
  if (h <= 0) throw std::invalid_argument("fd_hessian: h <= 0");
  const int d = static_cast<int>(x.size());
  Mat out(d, d);
  const double f0 = f(x);
  Vec p = x;
  for (int i = 0; i < d; ++i) {
    p[i] = x[i] + h;
    double fpp = f(p);
    p[i] = x[i] - h;
    double fmm = f(p);
    p[i] = x[i];
    out(i, i) = (fpp - 2 * f0 + fmm) / (h * h);
    for (int j = i + 1; j < d; ++j) {
      p[i] = x[i] + h;
      p[j] = x[j] + h;
      double fa = f(p);
      p[j] = x[j] - h;
      double fb = f(p);
      p[i] = x[i] - h;
      double fd = f(p);
      p[j] = x[j] + h;
      double fc = f(p);
      p[i] = x[i];
      p[j] = x[j];
      out(i, j) = out(j, i) = (fa - fb - fc + fd) / (4 * h * h);
    }
  }
  return 0.5 * (out + out.transpose());
}

double min_eigenvalue(const Mat& h, double sym_tol) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("min_eigenvalue: matrix not square");
  double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > sym_tol * scale)
    throw std::invalid_argument("min_eigenvalue: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.transpose()),
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Vec scaled_gradient_mapping(const CompositeObjective& obj, const Vec& x,
                            double ell) {
  if (ell <= 0) throw std::invalid_argument("scaled_gradient_mapping: ell <= 0");
  return ell * gradient_mapping(obj, x, 1.0 / ell);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::eps_sosp: return "eps_sosp";
    case Verdict::first_order_only: return "first_order_only";
    case Verdict::saddle_region: return "saddle_region";
    case Verdict::non_stationary: return "non_stationary";
  }
  return "unknown";
}

StationarityVerdict classify_point(const CompositeObjective& obj, const Vec& x,
                                   double eps, double rho, double eta,
                                   double gamma) {
  if (eps <= 0 || rho <= 0 || eta <= 0)
    throw std::invalid_argument("classify_point: eps, rho, eta must be positive");
  StationarityVerdict v;
  v.eps = eps;
  v.rho = rho;
  v.gm_norm = gradient_mapping(obj, x, eta).norm();
  Mat h = obj.smooth.hessian ? obj.smooth.hessian(x)
                             : fd_hessian(obj.smooth.value, x);
  v.min_eig = min_eigenvalue(h);
  if (v.gm_norm > eps) {
    v.verdict = Verdict::non_stationary;
  } else if (v.min_eig >= -std::sqrt(rho * eps)) {
    v.verdict = Verdict::eps_sosp;
  } else if (gamma > 0 && v.min_eig <= -gamma) {
    v.verdict = Verdict::saddle_region;
  } else {
    v.verdict = Verdict::first_order_only;
  }
  return v;
}

ProofUnits proof_units(double eta, double ell, double rho, double gamma,
                       double delta, int dim) {
  if (eta <= 0 || ell <= 0 || rho <= 0 || gamma <= 0 || dim < 1)
    throw std::invalid_argument("proof_units: constants must be positive");
  ProofUnits u;
  u.kappa = ell / gamma;
  double arg = dim * u.kappa / delta;
  if (delta <= 0 || arg <= 1)
    throw std::invalid_argument("proof_units: requires d*kappa/delta > 1");
  u.log_term = std::log(arg);
  double lg = u.log_term;
  u.f_unit = eta * ell * (gamma * gamma * gamma) / (rho * rho) / (lg * lg * lg);
  u.g_unit = std::sqrt(eta * ell) * (gamma * gamma) / rho / (lg * lg);
  u.s_unit = std::sqrt(eta * ell) * gamma / rho / lg;
  u.t_unit = lg / (eta * gamma);
  return u;
}

LambdaBoundDiagnostic lambda_bound_diagnostic(const LambdaBoundInputs& in) {
  if (in.eta <= 0 || in.ell <= 0 || in.rho <= 0 || in.gamma <= 0 ||
      in.dim < 1 || in.lambda < 0)
    throw std::invalid_argument("lambda_bound_diagnostic: bad inputs");
  LambdaBoundDiagnostic out;
  // Fixed point of hat_c = 2 + ln(400 hat_c), about 10.33.
  if (in.hat_c > 0) {
    out.hat_c = in.hat_c;
  } else {
    double c = 10.0;
    for (int k = 0; k < 64; ++k) c = 2 + std::log(400 * c);
    out.hat_c = c;
  }
  double sqd = std::sqrt(static_cast<double>(in.dim));
  double mu = in.mu > 0 ? in.mu : in.delta / (2 * sqd);
  ProofUnits u = proof_units(in.eta, in.ell, in.rho, in.gamma, in.delta, in.dim);
  double contraction = 1 - in.eta * in.ell;
  if (contraction > 0 && contraction < 1) {
    double pw = std::pow(contraction, out.hat_c * u.t_unit);
    double numer = pw * mu / (u.kappa * u.log_term * u.log_term) *
                   std::sqrt(in.eta) * std::pow(in.ell, 1.5) *
                   (in.gamma / in.rho) * (1 + in.eta * in.gamma * in.theta);
    double denom = 2 * sqd * (contraction * (1 - pw) + in.eta * in.ell);
    out.bound1 = numer / denom;
  } else {
    out.bound1 = 0;  // degenerate regime: the geometric series argument fails
  }
  // Projection bound with the movement vector as a worst-case unit sign
  // pattern aligned with the escape direction.
  double c0 = mu * u.s_unit / (u.kappa * u.log_term);
  out.bound2 = c0 / sqd;
  out.lambda_ok = in.lambda == 0 ||
                  (in.lambda < out.bound1 && in.lambda < out.bound2);
  return out;
}

LipschitzAudit lipschitz_audit(const SmoothObjective& obj,
                               const std::function<Vec(Rng&)>& sampler,
                               std::size_t n_pairs, Rng& rng,
                               double min_separation) {
  LipschitzAudit a;
  for (std::size_t k = 0; k < n_pairs; ++k) {
    Vec x = sampler(rng);
    Vec y = sampler(rng);
    double sep = (x - y).norm();
    if (sep < min_separation) continue;  // skip degenerate pairs
    double gr = (obj.gradient(x) - obj.gradient(y)).norm() / sep;
    a.grad_ratio_max = std::max(a.grad_ratio_max, gr);
    Mat hx = obj.hessian ? obj.hessian(x) : fd_hessian(obj.value, x);
    Mat hy = obj.hessian ? obj.hessian(y) : fd_hessian(obj.value, y);
    Eigen::SelfAdjointEigenSolver<Mat> es(
        Mat(0.5 * (hx - hy + (hx - hy).transpose())), Eigen::EigenvaluesOnly);
    double hr = es.eigenvalues().cwiseAbs().maxCoeff() / sep;
    a.hess_ratio_max = std::max(a.hess_ratio_max, hr);
    ++a.pairs_used;
  }
  a.within_declared = a.grad_ratio_max <= obj.grad_lipschitz &&
                      a.hess_ratio_max <= obj.hess_lipschitz;
  return a;
}

}  // namespace ppd

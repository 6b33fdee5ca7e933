#include "ppd/octopus.hpp"

#include <cmath>

namespace ppd {

namespace {

void validate(const OctopusParams& p) {
  if (p.sharpness <= 0 || p.gamma <= 0 || p.tau <= 0 || p.dim < 1)
    throw std::invalid_argument("octopus: parameters must be positive");
  if (p.gamma > p.sharpness)
    throw std::invalid_argument("octopus: gamma must not exceed sharpness");
}

// G1 cubic/quartic coefficients.
double a1(const OctopusParams& p) {
  return (-14 * p.sharpness + 10 * p.gamma) / (3 * p.tau);
}
double b1(const OctopusParams& p) {
  return (5 * p.sharpness - 3 * p.gamma) / (2 * p.tau * p.tau);
}

double g1pp(const OctopusParams& p, double x) {
  double u = x - p.tau;
  return -2 * p.gamma + 6 * a1(p) * u + 12 * b1(p) * u * u;
}
double g1ppp(const OctopusParams& p, double x) {
  return 6 * a1(p) + 24 * b1(p) * (x - p.tau);
}

double g2pp(const OctopusParams& p, double x) {
  double c = p.sharpness + p.gamma, t = p.tau, u = x - 2 * t;
  return -60 * c / (t * t * t) * u * (1 + 3 * u / t + 2 * u * u / (t * t));
}
double g2ppp(const OctopusParams& p, double x) {
  double c = p.sharpness + p.gamma, t = p.tau, u = x - 2 * t;
  double t3 = t * t * t;
  return -60 * c / t3 - 360 * c / (t3 * t) * u - 360 * c / (t3 * t * t) * u * u;
}

double spec_norm2x2(double a, double b, double c) {
  double m = 0.5 * (a + c), s = std::hypot(0.5 * (a - c), b);
  return std::abs(m) + s;
}

}  // namespace

OctopusParams canonical_octopus(int dim) {
  return {std::exp(1.0), 1.0, std::exp(1.0), dim};
}

double gluing_g1(const OctopusParams& p, double x) {
  double u = x - p.tau;
  return -p.gamma * x * x + a1(p) * u * u * u + b1(p) * u * u * u * u;
}

double gluing_g1_prime(const OctopusParams& p, double x) {
  double u = x - p.tau;
  return -2 * p.gamma * x + 3 * a1(p) * u * u + 4 * b1(p) * u * u * u;
}

double gluing_g2(const OctopusParams& p, double x) {
  double c = p.sharpness + p.gamma, t = p.tau, u = x - 2 * t;
  double u3 = u * u * u;
  return -p.gamma - 10 * c / (t * t * t) * u3 - 15 * c / (t * t * t * t) * u3 * u -
         6 * c / (t * t * t * t * t) * u3 * u * u;
}

double gluing_g2_prime(const OctopusParams& p, double x) {
  double c = p.sharpness + p.gamma, t = p.tau, u = x - 2 * t;
  double t3 = t * t * t, u2 = u * u;
  return -30 * c / t3 * u2 - 60 * c / (t3 * t) * u2 * u -
         30 * c / (t3 * t * t) * u2 * u2;
}

double gluing_balance(const OctopusParams& p) {
  return (37 * p.sharpness + 13 * p.gamma) * p.tau * p.tau / 6;
}

OctopusRegion octopus_region(const OctopusParams& p, const Vec& x) {
  validate(p);
  if (x.size() != p.dim)
    throw std::invalid_argument("octopus_region: dimension mismatch");
  const double t = p.tau;
  Vec y = x.cwiseAbs();
  for (int j = 0; j < p.dim; ++j)
    if (y[j] > 6 * t)
      throw DomainError("octopus: coordinate outside [-6 tau, 6 tau]", x);
  int i = 0;
  while (i < p.dim && y[i] > 2 * t) ++i;
  if (i == p.dim) return {p.dim + 1, 1};
  for (int j = i + 1; j < p.dim; ++j)
    if (y[j] > t)
      throw DomainError("octopus: point not in any region", x);
  return {i + 1, y[i] <= t ? 1 : 2};
}

double octopus_piece_value(const OctopusParams& p, OctopusRegion reg,
                           const Vec& y) {
  const double L = p.sharpness, G = p.gamma, t = p.tau;
  const int d = p.dim, i = reg.branch - 1;  // i preceding coordinates
  const double nu = gluing_balance(p);
  double v = 0;
  for (int j = 0; j < std::min(i, d); ++j) {
    double u = y[j] - 4 * t;
    v += L * u * u;
  }
  if (i >= d) return v - d * nu;
  if (reg.variant == 1) {
    v += -G * y[i] * y[i];
    for (int j = i + 1; j < d; ++j) v += L * y[j] * y[j];
  } else {
    v += gluing_g1(p, y[i]);
    if (i + 1 < d) {
      v += gluing_g2(p, y[i]) * y[i + 1] * y[i + 1];
      for (int j = i + 2; j < d; ++j) v += L * y[j] * y[j];
    }
  }
  return v - i * nu;
}

double octopus_value(const OctopusParams& p, const Vec& x) {
  return octopus_piece_value(p, octopus_region(p, x), x.cwiseAbs());
}

Vec octopus_gradient(const OctopusParams& p, const Vec& x) {
  OctopusRegion reg = octopus_region(p, x);
  const double L = p.sharpness, G = p.gamma, t = p.tau;
  const int d = p.dim, i = reg.branch - 1;
  Vec y = x.cwiseAbs();
  Vec g = Vec::Zero(d);
  for (int j = 0; j < std::min(i, d); ++j) g[j] = 2 * L * (y[j] - 4 * t);
  if (i < d) {
    if (reg.variant == 1) {
      g[i] = -2 * G * y[i];
      for (int j = i + 1; j < d; ++j) g[j] = 2 * L * y[j];
    } else {
      g[i] = gluing_g1_prime(p, y[i]);
      if (i + 1 < d) {
        g[i] += gluing_g2_prime(p, y[i]) * y[i + 1] * y[i + 1];
        g[i + 1] = 2 * gluing_g2(p, y[i]) * y[i + 1];
        for (int j = i + 2; j < d; ++j) g[j] = 2 * L * y[j];
      }
    }
  }
  // Even reflection: chain rule through y = |x|; every one-sided derivative
  // at x_j = 0 vanishes, so sign(0) = 0 is exact.
  for (int j = 0; j < d; ++j)
    g[j] *= (x[j] > 0 ? 1.0 : (x[j] < 0 ? -1.0 : 0.0));
  return g;
}

Mat octopus_hessian(const OctopusParams& p, const Vec& x) {
  OctopusRegion reg = octopus_region(p, x);
  const double L = p.sharpness, G = p.gamma;
  const int d = p.dim, i = reg.branch - 1;
  Vec y = x.cwiseAbs();
  Mat h = Mat::Zero(d, d);
  for (int j = 0; j < std::min(i, d); ++j) h(j, j) = 2 * L;
  if (i < d) {
    if (reg.variant == 1) {
      h(i, i) = -2 * G;
      for (int j = i + 1; j < d; ++j) h(j, j) = 2 * L;
    } else {
      h(i, i) = g1pp(p, y[i]);
      if (i + 1 < d) {
        h(i, i) += g2pp(p, y[i]) * y[i + 1] * y[i + 1];
        h(i, i + 1) = h(i + 1, i) = 2 * gluing_g2_prime(p, y[i]) * y[i + 1];
        h(i + 1, i + 1) = 2 * gluing_g2(p, y[i]);
        for (int j = i + 2; j < d; ++j) h(j, j) = 2 * L;
      }
    }
  }
  // Reflection: H(x) = S H(y) S; the mixed entries vanish whenever the
  // corresponding coordinate is zero, so the sign convention there is moot.
  Vec s(d);
  for (int j = 0; j < d; ++j) s[j] = x[j] < 0 ? -1.0 : 1.0;
  return s.asDiagonal() * h * s.asDiagonal();
}

OctopusCatalog octopus_catalog(const OctopusParams& p) {
  validate(p);
  OctopusCatalog cat;
  for (int i = 0; i < p.dim; ++i) {
    Vec s = Vec::Zero(p.dim);
    for (int j = 0; j < i; ++j) s[j] = 4 * p.tau;
    cat.saddles.push_back(std::move(s));
  }
  cat.global_min = Vec::Constant(p.dim, 4 * p.tau);
  cat.min_value = -p.dim * gluing_balance(p);
  cat.saddle_min_eig = -2 * p.gamma;
  return cat;
}

Vec octopus_composite_min(const OctopusParams& p, double lambda) {
  return Vec::Constant(p.dim, 4 * p.tau - lambda / (2 * p.sharpness));
}

double octopus_composite_min_value(const OctopusParams& p, double lambda) {
  double per_coord =
      4 * lambda * p.tau - lambda * lambda / (4 * p.sharpness);
  return -p.dim * gluing_balance(p) + p.dim * per_coord;
}

Vec octopus_composite_saddle(const OctopusParams& p, int branch,
                             double lambda) {
  if (branch < 0 || branch >= p.dim)
    throw std::invalid_argument("octopus_composite_saddle: branch out of range");
  Vec s = Vec::Zero(p.dim);
  for (int j = 0; j < branch; ++j)
    s[j] = 4 * p.tau - lambda / (2 * p.sharpness);
  return s;
}

double octopus_composite_saddle_value(const OctopusParams& p, int branch,
                                      double lambda) {
  double per_coord =
      4 * lambda * p.tau - lambda * lambda / (4 * p.sharpness);
  return -branch * gluing_balance(p) + branch * per_coord;
}

SmoothObjective make_octopus(const OctopusParams& p) {
  validate(p);
  // Audit the regularity constants on the only non-quadratic patch: the 2x2
  // glue block over (y_i, y_{i+1}) in [tau, 2 tau] x [0, tau].
  const int n = 257;
  double ell = std::max(2 * p.sharpness, 2 * p.gamma);
  double rho = 0;
  for (int a = 0; a < n; ++a) {
    double u = p.tau + (p.tau * a) / (n - 1);
    for (int b = 0; b < n; ++b) {
      double v = (p.tau * b) / (n - 1);
      double h00 = g1pp(p, u) + g2pp(p, u) * v * v;
      double h01 = 2 * gluing_g2_prime(p, u) * v;
      double h11 = 2 * gluing_g2(p, u);
      ell = std::max(ell, spec_norm2x2(h00, h01, h11));
      double du = spec_norm2x2(g1ppp(p, u) + g2ppp(p, u) * v * v,
                               2 * g2pp(p, u) * v, 2 * gluing_g2_prime(p, u));
      double dv = spec_norm2x2(2 * g2pp(p, u) * v,
                               2 * gluing_g2_prime(p, u), 0);
      rho = std::max(rho, std::hypot(du, dv));
    }
  }
  SmoothObjective obj;
  obj.name = "octopus";
  obj.dim = p.dim;
  obj.value = [p](const Vec& x) { return octopus_value(p, x); };
  obj.gradient = [p](const Vec& x) { return octopus_gradient(p, x); };
  obj.hessian = [p](const Vec& x) { return octopus_hessian(p, x); };
  obj.grad_lipschitz = ell;
  obj.hess_lipschitz = rho;
  return obj;
}

}  // namespace ppd

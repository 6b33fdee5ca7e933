#pragma once

#include "ppd/core.hpp"

namespace ppd {

// Huber function of the Euclidean norm: ||x||^2 / (2 mu) inside the ball of
// radius mu, ||x|| - mu/2 outside. Smooth everywhere with a closed-form prox.
struct HuberFn {
  double mu = 0;
  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  // prox of t * H_mu
  Vec prox(const Vec& y, double t) const;
};

// Coordinatewise variant: sum of scalar Huber functions.
struct HuberCoordwiseFn {
  double mu = 0;
  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  Vec prox(const Vec& y, double t) const;
};

// Two-dimensional saddle bump 0.5 (x^2 - y^2) exp(-(x^2+y^2)/5).
double bump_value(const Vec& x);
Vec bump_gradient(const Vec& x);
Mat bump_hessian(const Vec& x);

enum class BumpMode {
  huber_in_f,  // smooth part carries bump + weight * Huber (for gd)
  huber_as_g,  // smooth part is the bump; Huber handled by its prox (for pd)
};

struct GaussianBumpProblem {
  SmoothObjective smooth;           // per mode above
  HuberFn huber;                    // mu = 100
  double huber_weight = 0.01;
  BumpMode mode = BumpMode::huber_in_f;
};

GaussianBumpProblem make_gaussian_bump(BumpMode mode);

// The two minimizers of the full objective, located by an independent grid
// refinement; symmetric about the x-axis at (0, +-y*).
struct BumpMinima {
  Vec minimum_pos;  // (0, +y*)
  Vec minimum_neg;  // (0, -y*)
  double value = 0;
};

// Grid search over [-5,5]^2 at the given spacing, then local refinement.
BumpMinima bump_minima(double grid_step = 1e-3);

}  // namespace ppd

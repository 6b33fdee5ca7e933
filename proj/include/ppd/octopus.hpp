#pragma once

#include "ppd/core.hpp"

namespace ppd {

// Octopus family: a d-dimensional strict-saddle landscape built from
// one-dimensional pieces glued C^2 along the seams x_i = tau and x_i = 2*tau,
// extended to all orthants by even reflection. Requires gamma <= sharpness.
struct OctopusParams {
  double sharpness = 0;  // L, curvature scale of the quadratic pieces
  double gamma = 0;      // strict-saddle margin (negative curvature -2*gamma)
  double tau = 0;        // seam length scale; domain is [-6 tau, 6 tau]^d
  int dim = 1;
};

// Canonical instance: L = e, gamma = 1, tau = e.
OctopusParams canonical_octopus(int dim);

// Connects curvature 2L at x = 2 tau down through -2 gamma at x = tau.
double gluing_g1(const OctopusParams& p, double x);
double gluing_g1_prime(const OctopusParams& p, double x);
// Connects curvature L at x = tau down to -gamma at x = 2 tau (next coord).
double gluing_g2(const OctopusParams& p, double x);
double gluing_g2_prime(const OctopusParams& p, double x);

// Additive balance keeping the pieces continuous: nu = -G1(2 tau) + 4 L tau^2.
// Equals (37 L + 13 gamma) tau^2 / 6.
double gluing_balance(const OctopusParams& p);

// Which one-dimensional piece applies at |x|. branch in 1..dim+1; variant 1
// covers x_i <= tau, variant 2 covers tau <= x_i <= 2 tau (branch dim+1 has
// only variant 1). Ties at the seams resolve to the later piece.
struct OctopusRegion {
  int branch = 1;
  int variant = 1;
};

OctopusRegion octopus_region(const OctopusParams& p, const Vec& x);

// Piece value at y = |x| for a forced region; used to check seam agreement.
double octopus_piece_value(const OctopusParams& p, OctopusRegion reg,
                           const Vec& y);

double octopus_value(const OctopusParams& p, const Vec& x);
Vec octopus_gradient(const OctopusParams& p, const Vec& x);
Mat octopus_hessian(const OctopusParams& p, const Vec& x);

// First-quadrant representatives of the landscape's critical points of f.
struct OctopusCatalog {
  std::vector<Vec> saddles;   // 4 tau 1_i, i = 0..dim-1
  Vec global_min;             // 4 tau 1_dim
  double min_value = 0;       // -dim * nu
  double saddle_min_eig = 0;  // -2 gamma
};

OctopusCatalog octopus_catalog(const OctopusParams& p);

// Stationary points of f + lambda ||.||_1 sit at coordinate 4 tau - lambda/(2L).
Vec octopus_composite_min(const OctopusParams& p, double lambda);
double octopus_composite_min_value(const OctopusParams& p, double lambda);
Vec octopus_composite_saddle(const OctopusParams& p, int branch, double lambda);
double octopus_composite_saddle_value(const OctopusParams& p, int branch,
                                      double lambda);

// Objective with grad/Hessian Lipschitz constants audited on construction
// (analytic 2x2 glue-block spectra maximized over a fine grid).
SmoothObjective make_octopus(const OctopusParams& p);

}  // namespace ppd

#pragma once

#include "ppd/core.hpp"

namespace ppd {

// Proximal operator of theta * ||.||_1, applied coordinatewise.
inline double soft_threshold(double y, double theta) {
  if (theta < 0) throw std::invalid_argument("soft_threshold: theta < 0");
  double m = std::abs(y) - theta;
  if (m <= 0) return 0.0;
  return y > 0 ? m : -m;
}

inline Vec soft_threshold(const Vec& y, double theta) {
  if (theta < 0) throw std::invalid_argument("soft_threshold: theta < 0");
  return y.unaryExpr([theta](double v) { return soft_threshold(v, theta); });
}

// prox(y) - y, coordinatewise min(theta, |y_i|) * sign(-y_i). Its norm is at
// most theta * sqrt(d) regardless of y.
inline Vec prox_displacement(const Vec& y, double theta) {
  return soft_threshold(y, theta) - y;
}

struct ProxStepResult {
  Vec next;      // prox_{eta g}(x - eta grad_f(x))
  Vec pre_prox;  // x - eta grad_f(x)
  Vec gradient_mapping;  // x - next (unscaled displacement)
  double gm_norm = 0;
};

// One proximal descent step on Phi = f + lambda ||.||_1.
inline ProxStepResult prox_step(const CompositeObjective& obj, const Vec& x,
                                double eta) {
  if (eta <= 0) throw std::invalid_argument("prox_step: eta <= 0");
  ProxStepResult r;
  r.pre_prox = x - eta * eval_grad_f(obj, x);
  r.next = soft_threshold(r.pre_prox, eta * obj.lambda);
  r.gradient_mapping = x - r.next;
  r.gm_norm = r.gradient_mapping.norm();
  return r;
}

// Displacement x - prox_{eta g}(x - eta grad_f(x)); zero exactly at the
// stationary points of Phi.
inline Vec gradient_mapping(const CompositeObjective& obj, const Vec& x,
                            double eta) {
  return prox_step(obj, x, eta).gradient_mapping;
}

}  // namespace ppd

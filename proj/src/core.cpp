#include "ppd/core.hpp"

#include <cmath>

namespace ppd {

double eval_f(const CompositeObjective& obj, const Vec& x) {
  require_finite(x, "eval_f: non-finite point");
  double v = obj.smooth.value(x);
  if (!std::isfinite(v)) throw EvaluationError("eval_f: non-finite value", x);
  return v;
}

Vec eval_grad_f(const CompositeObjective& obj, const Vec& x) {
  require_finite(x, "eval_grad_f: non-finite point");
  Vec g = obj.smooth.gradient(x);
  if (!is_finite(g)) throw EvaluationError("eval_grad_f: non-finite gradient", x);
  return g;
}

double eval_phi(const CompositeObjective& obj, const Vec& x) {
  return eval_f(obj, x) + obj.lambda * x.lpNorm<1>();
}

}  // namespace ppd

#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppd {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Objective evaluation produced a non-finite value, or an iterate left the
// domain a benchmark is defined on. Carries the offending point so callers
// can report where a run died.
class EvaluationError : public std::runtime_error {
public:
  EvaluationError(std::string what, Vec point)
      : std::runtime_error(std::move(what)), point(std::move(point)) {}
  Vec point;
};

class DomainError : public EvaluationError {
public:
  using EvaluationError::EvaluationError;
};

inline bool is_finite(const Vec& x) { return x.allFinite(); }

inline void require_finite(const Vec& x, const char* what) {
  if (!is_finite(x)) throw EvaluationError(what, x);
}

// A smooth objective f together with the regularity constants its
// implementation vouches for. `hessian` is optional; analysis falls back to
// finite differences when it is absent.
struct SmoothObjective {
  std::string name;
  int dim = 0;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  std::function<Mat(const Vec&)> hessian;  // may be empty
  double grad_lipschitz = 0;  // ell: Lipschitz constant of the gradient
  double hess_lipschitz = 0;  // rho: Lipschitz constant of the Hessian
};

// Phi(x) = f(x) + lambda * ||x||_1.
struct CompositeObjective {
  SmoothObjective smooth;
  double lambda = 0;
};

double eval_f(const CompositeObjective& obj, const Vec& x);
Vec eval_grad_f(const CompositeObjective& obj, const Vec& x);
double eval_phi(const CompositeObjective& obj, const Vec& x);

}  // namespace ppd

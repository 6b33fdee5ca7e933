#include "ppd/gaussian_bump.hpp"

#include <cmath>

namespace ppd {

double HuberFn::value(const Vec& x) const {
  double n = x.norm();
  return n <= mu ? n * n / (2 * mu) : n - mu / 2;
}

Vec HuberFn::gradient(const Vec& x) const {
  double n = x.norm();
  if (n <= mu) return x / mu;
  return x / n;
}

Vec HuberFn::prox(const Vec& y, double t) const {
  double n = y.norm();
  if (n <= mu + t) return y * (mu / (mu + t));
  return y * (1 - t / n);
}

double HuberCoordwiseFn::value(const Vec& x) const {
  double v = 0;
  for (int i = 0; i < x.size(); ++i) {
    double a = std::abs(x[i]);
    v += a <= mu ? a * a / (2 * mu) : a - mu / 2;
  }
  return v;
}

Vec HuberCoordwiseFn::gradient(const Vec& x) const {
  return x.unaryExpr([this](double v) {
    double a = std::abs(v);
    return a <= mu ? v / mu : (v > 0 ? 1.0 : -1.0);
  });
}

Vec HuberCoordwiseFn::prox(const Vec& y, double t) const {
  return y.unaryExpr([this, t](double v) {
    double a = std::abs(v);
    if (a <= mu + t) return v * (mu / (mu + t));
    return v * (1 - t / a);
  });
}

namespace {

void check2d(const Vec& x) {
  if (x.size() != 2) throw std::invalid_argument("bump: expects dimension 2");
}

double bump_u(const Vec& x) { return std::exp(-x.squaredNorm() / 5); }

double spec_norm2x2(double a, double b, double c) {
  double m = 0.5 * (a + c), s = std::hypot(0.5 * (a - c), b);
  return std::abs(m) + s;
}

}  // namespace

double bump_value(const Vec& x) {
  check2d(x);
  return 0.5 * (x[0] * x[0] - x[1] * x[1]) * bump_u(x);
}

Vec bump_gradient(const Vec& x) {
  check2d(x);
  double u = bump_u(x);
  double q = (x[0] * x[0] - x[1] * x[1]) / 5;
  Vec g(2);
  g[0] = x[0] * u * (1 - q);
  g[1] = -x[1] * u * (1 + q);
  return g;
}

Mat bump_hessian(const Vec& x) {
  check2d(x);
  double u = bump_u(x);
  double q = (x[0] * x[0] - x[1] * x[1]) / 5;
  double xx = 2 * x[0] * x[0] / 5, yy = 2 * x[1] * x[1] / 5;
  Mat h(2, 2);
  h(0, 0) = u * ((1 - q) * (1 - xx) - xx);
  h(1, 1) = u * (-(1 + q) * (1 - yy) + yy);
  h(0, 1) = h(1, 0) = u * (2 * x[0] * x[1] / 5) * q;
  return h;
}

GaussianBumpProblem make_gaussian_bump(BumpMode mode) {
  GaussianBumpProblem prob;
  prob.mode = mode;
  prob.huber = HuberFn{100.0};
  prob.huber_weight = 0.01;
  HuberFn hub = prob.huber;
  double w = prob.huber_weight;

  SmoothObjective obj;
  obj.dim = 2;
  if (mode == BumpMode::huber_in_f) {
    obj.name = "gaussian_bump";
    obj.value = [hub, w](const Vec& x) {
      return bump_value(x) + w * hub.value(x);
    };
    obj.gradient = [hub, w](const Vec& x) {
      return Vec(bump_gradient(x) + w * hub.gradient(x));
    };
  } else {
    obj.name = "gaussian_bump_split";
    obj.value = [](const Vec& x) { return bump_value(x); };
    obj.gradient = [](const Vec& x) { return bump_gradient(x); };
    obj.hessian = [](const Vec& x) { return bump_hessian(x); };
  }

  // Audit the smooth part's constants once on a grid covering the bump's
  // support (it decays well inside [-8, 8]^2); the Huber term adds w/mu
  // curvature. Cached: the audit is pure.
  static const auto audited = [] {
    const int n = 321;
    double ell = 0, rho = 0;
    for (int a = 0; a < n; ++a) {
      double px = -8 + 16.0 * a / (n - 1);
      for (int b = 0; b < n; ++b) {
        double py = -8 + 16.0 * b / (n - 1);
        Vec pt(2);
        pt << px, py;
        Mat h = bump_hessian(pt);
        ell = std::max(ell, spec_norm2x2(h(0, 0), h(0, 1), h(1, 1)));
        double d = 1e-4;
        for (int axis = 0; axis < 2; ++axis) {
          Vec lo = pt, hi = pt;
          lo[axis] -= d;
          hi[axis] += d;
          Mat dh = (bump_hessian(hi) - bump_hessian(lo)) / (2 * d);
          rho = std::max(rho, spec_norm2x2(dh(0, 0), dh(0, 1), dh(1, 1)));
        }
      }
    }
    return std::pair<double, double>{ell, rho};
  }();
  double ell = audited.first, rho = audited.second;
  obj.grad_lipschitz = mode == BumpMode::huber_in_f ? ell + w / hub.mu : ell;
  obj.hess_lipschitz = rho;  // Huber-in-f mode is C^1 only at the ball rim
  prob.smooth = std::move(obj);
  return prob;
}

BumpMinima bump_minima(double grid_step) {
  GaussianBumpProblem prob = make_gaussian_bump(BumpMode::huber_in_f);
  const auto& f = prob.smooth.value;
  double best = std::numeric_limits<double>::infinity();
  double bx = 0, by = 0;
  long n = std::lround(10.0 / grid_step);
  // Restrict to the y >= 0 half plane; the objective is even in y.
#pragma omp parallel
  {
    double lbest = best, lbx = 0, lby = 0;
    Vec pt(2);
#pragma omp for
    for (long i = 0; i <= n; ++i) {
      double px = -5 + grid_step * i;
      for (long j = n / 2; j <= n; ++j) {
        double py = -5 + grid_step * j;
        pt << px, py;
        double v = f(pt);
        if (v < lbest) {
          lbest = v;
          lbx = px;
          lby = py;
        }
      }
    }
#pragma omp critical
    if (lbest < best ||
        (lbest == best && (lbx < bx || (lbx == bx && lby < by)))) {
      best = lbest;
      bx = lbx;
      by = lby;
    }
  }
  // Local refinement by shrinking coordinate search around the grid winner.
  double step = grid_step;
  Vec pt(2);
  while (step > 1e-12) {
    bool moved = false;
    const double cand[4][2] = {{step, 0}, {-step, 0}, {0, step}, {0, -step}};
    for (const auto& c : cand) {
      pt << bx + c[0], by + c[1];
      double v = f(pt);
      if (v < best) {
        best = v;
        bx = pt[0];
        by = pt[1];
        moved = true;
      }
    }
    if (!moved) step /= 2;
  }
  BumpMinima m;
  m.minimum_pos = Vec(2);
  m.minimum_pos << bx, std::abs(by);
  m.minimum_neg = Vec(2);
  m.minimum_neg << bx, -std::abs(by);
  m.value = best;
  return m;
}

}  // namespace ppd

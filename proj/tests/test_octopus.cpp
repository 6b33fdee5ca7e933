#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppd/analysis.hpp"
#include "ppd/gaussian_bump.hpp"
#include "ppd/octopus.hpp"
#include "ppd/prox.hpp"

#include <random>

using namespace ppd;

namespace {

const OctopusParams kUnit{1.0, 1.0, 1.0, 2};

Vec make_vec(std::initializer_list<double> v) {
  Vec x(static_cast<int>(v.size()));
  int i = 0;
  for (double d : v) x[i++] = d;
  return x;
}

// Random point in the region union, with a margin away from seams and axes
// so finite differences never straddle a kink in the third derivative.
Vec interior_point(const OctopusParams& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> branch(0, p.dim);  // escaped coords
  std::uniform_real_distribution<double> u01(0, 1);
  std::bernoulli_distribution flip(0.5);
  int i = branch(rng);
  Vec x(p.dim);
  double m = 0.05 * p.tau;
  for (int j = 0; j < i; ++j) x[j] = 2 * p.tau + m + (4 * p.tau - 2 * m) * u01(rng);
  if (i < p.dim) {
    // active coordinate anywhere in (m, 2 tau - m), trailing in (m, tau - m)
    x[i] = m + (2 * p.tau - 2 * m) * u01(rng);
    for (int j = i + 1; j < p.dim; ++j) x[j] = m + (p.tau - 2 * m) * u01(rng);
  }
  for (int j = 0; j < p.dim; ++j)
    if (flip(rng)) x[j] = -x[j];
  return x;
}

}  // namespace

TEST_CASE("gluing_g1 values") {
  CHECK(gluing_g1(kUnit, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  // unit instance, x = 2: -4 + (-4/3) + 1 = -13/3
  CHECK(gluing_g1(kUnit, 2.0) == doctest::Approx(-13.0 / 3).epsilon(1e-14));
}

TEST_CASE("gluing_g2 values") {
  OctopusParams p{2.0, 0.7, 1.3, 2};
  CHECK(gluing_g2(p, 2 * p.tau) == doctest::Approx(-p.gamma).epsilon(1e-13));
  CHECK(gluing_g2(p, p.tau) == doctest::Approx(p.sharpness).epsilon(1e-13));
  CHECK(gluing_g2(kUnit, 1.5) == doctest::Approx(0.0).scale(1).epsilon(1e-13));
}

TEST_CASE("gluing_balance closed form vs definition") {
  CHECK(gluing_balance(kUnit) == doctest::Approx(25.0 / 3).epsilon(1e-14));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int k = 0; k < 100; ++k) {
    double gamma = u(rng);
    OctopusParams p{gamma + u(rng), gamma, u(rng), 3};
    double direct = -gluing_g1(p, 2 * p.tau) + 4 * p.sharpness * p.tau * p.tau;
    CHECK(gluing_balance(p) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("C2 gluing: derivative and curvature match at both seams") {
  // These matching conditions are what make every piece below C2-compatible;
  // they pin the quartic coefficient of G1.
  OctopusParams p = canonical_octopus(2);
  double t = p.tau, L = p.sharpness, G = p.gamma;
  CHECK(gluing_g1_prime(p, t) == doctest::Approx(-2 * G * t).epsilon(1e-12));
  CHECK(gluing_g1_prime(p, 2 * t) == doctest::Approx(-4 * L * t).epsilon(1e-12));
  CHECK(gluing_g2_prime(p, t) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  CHECK(gluing_g2_prime(p, 2 * t) == doctest::Approx(0.0).scale(1).epsilon(1e-12));
  // G1 stays strictly decreasing across the glue: descent is never blocked
  for (int k = 0; k <= 200; ++k) {
    double x = t + t * k / 200.0;
    CHECK(gluing_g1_prime(p, x) < 0);
  }
}

TEST_CASE("octopus_region") {
  OctopusParams p = canonical_octopus(4);
  double t = p.tau;
  auto r0 = octopus_region(p, Vec(Vec::Zero(4)));
  CHECK(r0.branch == 1);
  CHECK(r0.variant == 1);
  auto r1 = octopus_region(p, Vec(Vec::Constant(4, 4 * t)));
  CHECK(r1.branch == 5);
  auto r2 = octopus_region(p, make_vec({4 * t, 1.5 * t, 0, 0}));
  CHECK(r2.branch == 2);
  CHECK(r2.variant == 2);
  // seam tie-breaks: tau goes to variant 1, 2 tau to variant 2
  CHECK(octopus_region(p, make_vec({t, 0, 0, 0})).variant == 1);
  CHECK(octopus_region(p, make_vec({2 * t, 0, 0, 0})).variant == 2);
  CHECK_THROWS_AS(octopus_region(p, make_vec({7 * t, 0, 0, 0})), DomainError);
  // inside the box [0,6t]^d but outside every case condition
  CHECK_THROWS_AS(octopus_region(p, make_vec({0, 1.5 * t, 0, 0})), DomainError);
}

TEST_CASE("octopus_value catalog values") {
  OctopusParams p = canonical_octopus(3);
  double nu = gluing_balance(p);
  CHECK(octopus_value(p, Vec(Vec::Zero(3))) == 0);
  CHECK(octopus_value(p, Vec(Vec::Constant(3, 4 * p.tau))) ==
        doctest::Approx(-3 * nu).epsilon(1e-14));
  CHECK(octopus_value(p, make_vec({4 * p.tau, 0, 0})) ==
        doctest::Approx(-nu).epsilon(1e-14));
}

TEST_CASE("even symmetry is exact") {
  OctopusParams p = canonical_octopus(3);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    Vec x = interior_point(p, rng);
    Vec y = x;
    y[k % 3] = -y[k % 3];
    CHECK(octopus_value(p, x) == octopus_value(p, y));
  }
}

TEST_CASE("seam continuity to 1e-9 and the balance identity at 2 tau") {
  OctopusParams p = canonical_octopus(3);
  double t = p.tau;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 1000; ++k) {
    // x1 = tau seam between (1,1) and (1,2), neighbor coords in their boxes
    Vec y = make_vec({t, t * u(rng), t * u(rng)});
    double left = octopus_piece_value(p, {1, 1}, y);
    double right = octopus_piece_value(p, {1, 2}, y);
    CHECK(std::abs(left - right) <= 1e-9);
    // x1 = 2 tau seam between (1,2) and (2,1)
    Vec z = make_vec({2 * t, t * u(rng), t * u(rng)});
    double glue = octopus_piece_value(p, {1, 2}, z);
    double next = octopus_piece_value(p, {2, 1}, z);
    CHECK(std::abs(glue - next) <= 1e-9);
  }
  // at x_i = 2 tau with the next coordinate 0 the agreement is exactly
  // nu = -G1(2 tau) + 4 L tau^2
  Vec z0 = make_vec({2 * t, 0, 0});
  double lhs = octopus_piece_value(p, {1, 2}, z0);
  double rhs = octopus_piece_value(p, {2, 1}, z0);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  CHECK(gluing_balance(p) ==
        doctest::Approx(-gluing_g1(p, 2 * t) + 4 * p.sharpness * t * t)
            .epsilon(1e-14));
}

TEST_CASE("gradient matches finite differences at interior points") {
  for (int d : {2, 5, 10}) {
    OctopusParams p = canonical_octopus(d);
    std::mt19937_64 rng(100 + d);
    for (int k = 0; k < 200; ++k) {
      Vec x = interior_point(p, rng);
      Vec g = octopus_gradient(p, x);
      Vec fd = fd_gradient([&](const Vec& q) { return octopus_value(p, q); }, x);
      CHECK((g - fd).norm() <= 1e-5 * (1 + g.norm()));
    }
  }
}

TEST_CASE("hessian matches finite differences at interior points") {
  OctopusParams p = canonical_octopus(3);
  std::mt19937_64 rng(77);
  for (int k = 0; k < 50; ++k) {
    Vec x = interior_point(p, rng);
    Mat h = octopus_hessian(p, x);
    Mat fd = fd_hessian([&](const Vec& q) { return octopus_value(p, q); }, x);
    CHECK((h - fd).cwiseAbs().maxCoeff() <= 1e-3 * (1 + h.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("catalog: saddle gradients vanish, curvature is strictly negative") {
  for (int d : {2, 5}) {
    OctopusParams p = canonical_octopus(d);
    OctopusCatalog cat = octopus_catalog(p);
    CHECK(static_cast<int>(cat.saddles.size()) == d);
    CHECK(cat.min_value == doctest::Approx(-d * gluing_balance(p)).epsilon(1e-14));
    for (const Vec& s : cat.saddles) {
      CHECK(octopus_gradient(p, s).norm() <= 1e-10);
      Mat h = octopus_hessian(p, s);
      double mn = min_eigenvalue(h);
      CHECK(mn <= -2 * p.gamma + 1e-8);
      // diagonal with entries in {2L, -2 gamma} at region interiors
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) CHECK(h(i, j) == 0);
    }
    CHECK(octopus_gradient(p, cat.global_min).norm() <= 1e-12);
    // descent chain: -i nu strictly decreasing
    for (std::size_t i = 0; i + 1 < cat.saddles.size(); ++i)
      CHECK(octopus_value(p, cat.saddles[i]) >
            octopus_value(p, cat.saddles[i + 1]));
  }
}

TEST_CASE("composite stationary points of f + lambda l1") {
  OctopusParams p = canonical_octopus(2);
  double lam = 0.01;
  SmoothObjective f = make_octopus(p);
  CompositeObjective obj{f, lam};
  double eta = 0.9 / f.grad_lipschitz;
  // saddle-adjacent representative (4 tau - lam/(2L), 0)
  Vec xs = octopus_composite_saddle(p, 1, lam);
  CHECK(gradient_mapping(obj, xs, eta).norm() <= 1e-10);
  Vec xm = octopus_composite_min(p, lam);
  CHECK(gradient_mapping(obj, xm, eta).norm() <= 1e-10);
  CHECK(eval_phi(obj, xm) ==
        doctest::Approx(octopus_composite_min_value(p, lam)).epsilon(1e-13));
  CHECK(eval_phi(obj, xs) ==
        doctest::Approx(octopus_composite_saddle_value(p, 1, lam)).epsilon(1e-13));
}

TEST_CASE("declared Lipschitz constants hold on sampled pairs") {
  OctopusParams p = canonical_octopus(3);
  SmoothObjective f = make_octopus(p);
  CHECK(f.grad_lipschitz >= 2 * p.sharpness);
  std::mt19937_64 draw(55);
  Rng rng(56);
  auto sampler = [&](Rng&) { return interior_point(p, draw); };
  LipschitzAudit audit = lipschitz_audit(f, sampler, 1000, rng);
  CHECK(audit.pairs_used > 900);
  CHECK(audit.grad_ratio_max <= f.grad_lipschitz + 1e-9);
  // Pairs can straddle regions where only gradients stay Lipschitz-matched;
  // the declared rho is a within-patch constant, so audit it within a patch.
  std::uniform_real_distribution<double> u(0, 1);
  auto glue_sampler = [&](Rng&) {
    Vec x = Vec::Zero(3);
    x[0] = p.tau * (1.05 + 0.9 * u(draw));
    x[1] = 0.9 * p.tau * u(draw);
    return x;
  };
  LipschitzAudit glue_audit = lipschitz_audit(f, glue_sampler, 500, rng);
  CHECK(glue_audit.hess_ratio_max <= f.hess_lipschitz + 1e-9);
  CHECK(glue_audit.within_declared);
}

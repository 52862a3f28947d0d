#include "doctest.h"

#include "convdual/pl_function.hpp"
#include "convdual/sampling.hpp"

#include <cmath>

using namespace convdual;

namespace {

Vec s(double x) { return Vec::Constant(1, x); }

AffineFunctional a1(double phi, double c) { return {s(phi), c}; }

PLConvexFunction absval() { return PLConvexFunction({a1(1, 0), a1(-1, 0)}); }

PLConvexFunction delta0(int n) { return PLConvexFunction::indicator(Polyhedron::point(Vec::Zero(n))); }

// Brute-force max of raw pieces, ignoring the domain.
double raw_max(const std::vector<AffineFunctional>& ps, const Vec& x) {
  double m = -kInf;
  for (const AffineFunctional& u : ps) m = std::max(m, u.phi.dot(x) + u.c);
  return m;
}

}  // namespace

TEST_CASE("eval: spec examples") {
  CHECK(absval()(s(3)) == 3.0);
  CHECK(delta0(1)(s(0)) == 0.0);
  CHECK(delta0(1)(s(1)) == kInf);
  CHECK(PLConvexFunction({a1(1, 0), a1(2, -1)})(s(0.5)) == 0.5);
  CHECK_THROWS_AS(absval()(Vec::Zero(2)), InvalidArgument);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(PLConvexFunction({}), InvalidArgument);
  CHECK_THROWS_AS(PLConvexFunction({a1(1, 0), AffineFunctional{Vec::Zero(2), 0}}), InvalidArgument);
  CHECK_THROWS_AS(PLConvexFunction({a1(NAN, 0)}), InvalidArgument);
}

TEST_CASE("max2, sup_family, add, scale") {
  const PLConvexFunction x = PLConvexFunction::affine(s(1), 0);
  const PLConvexFunction mx = PLConvexFunction::affine(s(-1), 0);
  const PLConvexFunction abs2 = max2(x, mx);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(-5, 5);
    CHECK(abs2(s(t)) == std::abs(t));
    CHECK(max2(abs2, abs2)(s(t)) == abs2(s(t)));
    CHECK(scale(abs2, 2.0)(s(t)) == doctest::Approx(2 * std::abs(t)));
    CHECK(add(abs2, PLConvexFunction::zero(1))(s(t)) == abs2(s(t)));
  }
  const PLConvexFunction shifted({a1(1, -1), a1(-1, 1)});
  CHECK(add(abs2, shifted)(s(0.5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(scale(abs2, -1.0), InvalidArgument);
  CHECK_THROWS_AS(sup_family({}), InvalidArgument);

  // scale by 0 keeps the domain.
  const PLConvexFunction boxed = PLConvexFunction::indicator(Polyhedron::cube(1));
  CHECK(scale(boxed, 0.0)(s(0.5)) == 0.0);
  CHECK(scale(boxed, 0.0)(s(2.0)) == kInf);
}

TEST_CASE("sup_family matches brute-force max") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 4);
    std::vector<PLConvexFunction> fs;
    std::vector<AffineFunctional> raw;
    for (int k = 0; k < 6; ++k) {
      raw.push_back(random_affine(rng, n));
      fs.push_back(PLConvexFunction({raw.back()}));
    }
    const PLConvexFunction sup = sup_family(fs);
    for (const Vec& x : random_points(rng, n, 100, 3.0)) CHECK(sup(x) == raw_max(raw, x));
  }
}

TEST_CASE("max2 of gauges is the gauge of the intersection") {
  // Gauges of the square and the diamond as PL functions.
  std::vector<AffineFunctional> sq, di;
  for (int i = 0; i < 2; ++i) {
    sq.push_back({Vec::Unit(2, i), 0});
    sq.push_back({-Vec::Unit(2, i), 0});
  }
  for (double a : {-1.0, 1.0}) {
    for (double b : {-1.0, 1.0}) {
      Vec g(2);
      g << a / 1.5, b / 1.5;
      di.push_back({g, 0});
    }
  }
  const PLConvexFunction m = max2(PLConvexFunction(sq), PLConvexFunction(di));
  const Polyhedron inter = to_hrep(intersect(Polyhedron::cube(2), Polyhedron::cross_polytope(2, 1.5)));
  Rng rng(4);
  for (const Vec& x : random_points(rng, 2, 100, 2.0)) {
    double gauge = 0.0;
    for (const Halfspace& h : inter.halfspaces()) gauge = std::max(gauge, h.normal.dot(x) / h.offset);
    CHECK(m(x) == doctest::Approx(gauge).epsilon(1e-12));
  }
}

TEST_CASE("minimize_pl") {
  const Minimum m = minimize_pl(absval());
  CHECK(m.value == doctest::Approx(0.0));
  REQUIRE(m.argmin);
  CHECK(std::abs((*m.argmin)(0)) <= 1e-12);
  CHECK(minimize_pl(PLConvexFunction::affine(s(1), 0)).value == -kInf);
  CHECK_FALSE(minimize_pl(PLConvexFunction::affine(s(1), 0)).argmin);

  // max{x1 + x2, -x1, -x2} against a dense grid on [-10, 10]^2. The minimum is
  // 0 at the origin; a 0.01 grid hits it exactly.
  Vec p1(2), p2(2), p3(2);
  p1 << 1, 1;
  p2 << -1, 0;
  p3 << 0, -1;
  const PLConvexFunction f({{p1, 0}, {p2, 0}, {p3, 0}});
  double grid_min = kInf;
  for (int i = -1000; i <= 1000; i += 5) {
    for (int j = -1000; j <= 1000; j += 5) {
      Vec x(2);
      x << i * 0.01, j * 0.01;
      grid_min = std::min(grid_min, f(x));
    }
  }
  CHECK(std::abs(minimize_pl(f).value - grid_min) <= 1e-6);
}

TEST_CASE("minimize_pl agrees with grid search on random functions") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(1, 2);
    const PLConvexFunction f = random_pl(rng, n, 5, DomainKind::kPolytope);
    const Minimum m = minimize_pl(f);
    REQUIRE(m.argmin);
    // The grid minimum can only be above the true minimum, and approaches it
    // within the Lipschitz constant times the grid spacing.
    double grid_min = kInf;
    const int steps = n == 1 ? 40000 : 400;
    const double h = 4.0 / steps;
    if (n == 1) {
      for (int i = 0; i <= steps; ++i) grid_min = std::min(grid_min, f(s(-2 + i * h)));
    } else {
      for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
          Vec x(2);
          x << -2 + i * h, -2 + j * h;
          grid_min = std::min(grid_min, f(x));
        }
      }
    }
    CHECK(m.value <= grid_min + 1e-9);
    CHECK(grid_min - m.value <= 2 * 2.0 * std::sqrt(2.0) * h + 1e-9);
    CHECK(f(*m.argmin) == doctest::Approx(m.value).epsilon(1e-9));
  }
}

TEST_CASE("is_leq") {
  CHECK(is_leq(absval(), add_affine(absval(), s(0), 1.0)));
  CHECK_FALSE(is_leq(absval(), PLConvexFunction::affine(s(1), 0)));
  const auto w = leq_violation(absval(), PLConvexFunction::affine(s(1), 0));
  REQUIRE(w);
  CHECK(absval()(*w) > (*w)(0));
  // Indicator domains: delta_[-1,1] <= delta_{0}, not the other way around.
  const PLConvexFunction box = PLConvexFunction::indicator(Polyhedron::cube(1));
  CHECK(is_leq(box, delta0(1)));
  CHECK_FALSE(is_leq(delta0(1), box));
  CHECK(is_leq(absval(), delta0(1)));
}

TEST_CASE("is_leq on certified pairs agrees with sampling") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.integer(1, 3);
    const auto [f, g] = certified_pair(rng, n, 5);
    CHECK(is_leq(f, g));
    int bad = 0;
    for (const Vec& x : random_points(rng, n, 10000 / 60, 3.0)) bad += f(x) > g(x) + 1e-12;
    CHECK(bad == 0);
  }
}

TEST_CASE("is_leq is a partial order on random triples") {
  Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(1, 3);
    const PLConvexFunction f = random_pl(rng, n, 4);
    const PLConvexFunction g = random_pl(rng, n, 4);
    const PLConvexFunction h = random_pl(rng, n, 4);
    CHECK(is_leq(f, f));
    const PLConvexFunction fg = max2(f, g);
    const PLConvexFunction fgh = max2(fg, h);
    CHECK(is_leq(f, fg));
    CHECK(is_leq(fg, fgh));
    CHECK(is_leq(f, fgh));
    // Antisymmetry on canonical forms.
    const PLConvexFunction c = canonicalize(max2(f, f));
    CHECK(is_leq(c, f));
    CHECK(is_leq(f, c));
    CHECK(c.pieces().size() <= f.pieces().size());
    if (is_leq(g, f) && is_leq(f, g)) {
      CHECK(canonicalize(f).pieces().size() == canonicalize(g).pieces().size());
    }
  }
}

TEST_CASE("canonicalize and minorants") {
  const PLConvexFunction f({a1(1, 0), a1(-1, 0), a1(0, -1), a1(0.5, -2)});
  const std::vector<AffineFunctional> m = minorants(f);
  REQUIRE(m.size() == 2);
  CHECK(m[0].phi(0) == -1.0);
  CHECK(m[1].phi(0) == 1.0);
  CHECK(minorants(PLConvexFunction::affine(s(2), 1)).size() == 1);

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 3);
    const PLConvexFunction g = random_pl(rng, n, 8, trial % 2 ? DomainKind::kPolytope : DomainKind::kNone);
    const std::vector<AffineFunctional> ms = minorants(g);
    std::vector<PLConvexFunction> singles;
    for (const AffineFunctional& u : ms) {
      CHECK(is_leq(PLConvexFunction({u}), g));
      singles.push_back(PLConvexFunction({u}));
    }
    const PLConvexFunction sup = sup_family(singles);
    const Polyhedron dom = g.has_domain() ? *g.domain() : Polyhedron::cube(n, 3.0);
    for (const Vec& x : random_points_in(rng, dom, 1000 / 20)) {
      CHECK(sup(x) == doctest::Approx(g(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("homogenize") {
  const PLConvexFunction p = homogenize(absval());
  Vec xr(2);
  xr << -2.0, 5.0;
  CHECK(p(xr) == 2.0);
  const PLConvexFunction q = homogenize(PLConvexFunction::affine(s(1), 1));
  CHECK(q(xr) == 3.0);

  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(1, 3);
    const PLConvexFunction f = random_pl(rng, n, 5, trial % 2 ? DomainKind::kPolytope : DomainKind::kNone);
    const PLConvexFunction h = homogenize(f);
    for (const Vec& x : random_points(rng, n, 100, 3.0)) {
      Vec x1(n + 1);
      x1 << x, 1.0;
      const double fx = f(x);
      if (fx == kInf) {
        CHECK(h(x1) == kInf);
      } else {
        CHECK(std::abs(h(x1) - fx) <= 1e-12);
      }
      // Positive homogeneity.
      if (fx == kInf) {
        CHECK(h(2.5 * x1) == kInf);
      } else {
        CHECK(h(2.5 * x1) == doctest::Approx(2.5 * fx));
      }
    }
  }
}

TEST_CASE("lipschitz_bound") {
  CHECK(lipschitz_bound(absval(), s(0)) == 1.0);
  CHECK(lipschitz_bound(PLConvexFunction::affine(s(2), 3), s(0)) == 5.0);
  CHECK_THROWS_AS(lipschitz_bound(PLConvexFunction::indicator(Polyhedron::cube(1)), s(0)), InvalidArgument);

  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(1, 3);
    const PLConvexFunction f = random_pl(rng, n, 6);
    const Vec x0 = Vec::Zero(n);
    // Sampled difference quotients, including far out along each gradient
    // where the steepest piece is active.
    std::vector<Vec> pts = random_points(rng, n, 300, 4.0);
    for (const AffineFunctional& u : f.pieces()) pts.push_back(1e3 * u.phi.normalized());
    double quotient = 0.0;
    for (const Vec& x : pts) {
      for (const AffineFunctional& u : f.pieces()) {
        const Vec y = x + 1e-3 * u.phi.normalized();
        quotient = std::max(quotient, std::abs(f(y) - f(x)) / (y - x).norm());
      }
    }
    CHECK(std::abs(lipschitz_bound(f, x0) - (std::abs(f(x0)) + quotient)) <= 1e-6);
  }
}

TEST_CASE("eval_batch matches serial evaluation") {
  Rng rng(15);
  const PLConvexFunction f = random_pl(rng, 3, 10, DomainKind::kHalfspaces);
  const auto pts = random_points(rng, 3, 5000, 3.0);
  CHECK(eval_batch(f, pts) == eval_batch_serial(f, pts));
}

TEST_CASE("sup of a uniformly Lipschitz family stays within the uniform bound") {
  // The uniform bound is max |f_k(x0)| + max slope_k; the max of the
  // individual bounds is not enough (sup{10, x} at 0 has bound 11).
  CHECK(lipschitz_bound(max2(PLConvexFunction::constant(1, 10), PLConvexFunction::affine(s(1), 0)), s(0)) == 11.0);
  Rng rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(1, 3);
    std::vector<PLConvexFunction> fs;
    double value = 0.0, slope = 0.0;
    const Vec x0 = Vec::Zero(n);
    for (int k = 0; k < 4; ++k) {
      fs.push_back(random_pl(rng, n, 3));
      value = std::max(value, std::abs(fs.back()(x0)));
      slope = std::max(slope, lipschitz_bound(fs.back(), x0) - std::abs(fs.back()(x0)));
    }
    CHECK(lipschitz_bound(sup_family(fs), x0) <= value + slope + 1e-12);
  }
}

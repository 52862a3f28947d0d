#include "doctest.h"

#include "convdual/fenchel.hpp"
#include "convdual/sampling.hpp"
#include "convdual/transforms.hpp"

#include <cmath>

using namespace convdual;

namespace {

bool close(double a, double b, double tol) {
  if (a == kInf || b == kInf) return a == b;
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

// Evaluates T(f) at y straight from the defining formula.
double formula(const CanonicalTransform& t, const PLConvexFunction& f, const Vec& y) {
  const PLConvexFunction base = t.mode == TransformMode::kPreserving ? f : conjugate_pl(f);
  return apply_pointwise(t, [&](const Vec& x) { return base(x); }, y);
}

}  // namespace

TEST_CASE("apply: identity parameters") {
  Rng rng(31);
  const PLConvexFunction f = random_pl(rng, 2, 5, DomainKind::kPolytope);
  const PLConvexFunction same = apply(CanonicalTransform::identity(2), f);
  const PLConvexFunction fs = apply(CanonicalTransform::identity(2, TransformMode::kReversing), f);
  const PLConvexFunction back = apply(CanonicalTransform::identity(2, TransformMode::kReversing), fs);
  const PLConvexFunction oracle = conjugate_pl(f);
  for (const Vec& y : random_points(rng, 2, 200, 3.0)) {
    CHECK(same(y) == f(y));
    CHECK(close(fs(y), oracle(y), 1e-12));
    CHECK(close(back(y), f(y), 1e-9));
  }
}

TEST_CASE("apply: alpha = 2, U = diag(1, 2) on |x1| + |x2|") {
  std::vector<AffineFunctional> ps;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-1.0, 1.0}) {
      Vec g(2);
      g << a, b;
      ps.push_back({g, 0.0});
    }
  }
  const PLConvexFunction f(ps);
  CanonicalTransform t = CanonicalTransform::identity(2);
  t.alpha = 2.0;
  t.U(1, 1) = 2.0;
  t.shift << 0.5, -1;
  t.phi0 << 1, 0;
  t.r0 = 3;
  const PLConvexFunction tf = apply(t, f);
  Rng rng(32);
  for (const Vec& y : random_points(rng, 2, 500, 3.0)) {
    const double expected = 2.0 * (std::abs(y(0) + 0.5) + std::abs(2 * y(1) - 1)) + y(0) + 3;
    CHECK(close(tf(y), expected, 1e-10));
  }
}

TEST_CASE("apply matches the formula on random transforms") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(1, 3);
    const TransformMode mode = trial % 2 ? TransformMode::kReversing : TransformMode::kPreserving;
    const CanonicalTransform t = random_transform(rng, n, mode);
    const PLConvexFunction f = random_pl(rng, n, 4, static_cast<DomainKind>(trial % 3));
    const PLConvexFunction tf = apply(t, f);
    for (const Vec& y : random_points(rng, n, 50, 3.0)) CHECK(close(tf(y), formula(t, f, y), 1e-9));
  }
}

TEST_CASE("validation") {
  CanonicalTransform t = CanonicalTransform::identity(2);
  t.U(1, 1) = 0.0;
  CHECK_THROWS_AS(t.validate(), InvalidArgument);
  CanonicalTransform u = CanonicalTransform::identity(2);
  u.alpha = 0.0;
  CHECK_THROWS_AS(u.validate(), InvalidArgument);
  CHECK_THROWS_AS(invert(CanonicalTransform::identity(2, TransformMode::kReversing)), InvalidArgument);
  CHECK_THROWS_AS(apply(CanonicalTransform::identity(2), PLConvexFunction::zero(3)), InvalidArgument);
}

TEST_CASE("invert") {
  const CanonicalTransform id = invert(CanonicalTransform::identity(3));
  CHECK(parameter_distance(id, CanonicalTransform::identity(3)) == 0.0);
  Rng rng(34);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 4);
    const CanonicalTransform t = random_transform(rng, n, TransformMode::kPreserving);
    CHECK(parameter_distance(invert(invert(t)), t) <= 1e-12);
    const PLConvexFunction f = random_pl(rng, n, 4, static_cast<DomainKind>(trial % 3));
    const PLConvexFunction back = apply(invert(t), apply(t, f));
    for (const Vec& x : random_points(rng, n, 20, 3.0)) {
      const double a = back(x), b = f(x);
      CHECK((a == kInf) == (b == kInf));
      if (b != kInf) worst = std::max(worst, std::abs(a - b));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("compose") {
  Rng rng(35);
  const CanonicalTransform f2 = compose(CanonicalTransform::identity(2, TransformMode::kReversing),
                                        CanonicalTransform::identity(2, TransformMode::kReversing));
  CHECK(f2.mode == TransformMode::kPreserving);
  CHECK(parameter_distance(f2, CanonicalTransform::identity(2)) <= 1e-15);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(1, 3);
    const CanonicalTransform s = random_transform(rng, n, rng.coin() ? TransformMode::kReversing : TransformMode::kPreserving);
    const CanonicalTransform t = random_transform(rng, n, rng.coin() ? TransformMode::kReversing : TransformMode::kPreserving);
    if (s.mode == TransformMode::kPreserving) {
      CHECK(parameter_distance(compose(s, invert(s)), CanonicalTransform::identity(n)) <= 1e-9);
    }
    const CanonicalTransform st = compose(s, t);
    CHECK((st.mode == TransformMode::kReversing) == (s.mode != t.mode));
    const PLConvexFunction f = random_pl(rng, n, 4, DomainKind::kPolytope);
    const PLConvexFunction seq = apply(s, apply(t, f));
    const PLConvexFunction direct = apply(st, f);
    for (const Vec& y : random_points(rng, n, 20, 3.0)) CHECK(close(direct(y), seq(y), 1e-9));
  }
}

TEST_CASE("order law, sup commutation and affinity") {
  Rng rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.integer(1, 3);
    const TransformMode mode = trial % 2 ? TransformMode::kReversing : TransformMode::kPreserving;
    const CanonicalTransform t = random_transform(rng, n, mode);
    const auto [f, g] = certified_pair(rng, n, 4);
    if (mode == TransformMode::kPreserving) {
      CHECK(is_leq(apply(t, f), apply(t, g)));
    } else {
      CHECK(is_leq(apply(t, g), apply(t, f)));
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 3);
    const CanonicalTransform t = random_transform(rng, n, TransformMode::kPreserving);
    std::vector<PLConvexFunction> fam, images;
    for (int k = 0; k < 4; ++k) {
      fam.push_back(random_pl(rng, n, 3));
      images.push_back(apply(t, fam.back()));
    }
    const PLConvexFunction lhs = apply(t, sup_family(fam));
    const PLConvexFunction rhs = sup_family(images);
    for (const Vec& y : random_points(rng, n, 100, 3.0)) CHECK(std::abs(lhs(y) - rhs(y)) <= 1e-10 * (1 + std::abs(rhs(y))));

    const AffineFunctional u = random_affine(rng, n), v = random_affine(rng, n);
    const double lambda = rng.uniform(0, 1);
    const PLConvexFunction mix = PLConvexFunction::affine(lambda * u.phi + (1 - lambda) * v.phi, lambda * u.c + (1 - lambda) * v.c);
    const PLConvexFunction tu = apply(t, PLConvexFunction({u})), tv = apply(t, PLConvexFunction({v}));
    const PLConvexFunction tmix = apply(t, mix);
    for (const Vec& y : random_points(rng, n, 20, 3.0)) {
      CHECK(tmix(y) == doctest::Approx(lambda * tu(y) + (1 - lambda) * tv(y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("bounded continuity along a converging sequence") {
  Rng rng(37);
  const int n = 2;
  const PLConvexFunction f = random_pl(rng, n, 4);
  const CanonicalTransform t = random_transform(rng, n, TransformMode::kPreserving);
  const PLConvexFunction tf = apply(t, f);
  const auto grid = random_points(rng, n, 200, 2.0);
  double previous = kInf;
  for (int k = 1; k <= 64; k *= 2) {
    const PLConvexFunction fk = add_affine(f, Vec::Zero(n), 1.0 / k);
    const PLConvexFunction tfk = apply(t, fk);
    double err = 0.0;
    for (const Vec& y : grid) err = std::max(err, std::abs(tfk(y) - tf(y)));
    CHECK(err <= previous);
    CHECK(err == doctest::Approx(t.alpha / k));
    previous = err;
  }
}

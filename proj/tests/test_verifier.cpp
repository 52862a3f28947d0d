#include "doctest.h"

#include "convdual/fenchel.hpp"
#include "convdual/sampling.hpp"
#include "convdual/verifier.hpp"

#include <cmath>

using namespace convdual;

namespace {

Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

std::vector<FunctionPair> pairs(std::uint64_t seed, int count, int max_n = 3) {
  Rng rng(seed);
  std::vector<FunctionPair> out;
  for (int k = 0; k < count; ++k) out.push_back(certified_pair(rng, 1 + k % max_n, rng.integer(1, 4)));
  return out;
}

FunctionOracle fenchel_oracle(int n) {
  return {ConeTag::kConv, n, [](const PLConvexFunction& f) { return conjugate_pl(f); }};
}

}  // namespace

TEST_CASE("order relation: conjugation reverses, identity preserves") {
  const auto ps = pairs(11, 500);
  const CheckReport rev = check_order_relation(fenchel_oracle(0), TransformMode::kReversing, ps, fenchel_oracle(0), 11);
  CHECK(rev.violations == 0);
  CHECK(rev.samples >= 500);
  const FunctionOracle id{ConeTag::kConv, 0, [](const PLConvexFunction& f) { return f; }};
  CHECK(check_order_relation(id, TransformMode::kPreserving, ps, id, 11).violations == 0);
  // Reading conjugation as order preserving is refuted.
  CHECK(check_order_relation(fenchel_oracle(0), TransformMode::kPreserving, ps).violations > 0);
}

TEST_CASE("order relation: negation is refuted with witnesses") {
  const auto ps = pairs(12, 50, 2);
  const FunctionOracle neg{ConeTag::kConv, 0, [](const PLConvexFunction& f) {
                             std::vector<AffineFunctional> pieces;
                             for (const AffineFunctional& u : f.pieces()) pieces.push_back({-u.phi, -u.c});
                             if (pieces.size() != 1 || f.has_domain()) throw InvalidArgument("-f is not convex");
                             return PLConvexFunction(pieces);
                           }};
  const CheckReport r = check_order_relation(neg, TransformMode::kPreserving, ps);
  CHECK(r.violations > 0);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("sup commutation: canonical transforms, singleton, broken oracle") {
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const int n = 1 + k % 3;
    const CanonicalTransform t = random_transform(rng, n, TransformMode::kPreserving);
    std::vector<PLConvexFunction> fam;
    for (int j = 0; j < 3; ++j) fam.push_back(random_pl(rng, n, 3, DomainKind::kHalfspaces));
    CHECK(check_sup_commutation(transform_oracle(t), fam, k).max_error <= 1e-10);
    CHECK(check_sup_commutation(transform_oracle(t), {fam.front()}, k).max_error == 0.0);
  }
  // Adds a constant that depends on f.
  const FunctionOracle broken{ConeTag::kConv, 2, [](const PLConvexFunction& f) {
                                return add_affine(f, Vec::Zero(2), static_cast<double>(f.pieces().size()));
                              }};
  std::vector<PLConvexFunction> fam{random_pl(rng, 2, 2), random_pl(rng, 2, 3)};
  const CheckReport r = check_sup_commutation(broken, fam, 3);
  CHECK(r.max_error > 0.5);
  CHECK(r.violations > 0);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("limsup commutation: shifted sequence, constant sequence, shrinking cones") {
  Rng rng(14);
  const PLConvexFunction f = random_pl(rng, 2, 4);
  const CanonicalTransform t = random_transform(rng, 2, TransformMode::kPreserving);
  std::vector<PLConvexFunction> shifted, constant;
  for (int k = 1; k <= 20; ++k) {
    shifted.push_back(add_affine(f, Vec::Zero(2), 1.0 / k));
    constant.push_back(f);
  }
  const CheckReport r = check_limsup_commutation(transform_oracle(t), shifted, f, 14);
  CHECK(r.violations == 0);
  REQUIRE(r.series.size() == 20);
  // The tail error decays like 1/k.
  for (std::size_t k = 0; k < r.series.size(); ++k) {
    const double scaled = r.series[k] * static_cast<double>(k + 1);
    CHECK(scaled <= r.series[0] * 1.01);
    CHECK(scaled >= r.series[0] * 0.5);
  }
  const CheckReport c = check_limsup_commutation(transform_oracle(t), constant, f, 14);
  for (double e : c.series) CHECK(e <= 1e-12);

  // f_k = max(f, k |x|_1 - k^2): pointwise f_k -> f on bounded sets.
  std::vector<PLConvexFunction> cones;
  for (int k = 1; k <= 12; ++k) {
    std::vector<AffineFunctional> pieces = f.pieces();
    for (int s = 0; s < 4; ++s) {
      Vec phi(2);
      phi << (s & 1 ? 1.0 : -1.0) * k, (s & 2 ? 1.0 : -1.0) * k;
      pieces.push_back({phi, -static_cast<double>(k * k)});
    }
    cones.push_back(PLConvexFunction(pieces));
  }
  const CheckReport s = check_limsup_commutation(transform_oracle(t), cones, f, 15, 200);
  CHECK(s.violations == 0);
  CHECK(s.series.back() <= 1e-12);

  std::vector<PLConvexFunction> divergent(5, add_affine(f, Vec::Zero(2), 1.0));
  CHECK_THROWS_AS(check_limsup_commutation(transform_oracle(t), divergent, f), InvalidArgument);
}

TEST_CASE("segment minimum upper bound") {
  const AffineFunctional u{vec3(1, 0, 0), 0.0}, v{vec3(0, 1, 0), 0.0};
  const CheckReport half = check_segment_mub(u, v, AffineFunctional{vec3(0.5, 0.5, 0), -1.0});
  CHECK(half.violations == 0);
  REQUIRE(half.series.size() == 1);
  CHECK(half.series[0] == doctest::Approx(0.5));
  const CheckReport same = check_segment_mub(u, v, u);
  REQUIRE(same.series.size() == 1);
  CHECK(same.series[0] == doctest::Approx(1.0));
  // Gradient off the segment: not below max(u, v), so filtered out.
  CHECK(check_segment_mub(u, v, AffineFunctional{vec3(0, 0, 1), -1.0}).samples == 0);
  CHECK(check_segment_mub(u, v, AffineFunctional{vec3(1.5, -0.5, 0), -1.0}).samples == 0);

  const CheckReport rnd = check_segment_mub(u, v, 21, 200);
  CHECK(rnd.samples == 200);
  CHECK(rnd.violations == 0);
  for (double lambda : rnd.series) CHECK((lambda >= -1e-12 && lambda <= 1.0 + 1e-12));

  Vec p(2), q(2);
  p << 1, 0;
  q << 0, 1;
  CHECK_THROWS_AS(check_segment_mub(AffineFunctional{p, 0}, AffineFunctional{q, 0}, 1), InvalidArgument);
  CHECK_THROWS_AS(check_segment_mub(u, AffineFunctional{u.phi, 1.0}, 1), InvalidArgument);
}

TEST_CASE("generating classes") {
  std::vector<AffineFunctional> linf;
  for (int i = 0; i < 3; ++i) {
    for (double s : {1.0, -1.0}) linf.push_back({s * Vec::Unit(3, i), 0.0});
  }
  CHECK(check_generating_class(ConeTag::kSemn, PLConvexFunction(linf), 1).max_error <= 1e-9);
  CHECK(check_generating_class(ConeTag::kSubl, PLConvexFunction::affine(vec3(1, -2, 3), 0.0), 1).max_error <= 1e-9);

  // Gauge of a shifted simplex containing the origin.
  const Polyhedron simplex = Polyhedron::from_vertices(
      2, {(Vec(2) << -0.5, -0.3).finished(), (Vec(2) << 1.5, -0.3).finished(), (Vec(2) << -0.5, 1.7).finished()});
  const CheckReport mink = check_generating_class(ConeTag::kMink, MinkowskiGauge(simplex).to_pl(), 2);
  CHECK(mink.violations == 0);
  CHECK(mink.max_error <= 1e-9);

  Rng rng(3);
  CHECK(check_generating_class(ConeTag::kConv, random_pl(rng, 3, 5, DomainKind::kPolytope), 4).max_error <= 1e-9);
  // A non-homogeneous function is not in the sublinear cone.
  CHECK(check_generating_class(ConeTag::kSubl, PLConvexFunction::affine(vec3(1, 0, 0), 1.0), 1).violations > 0);
}

TEST_CASE("suites are deterministic and clean") {
  for (const std::string& s : {"fenchel", "cones", "mub", "generating"}) {
    const SuiteReport a = run_suite(s, 5), b = run_suite(s, 5);
    CHECK(a.violations() == 0);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].check == b.checks[i].check);
      CHECK(a.checks[i].max_error == b.checks[i].max_error);
      CHECK(a.checks[i].seed == 5);
      if (i > 0) CHECK(a.checks[i - 1].check < a.checks[i].check);
    }
  }
  CHECK_THROWS_AS(run_suite("nope", 1), InvalidArgument);
}

TEST_CASE("induced set maps of canonical sublinear oracles are lattice isomorphisms") {
  const SuiteReport r = run_suite("lattice", 9);
  CHECK(r.violations() == 0);
  bool seen = false;
  for (const CheckReport& c : r.checks) seen = seen || c.check == "lattice.induced_by_sublinear";
  CHECK(seen);
}

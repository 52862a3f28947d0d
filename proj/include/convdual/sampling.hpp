#pragma once

// Seeded random generators for functions, bodies, matrices and transforms.

#include "convdual/pl_function.hpp"
#include "convdual/transforms.hpp"

#include <cstdint>
#include <random>

namespace convdual {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  Vec uniform_vec(int n, double lo, double hi);
  Vec normal_vec(int n);
  Vec unit_vec(int n);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

enum class DomainKind { kNone, kPolytope, kHalfspaces };

AffineFunctional random_affine(Rng& rng, int n, double scale = 2.0);
// Max of `pieces` random affine functions, optionally restricted to a random
// polytope or a random (possibly unbounded) intersection of halfspaces; the
// domain always contains a neighbourhood of the origin.
PLConvexFunction random_pl(Rng& rng, int n, int pieces, DomainKind domain = DomainKind::kNone);

// conv of k random points; full-dimensional for k > n with probability 1.
Polyhedron random_polytope(Rng& rng, int n, int k, double radius = 1.0);
// Random polytope containing the ball of radius `inner` around the origin.
Polyhedron random_polytope_around_origin(Rng& rng, int n, int k, double inner = 0.2);
// conv{+-v_1, ..., +-v_k}.
Polyhedron random_symmetric_polytope(Rng& rng, int n, int k);

// Random matrix with condition number at most `max_cond`.
Mat random_gl(Rng& rng, int n, double max_cond = 20.0);
Mat random_orthonormal(Rng& rng, int n, int k);

CanonicalTransform random_transform(Rng& rng, int n, TransformMode mode);

// A pair (f, g) with f <= g by construction: g is random, on a domain
// (a polytope for n <= 3, halfspaces above) or on R^n; f drops some of g's
// pieces, subtracts a positive constant and lives on a larger domain or R^n.
std::pair<PLConvexFunction, PLConvexFunction> certified_pair(Rng& rng, int n, int pieces);

std::vector<Vec> random_points(Rng& rng, int n, int count, double radius);
// Random points of a nonempty polyhedron (convex combinations of vertices plus
// nonnegative combinations of rays).
std::vector<Vec> random_points_in(Rng& rng, const Polyhedron& p, int count);

}  // namespace convdual

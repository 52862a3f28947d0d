#include "convdual/sampling.hpp"

#include <cmath>

namespace convdual {

Vec Rng::uniform_vec(int n, double lo, double hi) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Vec Rng::normal_vec(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Vec Rng::unit_vec(int n) {
  while (true) {
    Vec v = normal_vec(n);
    const double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
}

AffineFunctional random_affine(Rng& rng, int n, double scale) {
  return {rng.uniform_vec(n, -scale, scale), rng.uniform(-1.0, 1.0)};
}

PLConvexFunction random_pl(Rng& rng, int n, int pieces, DomainKind domain) {
  std::vector<AffineFunctional> ps;
  for (int i = 0; i < pieces; ++i) ps.push_back(random_affine(rng, n));
  switch (domain) {
    case DomainKind::kNone:
      return PLConvexFunction(std::move(ps));
    case DomainKind::kPolytope:
      return PLConvexFunction(std::move(ps), scale(random_polytope_around_origin(rng, n, n + 3, 0.3), 2.0));
    case DomainKind::kHalfspaces: {
      std::vector<Halfspace> hs;
      const int k = rng.integer(1, n + 1);
      for (int i = 0; i < k; ++i) hs.push_back({rng.unit_vec(n), rng.uniform(0.5, 2.0)});
      return PLConvexFunction(std::move(ps), Polyhedron::from_halfspaces(n, std::move(hs)));
    }
  }
  throw InvalidArgument("random_pl: unknown domain kind");
}

Polyhedron random_polytope(Rng& rng, int n, int k, double radius) {
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) pts.push_back(radius * rng.uniform(0.3, 1.0) * rng.unit_vec(n) + 0.3 * radius * rng.uniform_vec(n, -1.0, 1.0));
  return reduce_vrep(Polyhedron::from_vertices(n, std::move(pts)));
}

Polyhedron random_polytope_around_origin(Rng& rng, int n, int k, double inner) {
  std::vector<Vec> pts;
  const double r = inner * std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) {
    pts.push_back(r * Vec::Unit(n, i));
    pts.push_back(-r * Vec::Unit(n, i));
  }
  for (int i = 0; i < k; ++i) pts.push_back(rng.uniform(0.5, 1.0) * rng.unit_vec(n));
  return reduce_vrep(Polyhedron::from_vertices(n, std::move(pts)));
}

Polyhedron random_symmetric_polytope(Rng& rng, int n, int k) {
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) {
    const Vec v = rng.uniform(0.5, 1.5) * rng.unit_vec(n);
    pts.push_back(v);
    pts.push_back(-v);
  }
  return reduce_vrep(Polyhedron::from_vertices(n, std::move(pts)));
}

Mat random_gl(Rng& rng, int n, double max_cond) {
  while (true) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
    }
    const Eigen::JacobiSVD<Mat> svd(a);
    const Vec s = svd.singularValues();
    if (s(n - 1) > 0.0 && s(0) / s(n - 1) <= max_cond) return a;
  }
}

Mat random_orthonormal(Rng& rng, int n, int k) {
  Mat a(n, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) a(i, j) = rng.normal();
  }
  const Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ() * Mat::Identity(n, k);
}

CanonicalTransform random_transform(Rng& rng, int n, TransformMode mode) {
  CanonicalTransform t;
  t.alpha = rng.uniform(0.5, 2.0);
  t.U = random_gl(rng, n);
  t.shift = rng.normal_vec(n);
  t.phi0 = rng.normal_vec(n);
  t.r0 = rng.normal();
  t.mode = mode;
  return t;
}

std::pair<PLConvexFunction, PLConvexFunction> certified_pair(Rng& rng, int n, int pieces) {
  const int kind = rng.integer(0, 2);
  // Polytope domains need vertex enumeration; above n = 3 use halfspaces.
  const DomainKind bounded = n <= 3 ? DomainKind::kPolytope : DomainKind::kHalfspaces;
  const PLConvexFunction g = random_pl(rng, n, pieces, kind == 2 ? DomainKind::kNone : bounded);
  std::vector<AffineFunctional> kept;
  const double drop = rng.uniform(0.1, 1.0);
  for (const AffineFunctional& u : g.pieces()) {
    if (kept.empty() || rng.coin()) kept.push_back({u.phi, u.c - drop});
  }
  std::optional<Polyhedron> domain;
  // Domains of random_pl contain the origin, so scaling up enlarges them.
  if (kind == 1) domain = scale(*g.domain(), rng.uniform(1.2, 2.0));
  return {PLConvexFunction(std::move(kept), std::move(domain)), g};
}

std::vector<Vec> random_points(Rng& rng, int n, int count, double radius) {
  std::vector<Vec> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(rng.uniform_vec(n, -radius, radius));
  return pts;
}

std::vector<Vec> random_points_in(Rng& rng, const Polyhedron& p, int count) {
  const Polyhedron v = to_vrep(p);
  if (v.vertices().empty()) throw InvalidArgument("random_points_in: empty polyhedron");
  std::vector<Vec> pts;
  pts.reserve(count);
  std::exponential_distribution<double> expo(1.0);
  for (int i = 0; i < count; ++i) {
    Vec x = Vec::Zero(p.dim());
    double total = 0.0;
    for (const Vec& vert : v.vertices()) {
      const double w = expo(rng.engine());
      x += w * vert;
      total += w;
    }
    x /= total;
    for (const Vec& r : v.rays()) x += expo(rng.engine()) * r;
    pts.push_back(x);
  }
  return pts;
}

}  // namespace convdual

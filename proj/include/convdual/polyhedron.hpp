#pragma once

// Convex polyhedra in R^n.
//
// A Polyhedron carries a V-representation (generating points plus recession
// rays; a line is stored as two opposite rays), an H-representation
// (halfspaces normal . x <= offset), or both. Conversions between the two are
// done by brute-force enumeration of active sets, which is exact up to
// floating-point tolerance and fast enough for the small bodies (n <= 4,
// tens of constraints) this library targets.

#include "convdual/types.hpp"

#include <optional>

namespace convdual {

struct Halfspace {
  Vec normal;
  double offset = 0.0;
};

struct PolyhedronFlags {
  bool empty = false;
  bool bounded = false;
  bool contains_origin = false;
  bool symmetric = false;
};

class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_vertices(int dim, std::vector<Vec> vertices, std::vector<Vec> rays = {});
  static Polyhedron from_halfspaces(int dim, std::vector<Halfspace> halfspaces);
  // Both representations, assumed consistent.
  static Polyhedron from_both(int dim, std::vector<Vec> vertices, std::vector<Vec> rays,
                             std::vector<Halfspace> halfspaces);

  static Polyhedron whole_space(int dim);
  static Polyhedron empty(int dim);
  static Polyhedron point(const Vec& p);
  static Polyhedron segment(const Vec& a, const Vec& b);
  static Polyhedron box(const Vec& lo, const Vec& hi);
  static Polyhedron cube(int dim, double radius = 1.0);
  static Polyhedron cross_polytope(int dim, double radius = 1.0);
  static Polyhedron line(const Vec& direction);  // R * direction

  int dim() const { return dim_; }
  bool has_vrep() const { return has_v_; }
  bool has_hrep() const { return has_h_; }

  const std::vector<Vec>& vertices() const;
  const std::vector<Vec>& rays() const;
  const std::vector<Halfspace>& halfspaces() const;

 private:
  int dim_ = 0;
  bool has_v_ = false;
  bool has_h_ = false;
  std::vector<Vec> vertices_;
  std::vector<Vec> rays_;
  std::vector<Halfspace> halfspaces_;
};

// Representation conversion. The result carries both representations.
Polyhedron to_vrep(const Polyhedron& p);
Polyhedron to_hrep(const Polyhedron& p);

// Result of enumerating the V-representation of {z : A z <= b}.
struct VertexEnumeration {
  std::vector<Vec> points;
  std::vector<Vec> rays;  // unit length; lineality appears as +/- pairs
  bool empty = false;
};
VertexEnumeration enumerate_vertices(const Mat& a, const Vec& b);

bool is_empty(const Polyhedron& p);
bool is_bounded(const Polyhedron& p);
bool contains(const Polyhedron& p, const Vec& x, double tol = kGeomTol);
PolyhedronFlags flags(const Polyhedron& p);

// sup over p of <u, x>; +inf when unbounded in direction u, -inf when empty.
double support_value(const Polyhedron& p, const Vec& u);
// A maximizer of <u, x> over p when the supremum is finite and attained.
std::optional<Vec> support_point(const Polyhedron& p, const Vec& u);

bool is_subset(const Polyhedron& a, const Polyhedron& b, double tol = 1e-8);
bool same_set(const Polyhedron& a, const Polyhedron& b, double tol = 1e-8);

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
Polyhedron hull_union(const Polyhedron& a, const Polyhedron& b);
Polyhedron linear_image(const Polyhedron& p, const Mat& m);
Polyhedron translate(const Polyhedron& p, const Vec& t);
Polyhedron scale(const Polyhedron& p, double t);
Polyhedron negate(const Polyhedron& p);

// Drops non-extreme generators and duplicate rays; vertices sorted
// lexicographically.
Polyhedron reduce_vrep(const Polyhedron& p);
// Drops redundant halfspaces; normals scaled to unit length.
Polyhedron reduce_hrep(const Polyhedron& p);

// Point of the convex hull of `points` closest to `x` (Wolfe's algorithm).
Vec nearest_point(const std::vector<Vec>& points, const Vec& x);
// Hausdorff distance between two bounded polyhedra.
double hausdorff(const Polyhedron& a, const Polyhedron& b);
// Hausdorff distance between the (reduced) vertex sets; an upper bound on
// hausdorff(a, b).
double vertex_hausdorff(const Polyhedron& a, const Polyhedron& b);

// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order.
template <class Fn>
void for_each_combination(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool lex_less(const Vec& a, const Vec& b);

}  // namespace convdual

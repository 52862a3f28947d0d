#include "convdual/polyhedron.hpp"

#include "convdual/lp.hpp"

#include <algorithm>
#include <cmath>

namespace convdual {

bool lex_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return a.size() < b.size();
}

namespace {

void check_vectors(int dim, const std::vector<Vec>& vs, const char* what) {
  for (const Vec& v : vs) require_dim(v, dim, what);
}

double binomial(int m, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

constexpr double kMaxCombinations = 2e7;

bool near(const Vec& a, const Vec& b, double tol) {
  return (a - b).lpNorm<Eigen::Infinity>() <= tol * (1.0 + a.lpNorm<Eigen::Infinity>());
}

void push_unique(std::vector<Vec>& out, const Vec& v, double tol) {
  for (const Vec& w : out) {
    if (near(w, v, tol)) return;
  }
  out.push_back(v);
}

double row_slack_tol(const Eigen::Ref<const Eigen::RowVectorXd>& a, double b, const Vec& z) {
  return kGeomTol * (1.0 + std::abs(b) + a.lpNorm<1>() * z.lpNorm<Eigen::Infinity>());
}

std::vector<Vec> unit_rays(const std::vector<Vec>& rays) {
  std::vector<Vec> out;
  for (const Vec& r : rays) {
    const double n = r.norm();
    if (n > kRankTol) push_unique(out, r / n, 1e-9);
  }
  return out;
}

// Is r in cone(gens)?
bool in_cone(const std::vector<Vec>& gens, const Vec& r, int dim) {
  if (r.norm() <= kGeomTol) return true;
  if (gens.empty()) return false;
  const int k = static_cast<int>(gens.size());
  LinearProgram lp(k);
  for (int j = 0; j < k; ++j) lp.set_nonneg(j);
  for (int i = 0; i < dim; ++i) {
    Vec row(k);
    for (int j = 0; j < k; ++j) row(j) = gens[j](i);
    lp.add_eq(row, r(i));
  }
  return lp.minimize().status == LpStatus::kOptimal;
}

// Is x in conv(points) + cone(rays)?
bool in_vhull(const std::vector<Vec>& points, const std::vector<Vec>& rays, const Vec& x, int dim) {
  if (points.empty()) return false;
  const int k = static_cast<int>(points.size());
  const int r = static_cast<int>(rays.size());
  LinearProgram lp(k + r);
  for (int j = 0; j < k + r; ++j) lp.set_nonneg(j);
  for (int i = 0; i < dim; ++i) {
    Vec row(k + r);
    for (int j = 0; j < k; ++j) row(j) = points[j](i);
    for (int j = 0; j < r; ++j) row(k + j) = rays[j](i);
    lp.add_eq(row, x(i));
  }
  Vec ones = Vec::Zero(k + r);
  ones.head(k).setOnes();
  lp.add_eq(ones, 1.0);
  return lp.minimize().status == LpStatus::kOptimal;
}

LinearProgram hrep_lp(const Polyhedron& p) {
  LinearProgram lp(p.dim());
  for (const Halfspace& h : p.halfspaces()) lp.add_le(h.normal, h.offset);
  return lp;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Polyhedron Polyhedron::from_vertices(int dim, std::vector<Vec> vertices, std::vector<Vec> rays) {
  if (dim < 1) throw InvalidArgument("Polyhedron: dimension must be >= 1");
  check_vectors(dim, vertices, "Polyhedron::from_vertices");
  check_vectors(dim, rays, "Polyhedron::from_vertices");
  Polyhedron p;
  p.dim_ = dim;
  p.has_v_ = true;
  p.vertices_ = std::move(vertices);
  if (!p.vertices_.empty()) p.rays_ = unit_rays(rays);
  return p;
}

Polyhedron Polyhedron::from_halfspaces(int dim, std::vector<Halfspace> halfspaces) {
  if (dim < 1) throw InvalidArgument("Polyhedron: dimension must be >= 1");
  for (const Halfspace& h : halfspaces) require_dim(h.normal, dim, "Polyhedron::from_halfspaces");
  Polyhedron p;
  p.dim_ = dim;
  p.has_h_ = true;
  p.halfspaces_ = std::move(halfspaces);
  return p;
}

Polyhedron Polyhedron::from_both(int dim, std::vector<Vec> vertices, std::vector<Vec> rays,
                                 std::vector<Halfspace> halfspaces) {
  Polyhedron p = from_vertices(dim, std::move(vertices), std::move(rays));
  for (const Halfspace& h : halfspaces) require_dim(h.normal, dim, "Polyhedron::from_both");
  p.has_h_ = true;
  p.halfspaces_ = std::move(halfspaces);
  return p;
}

Polyhedron Polyhedron::whole_space(int dim) {
  std::vector<Vec> rays;
  for (int i = 0; i < dim; ++i) {
    rays.push_back(Vec::Unit(dim, i));
    rays.push_back(-Vec::Unit(dim, i));
  }
  return from_both(dim, {Vec::Zero(dim)}, rays, {});
}

Polyhedron Polyhedron::empty(int dim) {
  return from_both(dim, {}, {}, {Halfspace{Vec::Zero(dim), -1.0}});
}

Polyhedron Polyhedron::point(const Vec& p) {
  const int dim = static_cast<int>(p.size());
  std::vector<Halfspace> hs;
  for (int i = 0; i < dim; ++i) {
    hs.push_back({Vec::Unit(dim, i), p(i)});
    hs.push_back({-Vec::Unit(dim, i), -p(i)});
  }
  return from_both(dim, {p}, {}, hs);
}

Polyhedron Polyhedron::segment(const Vec& a, const Vec& b) {
  return from_vertices(static_cast<int>(a.size()), {a, b});
}

Polyhedron Polyhedron::box(const Vec& lo, const Vec& hi) {
  const int dim = static_cast<int>(lo.size());
  require_dim(hi, dim, "Polyhedron::box");
  std::vector<Halfspace> hs;
  for (int i = 0; i < dim; ++i) {
    hs.push_back({Vec::Unit(dim, i), hi(i)});
    hs.push_back({-Vec::Unit(dim, i), -lo(i)});
  }
  if (dim > 8) return from_halfspaces(dim, hs);
  std::vector<Vec> verts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = (mask >> i & 1) ? hi(i) : lo(i);
    verts.push_back(v);
  }
  return from_both(dim, verts, {}, hs);
}

Polyhedron Polyhedron::cube(int dim, double radius) {
  return box(Vec::Constant(dim, -radius), Vec::Constant(dim, radius));
}

Polyhedron Polyhedron::cross_polytope(int dim, double radius) {
  std::vector<Vec> verts;
  for (int i = 0; i < dim; ++i) {
    verts.push_back(radius * Vec::Unit(dim, i));
    verts.push_back(-radius * Vec::Unit(dim, i));
  }
  if (dim > 8) return from_vertices(dim, verts);
  std::vector<Halfspace> hs;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec a(dim);
    for (int i = 0; i < dim; ++i) a(i) = (mask >> i & 1) ? 1.0 : -1.0;
    a /= std::sqrt(static_cast<double>(dim));
    hs.push_back({a, radius / std::sqrt(static_cast<double>(dim))});
  }
  return from_both(dim, verts, {}, hs);
}

Polyhedron Polyhedron::line(const Vec& direction) {
  const int dim = static_cast<int>(direction.size());
  return from_vertices(dim, {Vec::Zero(dim)}, {direction, -direction});
}

const std::vector<Vec>& Polyhedron::vertices() const {
  if (!has_v_) throw Error("Polyhedron: no V-representation (call to_vrep)");
  return vertices_;
}

const std::vector<Vec>& Polyhedron::rays() const {
  if (!has_v_) throw Error("Polyhedron: no V-representation (call to_vrep)");
  return rays_;
}

const std::vector<Halfspace>& Polyhedron::halfspaces() const {
  if (!has_h_) throw Error("Polyhedron: no H-representation (call to_hrep)");
  return halfspaces_;
}

// ---------------------------------------------------------------------------
// Enumeration

VertexEnumeration enumerate_vertices(const Mat& a, const Vec& b) {
  const int d = static_cast<int>(a.cols());
  const int m = static_cast<int>(a.rows());
  VertexEnumeration out;
  if (m == 0) {
    out.points.push_back(Vec::Zero(d));
    for (int i = 0; i < d; ++i) {
      out.rays.push_back(Vec::Unit(d, i));
      out.rays.push_back(-Vec::Unit(d, i));
    }
    return out;
  }

  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTol * std::max(1.0, smax)) ++rank;
  }
  const Mat q = svd.matrixV().leftCols(rank);
  const Mat lineality = svd.matrixV().rightCols(d - rank);
  const Mat aq = a * q;

  auto feasible = [&](const Vec& z) {
    for (int i = 0; i < m; ++i) {
      if (a.row(i).dot(z) - b(i) > row_slack_tol(a.row(i), b(i), z)) return false;
    }
    return true;
  };

  if (rank == 0) {
    if (!feasible(Vec::Zero(d))) {
      out.empty = true;
      return out;
    }
    out.points.push_back(Vec::Zero(d));
  } else {
    if (binomial(m, rank) > kMaxCombinations) throw Error("vertex enumeration: problem too large");
    Mat sub(rank, rank);
    Vec rhs(rank);
    for_each_combination(m, rank, [&](const std::vector<int>& rows) {
      for (int i = 0; i < rank; ++i) {
        sub.row(i) = aq.row(rows[i]);
        rhs(i) = b(rows[i]);
      }
      Eigen::FullPivLU<Mat> lu(sub);
      lu.setThreshold(1e-10);
      if (lu.rank() < rank) return;
      const Vec z = q * lu.solve(rhs);
      if (feasible(z)) push_unique(out.points, z, 1e-9);
    });
    if (out.points.empty()) {
      out.empty = true;
      return out;
    }
    // Extreme rays of the pointed recession cone {w : aq w <= 0}.
    Mat sub_r(rank - 1, rank);
    for_each_combination(m, rank - 1, [&](const std::vector<int>& rows) {
      for (int i = 0; i < rank - 1; ++i) sub_r.row(i) = aq.row(rows[i]);
      Vec w;
      if (rank == 1) {
        w = Vec::Ones(1);
      } else {
        Eigen::FullPivLU<Mat> lu(sub_r);
        lu.setThreshold(1e-10);
        if (lu.rank() < rank - 1) return;
        w = lu.kernel().col(0);
      }
      w.normalize();
      for (double sign : {1.0, -1.0}) {
        const Vec ws = sign * w;
        const Vec prod = aq * ws;
        bool ok = true;
        for (int i = 0; i < m; ++i) {
          if (prod(i) > kGeomTol * (1.0 + aq.row(i).norm())) {
            ok = false;
            break;
          }
        }
        if (ok) {
          Vec r = q * ws;
          push_unique(out.rays, r / r.norm(), 1e-9);
        }
      }
    });
  }
  for (int j = 0; j < lineality.cols(); ++j) {
    out.rays.push_back(lineality.col(j));
    out.rays.push_back(-lineality.col(j));
  }
  return out;
}

Polyhedron to_vrep(const Polyhedron& p) {
  if (p.has_vrep()) return p;
  const int d = p.dim();
  const auto& hs = p.halfspaces();
  Mat a(hs.size(), d);
  Vec b(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    a.row(i) = hs[i].normal.transpose();
    b(i) = hs[i].offset;
  }
  VertexEnumeration e = enumerate_vertices(a, b);
  if (e.empty) return Polyhedron::from_both(d, {}, {}, hs);
  std::sort(e.points.begin(), e.points.end(), lex_less);
  return Polyhedron::from_both(d, std::move(e.points), std::move(e.rays), hs);
}

Polyhedron to_hrep(const Polyhedron& p) {
  if (p.has_hrep()) return p;
  const int d = p.dim();
  const auto& verts = p.vertices();
  const auto& rays = p.rays();
  if (verts.empty()) return Polyhedron::from_both(d, {}, {}, {Halfspace{Vec::Zero(d), -1.0}});
  // Facets of P are the extreme rays of the cone {(a, beta) : a.v <= beta, a.r <= 0}.
  const int rows = static_cast<int>(verts.size() + rays.size());
  Mat c(rows, d + 1);
  int i = 0;
  for (const Vec& v : verts) {
    c.row(i).head(d) = v.transpose();
    c(i++, d) = -1.0;
  }
  for (const Vec& r : rays) {
    c.row(i).head(d) = r.transpose();
    c(i++, d) = 0.0;
  }
  VertexEnumeration e = enumerate_vertices(c, Vec::Zero(rows));
  std::vector<Halfspace> hs;
  for (const Vec& ray : e.rays) {
    const Vec normal = ray.head(d);
    const double n = normal.norm();
    if (n <= 1e-9) continue;
    Halfspace h{normal / n, ray(d) / n};
    bool dup = false;
    for (const Halfspace& g : hs) {
      if (near(g.normal, h.normal, 1e-9) && std::abs(g.offset - h.offset) <= 1e-9 * (1 + std::abs(h.offset))) {
        dup = true;
        break;
      }
    }
    if (!dup) hs.push_back(h);
  }
  std::sort(hs.begin(), hs.end(), [](const Halfspace& x, const Halfspace& y) {
    if (lex_less(x.normal, y.normal)) return true;
    if (lex_less(y.normal, x.normal)) return false;
    return x.offset < y.offset;
  });
  return Polyhedron::from_both(d, verts, rays, hs);
}

// ---------------------------------------------------------------------------
// Queries

bool is_empty(const Polyhedron& p) {
  if (p.has_vrep()) return p.vertices().empty();
  LinearProgram lp = hrep_lp(p);
  return lp.minimize().status == LpStatus::kInfeasible;
}

bool is_bounded(const Polyhedron& p) {
  if (p.has_vrep()) return p.vertices().empty() || p.rays().empty();
  if (is_empty(p)) return true;
  for (int i = 0; i < p.dim(); ++i) {
    for (double s : {1.0, -1.0}) {
      if (std::isinf(support_value(p, s * Vec::Unit(p.dim(), i)))) return false;
    }
  }
  return true;
}

bool contains(const Polyhedron& p, const Vec& x, double tol) {
  require_dim(x, p.dim(), "contains");
  if (p.has_hrep()) {
    for (const Halfspace& h : p.halfspaces()) {
      const double slack = tol * (1.0 + std::abs(h.offset) + h.normal.lpNorm<1>() * x.lpNorm<Eigen::Infinity>());
      if (h.normal.dot(x) - h.offset > slack) return false;
    }
    return true;
  }
  return in_vhull(p.vertices(), p.rays(), x, p.dim());
}

double support_value(const Polyhedron& p, const Vec& u) {
  require_dim(u, p.dim(), "support_value");
  if (p.has_vrep()) {
    if (p.vertices().empty()) return -kInf;
    for (const Vec& r : p.rays()) {
      if (r.dot(u) > kGeomTol * (1.0 + u.norm())) return kInf;
    }
    double best = -kInf;
    for (const Vec& v : p.vertices()) best = std::max(best, v.dot(u));
    return best;
  }
  LinearProgram lp = hrep_lp(p);
  lp.set_objective(u);
  return lp.maximize().value;
}

std::optional<Vec> support_point(const Polyhedron& p, const Vec& u) {
  require_dim(u, p.dim(), "support_point");
  if (p.has_vrep()) {
    if (p.vertices().empty()) return std::nullopt;
    for (const Vec& r : p.rays()) {
      if (r.dot(u) > kGeomTol * (1.0 + u.norm())) return std::nullopt;
    }
    const Vec* best = &p.vertices().front();
    for (const Vec& v : p.vertices()) {
      if (v.dot(u) > best->dot(u)) best = &v;
    }
    return *best;
  }
  LinearProgram lp = hrep_lp(p);
  lp.set_objective(u);
  LpResult r = lp.maximize();
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  return r.x;
}

PolyhedronFlags flags(const Polyhedron& p) {
  PolyhedronFlags f;
  f.empty = is_empty(p);
  f.bounded = is_bounded(p);
  f.contains_origin = !f.empty && contains(p, Vec::Zero(p.dim()));
  f.symmetric = f.empty || is_subset(negate(p), p);
  return f;
}

bool is_subset(const Polyhedron& a, const Polyhedron& b, double tol) {
  if (a.dim() != b.dim()) throw InvalidArgument("is_subset: dimension mismatch");
  if (is_empty(a)) return true;
  if (!b.has_hrep() && b.dim() <= 4) return is_subset(a, to_hrep(b), tol);
  if (b.has_hrep()) {
    for (const Halfspace& h : b.halfspaces()) {
      const double s = support_value(a, h.normal);
      if (s > h.offset + tol * (1.0 + std::abs(h.offset))) return false;
    }
    return true;
  }
  const Polyhedron av = to_vrep(a);
  for (const Vec& v : av.vertices()) {
    if (!in_vhull(b.vertices(), b.rays(), v, b.dim())) return false;
  }
  for (const Vec& r : av.rays()) {
    if (!in_cone(b.rays(), r, b.dim())) return false;
  }
  return true;
}

bool same_set(const Polyhedron& a, const Polyhedron& b, double tol) {
  return is_subset(a, b, tol) && is_subset(b, a, tol);
}

// ---------------------------------------------------------------------------
// Set operations

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("intersect: dimension mismatch");
  std::vector<Halfspace> hs = to_hrep(a).halfspaces();
  const Polyhedron bh = to_hrep(b);
  const auto& hb = bh.halfspaces();
  hs.insert(hs.end(), hb.begin(), hb.end());
  return Polyhedron::from_halfspaces(a.dim(), std::move(hs));
}

Polyhedron hull_union(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("hull_union: dimension mismatch");
  if (is_empty(a)) return b;
  if (is_empty(b)) return a;
  const Polyhedron av = to_vrep(a), bv = to_vrep(b);
  std::vector<Vec> verts = av.vertices();
  verts.insert(verts.end(), bv.vertices().begin(), bv.vertices().end());
  std::vector<Vec> rays = av.rays();
  rays.insert(rays.end(), bv.rays().begin(), bv.rays().end());
  return Polyhedron::from_vertices(a.dim(), std::move(verts), std::move(rays));
}

Polyhedron linear_image(const Polyhedron& p, const Mat& m) {
  if (m.cols() != p.dim()) throw InvalidArgument("linear_image: dimension mismatch");
  const int out_dim = static_cast<int>(m.rows());
  if (p.has_vrep()) {
    std::vector<Vec> verts, rays;
    for (const Vec& v : p.vertices()) verts.push_back(m * v);
    for (const Vec& r : p.rays()) {
      Vec mr = m * r;
      if (mr.norm() > kRankTol) rays.push_back(mr);
    }
    return Polyhedron::from_vertices(out_dim, std::move(verts), std::move(rays));
  }
  if (m.rows() == m.cols()) {
    Eigen::FullPivLU<Mat> lu(m);
    if (lu.isInvertible()) {
      const Mat inv_t = lu.inverse().transpose();
      std::vector<Halfspace> hs;
      for (const Halfspace& h : p.halfspaces()) hs.push_back({inv_t * h.normal, h.offset});
      return Polyhedron::from_halfspaces(out_dim, std::move(hs));
    }
  }
  return linear_image(to_vrep(p), m);
}

Polyhedron translate(const Polyhedron& p, const Vec& t) {
  require_dim(t, p.dim(), "translate");
  Polyhedron out;
  std::vector<Vec> verts;
  std::vector<Halfspace> hs;
  if (p.has_vrep()) {
    for (const Vec& v : p.vertices()) verts.push_back(v + t);
  }
  if (p.has_hrep()) {
    for (const Halfspace& h : p.halfspaces()) hs.push_back({h.normal, h.offset + h.normal.dot(t)});
  }
  if (p.has_vrep() && p.has_hrep()) return Polyhedron::from_both(p.dim(), verts, p.rays(), hs);
  if (p.has_vrep()) return Polyhedron::from_vertices(p.dim(), verts, p.rays());
  return Polyhedron::from_halfspaces(p.dim(), hs);
}

Polyhedron scale(const Polyhedron& p, double t) {
  if (t < 0.0) throw InvalidArgument("scale: negative factor");
  if (is_empty(p)) return Polyhedron::empty(p.dim());
  if (t == 0.0) return Polyhedron::point(Vec::Zero(p.dim()));
  return linear_image(p, t * Mat::Identity(p.dim(), p.dim()));
}

Polyhedron negate(const Polyhedron& p) {
  std::vector<Vec> verts, rays;
  std::vector<Halfspace> hs;
  if (p.has_vrep()) {
    for (const Vec& v : p.vertices()) verts.push_back(-v);
    for (const Vec& r : p.rays()) rays.push_back(-r);
  }
  if (p.has_hrep()) {
    for (const Halfspace& h : p.halfspaces()) hs.push_back({-h.normal, h.offset});
  }
  if (p.has_vrep() && p.has_hrep()) return Polyhedron::from_both(p.dim(), verts, rays, hs);
  if (p.has_vrep()) return Polyhedron::from_vertices(p.dim(), verts, rays);
  return Polyhedron::from_halfspaces(p.dim(), hs);
}

Polyhedron reduce_vrep(const Polyhedron& p) {
  const Polyhedron pv = to_vrep(p);
  const int d = p.dim();
  if (pv.vertices().empty()) return Polyhedron::empty(d);
  std::vector<Vec> rays = unit_rays(pv.rays());
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (j != i) others.push_back(rays[j]);
    }
    if (in_cone(others, rays[i], d)) {
      // A ray inside the cone of the others is redundant unless it carries a
      // line whose partner is the only other generator; in_cone handles that
      // because -r in others then cannot generate r.
      rays.erase(rays.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  std::vector<Vec> verts;
  for (const Vec& v : pv.vertices()) push_unique(verts, v, 1e-9);
  for (std::size_t i = 0; i < verts.size();) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j != i) others.push_back(verts[j]);
    }
    if (!others.empty() && in_vhull(others, rays, verts[i], d)) {
      verts.erase(verts.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  std::sort(rays.begin(), rays.end(), lex_less);
  if (pv.has_hrep()) return Polyhedron::from_both(d, verts, rays, pv.halfspaces());
  return Polyhedron::from_vertices(d, verts, rays);
}

Polyhedron reduce_hrep(const Polyhedron& p) {
  const Polyhedron ph = to_hrep(p);
  const int d = p.dim();
  std::vector<Halfspace> hs;
  for (const Halfspace& h : ph.halfspaces()) {
    const double n = h.normal.norm();
    if (n <= kRankTol) {
      if (h.offset < -kGeomTol) return Polyhedron::empty(d);
      continue;
    }
    hs.push_back({h.normal / n, h.offset / n});
  }
  for (std::size_t i = 0; i < hs.size();) {
    LinearProgram lp(d);
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (j != i) lp.add_le(hs[j].normal, hs[j].offset);
    }
    lp.set_objective(hs[i].normal);
    const LpResult r = lp.maximize();
    if (r.status == LpStatus::kInfeasible) return Polyhedron::empty(d);
    if (r.status == LpStatus::kOptimal && r.value <= hs[i].offset + kGeomTol * (1.0 + std::abs(hs[i].offset))) {
      hs.erase(hs.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  if (hs.empty() || !is_empty(Polyhedron::from_halfspaces(d, hs))) {
    std::sort(hs.begin(), hs.end(), [](const Halfspace& x, const Halfspace& y) { return lex_less(x.normal, y.normal); });
    if (ph.has_vrep()) return Polyhedron::from_both(d, ph.vertices(), ph.rays(), hs);
    return Polyhedron::from_halfspaces(d, hs);
  }
  return Polyhedron::empty(d);
}

// ---------------------------------------------------------------------------
// Distances

Vec nearest_point(const std::vector<Vec>& points, const Vec& x) {
  if (points.empty()) throw InvalidArgument("nearest_point: empty point set");
  const int k = static_cast<int>(points.size());
  std::vector<Vec> q;
  q.reserve(k);
  double scale2 = 0.0;
  for (const Vec& p : points) {
    q.push_back(p - x);
    scale2 = std::max(scale2, q.back().squaredNorm());
  }
  // Wolfe's minimum-norm-point algorithm on the shifted points.
  int start = 0;
  for (int i = 1; i < k; ++i) {
    if (q[i].squaredNorm() < q[start].squaredNorm()) start = i;
  }
  std::vector<int> s{start};
  std::vector<double> lambda{1.0};
  Vec y = q[start];
  const double tol = 1e-12 * std::max(1.0, scale2);
  for (int major = 0; major < 1000; ++major) {
    int j = 0;
    for (int i = 1; i < k; ++i) {
      if (q[i].dot(y) < q[j].dot(y)) j = i;
    }
    if (y.squaredNorm() - q[j].dot(y) <= tol) break;
    if (std::find(s.begin(), s.end(), j) != s.end()) break;
    s.push_back(j);
    lambda.push_back(0.0);
    for (int minor = 0; minor < 1000; ++minor) {
      const int ns = static_cast<int>(s.size());
      Mat sys = Mat::Zero(ns + 1, ns + 1);
      Vec rhs = Vec::Zero(ns + 1);
      for (int a = 0; a < ns; ++a) {
        for (int b = 0; b < ns; ++b) sys(a, b) = q[s[a]].dot(q[s[b]]);
        sys(a, ns) = 1.0;
        sys(ns, a) = 1.0;
      }
      rhs(ns) = 1.0;
      const Vec sol = sys.fullPivLu().solve(rhs);
      const Vec mu = sol.head(ns);
      if (mu.minCoeff() > 1e-14) {
        for (int a = 0; a < ns; ++a) lambda[a] = mu(a);
        break;
      }
      double theta = 1.0;
      for (int a = 0; a < ns; ++a) {
        if (mu(a) <= 1e-14) theta = std::min(theta, lambda[a] / (lambda[a] - mu(a)));
      }
      for (int a = 0; a < ns; ++a) lambda[a] = lambda[a] + theta * (mu(a) - lambda[a]);
      std::vector<int> s2;
      std::vector<double> l2;
      for (int a = 0; a < ns; ++a) {
        if (lambda[a] > 1e-14) {
          s2.push_back(s[a]);
          l2.push_back(lambda[a]);
        }
      }
      s = std::move(s2);
      lambda = std::move(l2);
      if (s.size() == 1) {
        lambda[0] = 1.0;
        break;
      }
    }
    y = Vec::Zero(x.size());
    double total = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a) total += lambda[a];
    for (std::size_t a = 0; a < s.size(); ++a) y += (lambda[a] / total) * q[s[a]];
  }
  return y + x;
}

double hausdorff(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("hausdorff: dimension mismatch");
  const Polyhedron av = to_vrep(a), bv = to_vrep(b);
  if (av.vertices().empty() || bv.vertices().empty()) {
    throw InvalidArgument("hausdorff: empty polyhedron");
  }
  if (!av.rays().empty() || !bv.rays().empty()) {
    throw InvalidArgument("hausdorff: unbounded polyhedron");
  }
  double h = 0.0;
  for (const Vec& v : av.vertices()) h = std::max(h, (nearest_point(bv.vertices(), v) - v).norm());
  for (const Vec& v : bv.vertices()) h = std::max(h, (nearest_point(av.vertices(), v) - v).norm());
  return h;
}

double vertex_hausdorff(const Polyhedron& a, const Polyhedron& b) {
  const Polyhedron ar = reduce_vrep(a), br = reduce_vrep(b);
  auto directed = [](const std::vector<Vec>& x, const std::vector<Vec>& y) {
    double h = 0.0;
    for (const Vec& v : x) {
      double best = kInf;
      for (const Vec& w : y) best = std::min(best, (v - w).norm());
      h = std::max(h, best);
    }
    return h;
  };
  if (ar.vertices().empty() || br.vertices().empty()) {
    return ar.vertices().empty() == br.vertices().empty() ? 0.0 : kInf;
  }
  return std::max(directed(ar.vertices(), br.vertices()), directed(br.vertices(), ar.vertices()));
}

}  // namespace convdual

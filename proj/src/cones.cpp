#include "convdual/cones.hpp"

#include "convdual/sampling.hpp"

#include <cmath>

namespace convdual {

namespace {

bool ray_blocks(const std::vector<Vec>& rays, const Vec& x) {
  for (const Vec& r : rays) {
    if (r.dot(x) > kGeomTol * (1.0 + x.norm())) return true;
  }
  return false;
}

std::vector<Halfspace> drop_trivial(std::vector<Halfspace> hs) {
  std::erase_if(hs, [](const Halfspace& h) { return h.normal.norm() <= kRankTol && h.offset >= 0.0; });
  return hs;
}

}  // namespace

SublinearFunction::SublinearFunction(const Polyhedron& body) {
  if (is_empty(body)) throw InvalidArgument("support_function: empty body");
  body_ = reduce_vrep(to_vrep(body));
}

double SublinearFunction::operator()(const Vec& x) const {
  require_dim(x, dim(), "SublinearFunction");
  if (ray_blocks(body_.rays(), x)) return kInf;
  double best = -kInf;
  for (const Vec& v : body_.vertices()) best = std::max(best, v.dot(x));
  return best;
}

PLConvexFunction SublinearFunction::to_pl() const {
  std::vector<AffineFunctional> pieces;
  for (const Vec& v : body_.vertices()) pieces.push_back({v, 0.0});
  if (body_.rays().empty()) return PLConvexFunction(std::move(pieces));
  std::vector<Halfspace> hs;
  for (const Vec& r : body_.rays()) hs.push_back({r, 0.0});
  return PLConvexFunction(std::move(pieces), Polyhedron::from_halfspaces(dim(), std::move(hs)));
}

MinkowskiGauge::MinkowskiGauge(const Polyhedron& set) {
  if (is_empty(set) || !contains(set, Vec::Zero(set.dim()))) {
    throw InvalidArgument("MinkowskiGauge: set must contain the origin");
  }
  set_ = to_hrep(set);
}

double MinkowskiGauge::operator()(const Vec& x) const { return gauge(set_, x); }

PLConvexFunction MinkowskiGauge::to_pl() const { return SublinearFunction(polar(set_)).to_pl(); }

Seminorm::Seminorm(const Polyhedron& dual_body) : support_(dual_body) {
  const PolyhedronFlags f = flags(support_.body());
  if (!f.symmetric || !f.contains_origin) throw InvalidArgument("Seminorm: dual body must be symmetric");
}

bool Seminorm::finite_valued() const { return dual_body().rays().empty(); }

HomogeneousFunction::HomogeneousFunction(Base base, double degree) : base_(std::move(base)), degree_(degree) {
  if (!(degree >= 1.0) || !std::isfinite(degree)) throw InvalidArgument("HomogeneousFunction: degree must be >= 1");
}

Homogeneity HomogeneousFunction::mode() const {
  return std::holds_alternative<Seminorm>(base_) ? Homogeneity::kAbsolute : Homogeneity::kPositive;
}

int HomogeneousFunction::dim() const {
  return std::visit([](const auto& k) { return k.dim(); }, base_);
}

double HomogeneousFunction::operator()(const Vec& x) const {
  const double k = std::visit([&](const auto& b) { return b(x); }, base_);
  return k == kInf ? kInf : std::pow(k, degree_);
}

SublinearFunction support_function(const Polyhedron& c) { return SublinearFunction(c); }

Polyhedron body_of(const SublinearFunction& p) { return p.body(); }

bool looks_homogeneous(const PLConvexFunction& p, int samples, std::uint64_t seed) {
  Rng rng(seed);
  const int n = p.dim();
  const Vec zero = Vec::Zero(n);
  if (p(zero) != 0.0 && std::abs(p(zero)) > 1e-9) return false;
  for (int i = 0; i < samples; ++i) {
    const Vec x = rng.normal_vec(n);
    const double px = p(x);
    for (double t : {2.0, 0.5}) {
      const double ptx = p(t * x);
      if ((px == kInf) != (ptx == kInf)) return false;
      if (px != kInf && std::abs(ptx - t * px) > 1e-9 * (1.0 + std::abs(t * px))) return false;
    }
  }
  return true;
}

Polyhedron body_of(const PLConvexFunction& p) {
  if (!looks_homogeneous(p)) throw InvalidArgument("body_of: function is not positively homogeneous");
  const PLConvexFunction c = canonicalize(p);
  std::vector<Vec> verts;
  for (const AffineFunctional& u : c.pieces()) {
    if (std::abs(u.c) > 1e-9 * (1.0 + u.phi.norm())) {
      throw InvalidArgument("body_of: piece with nonzero offset; function is not sublinear");
    }
    verts.push_back(u.phi);
  }
  std::vector<Vec> rays;
  if (c.has_domain()) {
    for (const Halfspace& h : c.domain()->halfspaces()) {
      if (std::abs(h.offset) > 1e-9 * (1.0 + h.normal.norm())) {
        throw InvalidArgument("body_of: domain is not a cone; function is not sublinear");
      }
      rays.push_back(h.normal);
    }
  }
  return reduce_vrep(Polyhedron::from_vertices(p.dim(), std::move(verts), std::move(rays)));
}

double gauge(const Polyhedron& d, const Vec& x) {
  require_dim(x, d.dim(), "gauge");
  const Polyhedron h = to_hrep(d);
  if (!contains(h, Vec::Zero(d.dim()))) throw InvalidArgument("gauge: set must contain the origin");
  double lambda = 0.0;
  for (const Halfspace& hs : h.halfspaces()) {
    const double ax = hs.normal.dot(x);
    const double scale = kGeomTol * (1.0 + hs.normal.norm() * x.norm());
    if (hs.offset > kGeomTol) {
      lambda = std::max(lambda, ax / hs.offset);
    } else if (ax > scale) {
      return kInf;
    }
  }
  return lambda;
}

Polyhedron polar(const Polyhedron& d) {
  const int n = d.dim();
  if (!contains(d, Vec::Zero(n))) throw InvalidArgument("polar: set must contain the origin");
  if (d.has_vrep()) {
    std::vector<Halfspace> hs;
    for (const Vec& v : d.vertices()) hs.push_back({v, 1.0});
    for (const Vec& r : d.rays()) hs.push_back({r, 0.0});
    hs = drop_trivial(std::move(hs));
    if (hs.empty()) return Polyhedron::whole_space(n);
    return Polyhedron::from_halfspaces(n, std::move(hs));
  }
  std::vector<Vec> verts{Vec::Zero(n)};
  std::vector<Vec> rays;
  for (const Halfspace& h : d.halfspaces()) {
    if (h.offset > kGeomTol) {
      verts.push_back(h.normal / h.offset);
    } else if (h.normal.norm() > kRankTol) {
      rays.push_back(h.normal);
    }
  }
  return reduce_vrep(Polyhedron::from_vertices(n, std::move(verts), std::move(rays)));
}

HomogeneousFunction hom_power(const MinkowskiGauge& k, double p) { return HomogeneousFunction(k, p); }
HomogeneousFunction hom_power(const Seminorm& k, double p) { return HomogeneousFunction(k, p); }
HomogeneousFunction::Base hom_root(const HomogeneousFunction& f) { return f.base(); }

}  // namespace convdual

#include "convdual/pl_function.hpp"

#include "convdual/lp.hpp"

#include <algorithm>
#include <cmath>

namespace convdual {

namespace {

std::optional<Polyhedron> normalize_domain(std::optional<Polyhedron> domain, int n) {
  if (!domain) return std::nullopt;
  if (domain->dim() != n) throw InvalidArgument("PLConvexFunction: domain dimension mismatch");
  Polyhedron h = to_hrep(*domain);
  if (h.halfspaces().empty()) return std::nullopt;
  return h;
}

void add_domain_rows(LinearProgram& lp, const PLConvexFunction& f, int extra) {
  if (!f.has_domain()) return;
  for (const Halfspace& h : f.domain()->halfspaces()) {
    Vec row = Vec::Zero(f.dim() + extra);
    row.head(f.dim()) = h.normal;
    lp.add_le(row, h.offset);
  }
}

double coefficient_scale(const PLConvexFunction& f) {
  double s = 0.0;
  for (const AffineFunctional& u : f.pieces()) s = std::max(s, std::abs(u.c) + u.phi.lpNorm<1>());
  return s;
}

std::optional<Polyhedron> intersect_domains(const PLConvexFunction& f, const PLConvexFunction& g) {
  if (!f.has_domain()) return g.domain();
  if (!g.has_domain()) return f.domain();
  return intersect(*f.domain(), *g.domain());
}

bool same_phi(const Vec& a, const Vec& b) {
  return (a - b).lpNorm<Eigen::Infinity>() <= 1e-12 * (1.0 + a.lpNorm<Eigen::Infinity>());
}

// Epigraph LP for min over dom f of f: variables (x, t).
LinearProgram epigraph_lp(const PLConvexFunction& f) {
  const int n = f.dim();
  LinearProgram lp(n + 1);
  for (const AffineFunctional& u : f.pieces()) {
    Vec row(n + 1);
    row.head(n) = u.phi;
    row(n) = -1.0;
    lp.add_le(row, -u.c);
  }
  add_domain_rows(lp, f, 1);
  Vec obj = Vec::Zero(n + 1);
  obj(n) = 1.0;
  lp.set_objective(obj);
  return lp;
}

PLConvexFunction difference_with_piece(const PLConvexFunction& g, const AffineFunctional& u) {
  std::vector<AffineFunctional> pieces;
  pieces.reserve(g.pieces().size());
  for (const AffineFunctional& p : g.pieces()) pieces.push_back({p.phi - u.phi, p.c - u.c});
  return PLConvexFunction(std::move(pieces), g.domain());
}

double leq_tolerance(const PLConvexFunction& f, const PLConvexFunction& g) {
  return 1e-8 * (1.0 + std::max(coefficient_scale(f), coefficient_scale(g)));
}

}  // namespace

PLConvexFunction::PLConvexFunction(std::vector<AffineFunctional> pieces, std::optional<Polyhedron> domain)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidArgument("PLConvexFunction: at least one piece required");
  dim_ = pieces_.front().dim();
  if (dim_ < 1) throw InvalidArgument("PLConvexFunction: dimension must be >= 1");
  for (const AffineFunctional& u : pieces_) {
    require_dim(u.phi, dim_, "PLConvexFunction");
    if (!u.phi.allFinite() || !std::isfinite(u.c)) {
      throw InvalidArgument("PLConvexFunction: non-finite coefficient");
    }
  }
  domain_ = normalize_domain(std::move(domain), dim_);
}

PLConvexFunction PLConvexFunction::affine(const Vec& phi, double c) {
  return PLConvexFunction({AffineFunctional{phi, c}});
}

PLConvexFunction PLConvexFunction::constant(int n, double c) {
  return PLConvexFunction({AffineFunctional{Vec::Zero(n), c}});
}

PLConvexFunction PLConvexFunction::indicator(const Polyhedron& set) {
  const int n = set.dim();
  const Polyhedron h = to_hrep(set);
  if (h.halfspaces().empty()) return zero(n);
  return PLConvexFunction({AffineFunctional{Vec::Zero(n), 0.0}}, h);
}

bool PLConvexFunction::in_domain(const Vec& x) const {
  require_dim(x, dim_, "PLConvexFunction::in_domain");
  return !domain_ || contains(*domain_, x);
}

double PLConvexFunction::operator()(const Vec& x) const {
  if (!in_domain(x)) return kInf;
  double best = -kInf;
  for (const AffineFunctional& u : pieces_) best = std::max(best, u(x));
  return best;
}

std::vector<double> eval_batch(const PLConvexFunction& f, std::span<const Vec> xs) {
  std::vector<double> out(xs.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = f(xs[i]);
  return out;
}

std::vector<double> eval_batch_serial(const PLConvexFunction& f, std::span<const Vec> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Vec& x : xs) out.push_back(f(x));
  return out;
}

PLConvexFunction max2(const PLConvexFunction& f, const PLConvexFunction& g) {
  if (f.dim() != g.dim()) throw InvalidArgument("max2: dimension mismatch");
  std::vector<AffineFunctional> pieces = f.pieces();
  pieces.insert(pieces.end(), g.pieces().begin(), g.pieces().end());
  return PLConvexFunction(std::move(pieces), intersect_domains(f, g));
}

PLConvexFunction sup_family(std::span<const PLConvexFunction> fs) {
  if (fs.empty()) throw InvalidArgument("sup_family: empty family");
  PLConvexFunction acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = max2(acc, fs[i]);
  return acc;
}

PLConvexFunction add(const PLConvexFunction& f, const PLConvexFunction& g) {
  if (f.dim() != g.dim()) throw InvalidArgument("add: dimension mismatch");
  std::vector<AffineFunctional> pieces;
  pieces.reserve(f.pieces().size() * g.pieces().size());
  for (const AffineFunctional& u : f.pieces()) {
    for (const AffineFunctional& v : g.pieces()) pieces.push_back({u.phi + v.phi, u.c + v.c});
  }
  return PLConvexFunction(std::move(pieces), intersect_domains(f, g));
}

PLConvexFunction scale(const PLConvexFunction& f, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("scale: factor must be non-negative");
  if (t == 0.0) return PLConvexFunction({AffineFunctional{Vec::Zero(f.dim()), 0.0}}, f.domain());
  std::vector<AffineFunctional> pieces;
  for (const AffineFunctional& u : f.pieces()) pieces.push_back({t * u.phi, t * u.c});
  return PLConvexFunction(std::move(pieces), f.domain());
}

Minimum minimize_pl(const PLConvexFunction& f) {
  const LpResult r = epigraph_lp(f).minimize();
  switch (r.status) {
    case LpStatus::kInfeasible:
      return {kInf, std::nullopt};
    case LpStatus::kUnbounded:
      return {-kInf, std::nullopt};
    case LpStatus::kOptimal:
      break;
  }
  Vec x = r.x.head(f.dim());
  return {f(x) < kInf ? f(x) : r.value, x};
}

bool is_proper(const PLConvexFunction& f) {
  return !f.has_domain() || !is_empty(*f.domain());
}

std::optional<Vec> leq_violation(const PLConvexFunction& f, const PLConvexFunction& g) {
  if (f.dim() != g.dim()) throw InvalidArgument("is_leq: dimension mismatch");
  const int n = f.dim();
  if (!is_proper(g)) return std::nullopt;
  const double tol = leq_tolerance(f, g);

  // dom g must lie inside dom f.
  if (f.has_domain()) {
    for (const Halfspace& h : f.domain()->halfspaces()) {
      LinearProgram lp(n);
      add_domain_rows(lp, g, 0);
      lp.set_objective(h.normal);
      const LpResult r = lp.maximize();
      const double slack = tol * (1.0 + std::abs(h.offset));
      if (r.status == LpStatus::kOptimal && r.value <= h.offset + slack) continue;
      if (r.status == LpStatus::kOptimal) return Vec(r.x);
      // Unbounded: any point of dom g far enough along the normal.
      LinearProgram far(n);
      add_domain_rows(far, g, 0);
      far.add_le(-h.normal, -(h.offset + 1.0));
      const LpResult w = far.minimize();
      if (w.status == LpStatus::kOptimal) return Vec(w.x);
      return Vec::Zero(n);
    }
  }
  for (const AffineFunctional& u : f.pieces()) {
    const PLConvexFunction diff = difference_with_piece(g, u);
    LinearProgram lp = epigraph_lp(diff);
    const LpResult r = lp.minimize();
    if (r.status == LpStatus::kOptimal) {
      if (r.value >= -tol) continue;
      return Vec(r.x.head(n));
    }
    if (r.status == LpStatus::kUnbounded) {
      Vec cap = Vec::Zero(n + 1);
      cap(n) = 1.0;
      lp.add_le(cap, -1.0);
      lp.set_objective(Vec::Zero(n + 1));
      const LpResult w = lp.minimize();
      if (w.status == LpStatus::kOptimal) return Vec(w.x.head(n));
      return Vec::Zero(n);
    }
  }
  return std::nullopt;
}

bool is_leq(const PLConvexFunction& f, const PLConvexFunction& g) {
  return !leq_violation(f, g).has_value();
}

PLConvexFunction canonicalize(const PLConvexFunction& f) {
  std::optional<Polyhedron> domain = f.domain();
  if (domain) {
    if (is_empty(*domain)) return f;
    domain = reduce_hrep(*domain);
  }
  std::vector<AffineFunctional> pieces;
  for (const AffineFunctional& u : f.pieces()) {
    bool merged = false;
    for (AffineFunctional& v : pieces) {
      if (same_phi(u.phi, v.phi)) {
        v.c = std::max(v.c, u.c);
        merged = true;
        break;
      }
    }
    if (!merged) pieces.push_back(u);
  }
  const double tol = 1e-9 * (1.0 + coefficient_scale(f));
  for (std::size_t i = 0; i < pieces.size() && pieces.size() > 1;) {
    std::vector<AffineFunctional> others;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (j != i) others.push_back(pieces[j]);
    }
    const PLConvexFunction rest(std::move(others), domain);
    const Minimum m = minimize_pl(difference_with_piece(rest, pieces[i]));
    if (m.value >= -tol) {
      pieces.erase(pieces.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const AffineFunctional& a, const AffineFunctional& b) {
    if (lex_less(a.phi, b.phi)) return true;
    if (lex_less(b.phi, a.phi)) return false;
    return a.c < b.c;
  });
  return PLConvexFunction(std::move(pieces), domain);
}

PLConvexFunction homogenize(const PLConvexFunction& f) {
  const int n = f.dim();
  std::vector<AffineFunctional> pieces;
  for (const AffineFunctional& u : f.pieces()) {
    Vec phi(n + 1);
    phi.head(n) = u.phi;
    phi(n) = u.c;
    pieces.push_back({phi, 0.0});
  }
  if (!f.has_domain()) return PLConvexFunction(std::move(pieces));
  // Cone over the domain: {(x, r) : a.x <= r b, r >= 0}.
  std::vector<Halfspace> hs;
  for (const Halfspace& h : f.domain()->halfspaces()) {
    Vec a(n + 1);
    a.head(n) = h.normal;
    a(n) = -h.offset;
    hs.push_back({a, 0.0});
  }
  hs.push_back({-Vec::Unit(n + 1, n), 0.0});
  return PLConvexFunction(std::move(pieces), Polyhedron::from_halfspaces(n + 1, std::move(hs)));
}

double lipschitz_bound(const PLConvexFunction& f, const Vec& x0) {
  require_dim(x0, f.dim(), "lipschitz_bound");
  if (f.has_domain()) throw InvalidArgument("lipschitz_bound: function is not finite everywhere");
  const PLConvexFunction c = canonicalize(f);
  double slope = 0.0;
  for (const AffineFunctional& u : c.pieces()) slope = std::max(slope, u.phi.norm());
  return std::abs(f(x0)) + slope;
}

std::vector<AffineFunctional> minorants(const PLConvexFunction& f) {
  return canonicalize(f).pieces();
}

PLConvexFunction precompose(const PLConvexFunction& f, const Mat& m, const Vec& b) {
  const int n = f.dim();
  if (m.rows() != n || m.cols() != n) throw InvalidArgument("precompose: matrix shape mismatch");
  require_dim(b, n, "precompose");
  std::vector<AffineFunctional> pieces;
  for (const AffineFunctional& u : f.pieces()) pieces.push_back({m.transpose() * u.phi, u.phi.dot(b) + u.c});
  std::optional<Polyhedron> domain;
  if (f.has_domain()) {
    std::vector<Halfspace> hs;
    for (const Halfspace& h : f.domain()->halfspaces()) {
      hs.push_back({m.transpose() * h.normal, h.offset - h.normal.dot(b)});
    }
    domain = Polyhedron::from_halfspaces(n, std::move(hs));
  }
  return PLConvexFunction(std::move(pieces), std::move(domain));
}

PLConvexFunction add_affine(const PLConvexFunction& f, const Vec& phi, double c) {
  require_dim(phi, f.dim(), "add_affine");
  std::vector<AffineFunctional> pieces;
  for (const AffineFunctional& u : f.pieces()) pieces.push_back({u.phi + phi, u.c + c});
  return PLConvexFunction(std::move(pieces), f.domain());
}

}  // namespace convdual

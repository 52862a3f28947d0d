#include "convdual/fenchel.hpp"

#include <algorithm>

namespace convdual {

PLConvexFunction conjugate_pl(const PLConvexFunction& f) {
  const int n = f.dim();
  if (n > kMaxExactConjugateDim) throw InvalidArgument("conjugate_pl: exact path supports n <= 3");
  const std::size_t m_dom = f.has_domain() ? f.domain()->halfspaces().size() : 0;
  const std::size_t m = f.pieces().size() + m_dom;
  Mat a = Mat::Zero(static_cast<long>(m), n + 1);
  Vec b(static_cast<long>(m));
  long row = 0;
  for (const AffineFunctional& u : f.pieces()) {
    a.row(row).head(n) = u.phi.transpose();
    a(row, n) = -1.0;
    b(row++) = -u.c;
  }
  if (f.has_domain()) {
    for (const Halfspace& h : f.domain()->halfspaces()) {
      a.row(row).head(n) = h.normal.transpose();
      b(row++) = h.offset;
    }
  }
  const VertexEnumeration epi = enumerate_vertices(a, b);
  if (epi.empty || epi.points.empty()) throw InvalidArgument("conjugate_pl: function is not proper");

  std::vector<AffineFunctional> pieces;
  pieces.reserve(epi.points.size());
  for (const Vec& p : epi.points) pieces.push_back({p.head(n), -p(n)});
  std::sort(pieces.begin(), pieces.end(), [](const AffineFunctional& x, const AffineFunctional& y) {
    if (lex_less(x.phi, y.phi)) return true;
    if (lex_less(y.phi, x.phi)) return false;
    return x.c < y.c;
  });

  std::vector<Halfspace> hs;
  for (const Vec& r : epi.rays) {
    Vec d = r.head(n);
    if (d.norm() <= kRankTol) continue;
    hs.push_back({d, r(n)});
  }
  std::sort(hs.begin(), hs.end(), [](const Halfspace& x, const Halfspace& y) { return lex_less(x.normal, y.normal); });
  if (hs.empty()) return PLConvexFunction(std::move(pieces));
  return PLConvexFunction(std::move(pieces), Polyhedron::from_halfspaces(n, std::move(hs)));
}

PLConvexFunction biconjugate(const PLConvexFunction& f) { return conjugate_pl(conjugate_pl(f)); }

namespace {

void require_samples(const GridFunction1D& g, const GridSpec& out) {
  if (g.finite_count() == 0) throw InvalidArgument("conjugate_grid: all samples are +inf");
  if (out.count == 0 || !(out.step > 0.0)) throw InvalidArgument("conjugate_grid: invalid output grid");
}

double brute_at(const GridFunction1D& g, double y) {
  double best = -kInf;
  for (std::size_t i = g.finite_begin(); i < g.finite_end(); ++i) best = std::max(best, y * g.node(i) - g[i]);
  return best;
}

}  // namespace

GridSpec default_conjugate_grid(const GridFunction1D& g) {
  if (g.finite_count() < 2) {
    throw InvalidArgument("conjugate_grid: default output grid needs at least 2 finite samples");
  }
  const std::vector<std::size_t> hull = lower_hull(g);
  auto slope = [&](std::size_t k) {
    return (g[hull[k + 1]] - g[hull[k]]) / (g.node(hull[k + 1]) - g.node(hull[k]));
  };
  double lo = slope(0);
  double hi = slope(hull.size() - 2);
  if (hi - lo <= 1e-12 * (1.0 + std::abs(lo))) {
    lo -= 1.0;
    hi += 1.0;
  }
  const std::size_t count = g.size();
  return {lo, (hi - lo) / static_cast<double>(count - 1), count};
}

GridFunction1D conjugate_grid(const GridFunction1D& g, const GridSpec& out) {
  require_samples(g, out);
  const std::vector<std::size_t> hull = lower_hull(g);
  std::vector<double> values(out.count);
  auto value = [&](std::size_t k, double y) { return y * g.node(hull[k]) - g[hull[k]]; };
  // The maximizing hull vertex moves right as y increases.
  std::size_t k = 0;
  for (std::size_t j = 0; j < out.count; ++j) {
    const double y = out.node(j);
    double best = value(k, y);
    while (k + 1 < hull.size()) {
      const double next = value(k + 1, y);
      if (next < best) break;
      best = next;
      ++k;
    }
    values[j] = best;
  }
  return GridFunction1D(out, std::move(values));
}

GridFunction1D conjugate_grid(const GridFunction1D& g) { return conjugate_grid(g, default_conjugate_grid(g)); }

GridFunction1D conjugate_grid_brute(const GridFunction1D& g, const GridSpec& out) {
  require_samples(g, out);
  std::vector<double> values(out.count);
  for (std::size_t j = 0; j < out.count; ++j) values[j] = brute_at(g, out.node(j));
  return GridFunction1D(out, std::move(values));
}

GridFunction1D conjugate_grid_brute_omp(const GridFunction1D& g, const GridSpec& out) {
  require_samples(g, out);
  std::vector<double> values(out.count);
  const long m = static_cast<long>(out.count);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < m; ++j) values[j] = brute_at(g, out.node(static_cast<std::size_t>(j)));
  return GridFunction1D(out, std::move(values));
}

}  // namespace convdual

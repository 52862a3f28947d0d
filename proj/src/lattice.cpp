#include "convdual/lattice.hpp"

#include <cmath>
#include <exception>
#include <sstream>

namespace convdual {

namespace {

std::string describe(const Polyhedron& p) {
  std::ostringstream os;
  os.precision(6);
  const Polyhedron v = to_vrep(p);
  os << "conv{";
  for (std::size_t i = 0; i < v.vertices().size(); ++i) {
    os << (i ? ", " : "") << "(" << v.vertices()[i].transpose() << ")";
  }
  os << "}";
  if (!v.rays().empty()) os << " + " << v.rays().size() << " rays";
  return os.str();
}

std::string describe(const Subspace& s) {
  std::ostringstream os;
  os << "span of " << s.dim() << " vectors in R^" << s.ambient();
  return os.str();
}

template <class T, class Map>
auto call_map(const Map& phi, const T& x) {
  try {
    return phi(x);
  } catch (const std::exception& e) {
    throw Error(std::string("check_lattice_iso: map failed on ") + describe(x) + ": " + e.what());
  }
}

void note(LatticeIsoReport& r, int max_witnesses, const std::string& what) {
  if (static_cast<int>(r.witnesses.size()) < max_witnesses) r.witnesses.push_back(what);
}

}  // namespace

Polyhedron meet_convex(const Polyhedron& a, const Polyhedron& b) {
  const Polyhedron m = intersect(a, b);
  if (is_empty(m)) return Polyhedron::empty(a.dim());
  return reduce_hrep(to_vrep(m));
}

Polyhedron join_convex(const Polyhedron& a, const Polyhedron& b) {
  const Polyhedron j = hull_union(a, b);
  if (is_empty(j)) return Polyhedron::empty(a.dim());
  return reduce_vrep(j);
}

Subspace Subspace::span(int n, const Mat& columns) {
  if (columns.rows() != n) throw InvalidArgument("Subspace::span: dimension mismatch");
  if (columns.cols() == 0) return zero(n);
  const Eigen::JacobiSVD<Mat> svd(columns, Eigen::ComputeThinU);
  const Vec s = svd.singularValues();
  const double tol = 1e-10 * std::max(1.0, s(0));
  int rank = 0;
  while (rank < s.size() && s(rank) > tol) ++rank;
  return Subspace(svd.matrixU().leftCols(rank));
}

Subspace Subspace::line(const Vec& v) {
  if (v.norm() <= kRankTol) throw InvalidArgument("Subspace::line: zero direction");
  return Subspace(v.normalized());
}

Subspace Subspace::complement() const {
  const int n = ambient();
  if (dim() == 0) return whole(n);
  const Eigen::JacobiSVD<Mat> svd(basis_, Eigen::ComputeFullU);
  return Subspace(svd.matrixU().rightCols(n - dim()));
}

double containment_gap(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InvalidArgument("subspace: dimension mismatch");
  if (a.dim() == 0) return 0.0;
  const Mat residual = a.basis() - b.basis() * (b.basis().transpose() * a.basis());
  return Eigen::JacobiSVD<Mat>(residual).singularValues()(0);
}

bool is_subspace_of(const Subspace& a, const Subspace& b, double tol) { return containment_gap(a, b) < tol; }

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  return a.dim() == b.dim() && containment_gap(a, b) < tol && containment_gap(b, a) < tol;
}

bool contains(const Subspace& s, const Vec& v, double tol) {
  require_dim(v, s.ambient(), "Subspace::contains");
  const Vec r = v - s.basis() * (s.basis().transpose() * v);
  return r.norm() <= tol * std::max(1.0, v.norm());
}

Subspace meet_sub(const Subspace& a, const Subspace& b) {
  const int n = a.ambient();
  if (b.ambient() != n) throw InvalidArgument("meet_sub: dimension mismatch");
  const Mat ca = a.complement().basis(), cb = b.complement().basis();
  const long rows = ca.cols() + cb.cols();
  if (rows == 0) return Subspace::whole(n);
  Mat stacked(rows, n);
  stacked << ca.transpose(), cb.transpose();
  const Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const Vec s = svd.singularValues();
  int rank = 0;
  while (rank < s.size() && s(rank) > 1e-10) ++rank;
  return Subspace::span(n, svd.matrixV().rightCols(n - rank));
}

Subspace join_sub(const Subspace& a, const Subspace& b) {
  const int n = a.ambient();
  if (b.ambient() != n) throw InvalidArgument("join_sub: dimension mismatch");
  Mat both(n, a.dim() + b.dim());
  both << a.basis(), b.basis();
  return Subspace::span(n, both);
}

Subspace image(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw InvalidArgument("image: dimension mismatch");
  return Subspace::span(static_cast<int>(m.rows()), m * s.basis());
}

Polyhedron Segment::to_polyhedron() const {
  if (symmetric) return Polyhedron::segment(-endpoint, endpoint);
  return Polyhedron::segment(Vec::Zero(endpoint.size()), endpoint);
}

LatticeIsoReport check_lattice_iso(const SetMap& phi, const std::vector<std::pair<Polyhedron, Polyhedron>>& pairs,
                                   SetLattice lattice, int max_witnesses) {
  LatticeIsoReport r;
  auto member = [&](const Polyhedron& p) {
    switch (lattice) {
      case SetLattice::kAll:
        return true;
      case SetLattice::kContainsOrigin:
        return !is_empty(p) && contains(p, Vec::Zero(p.dim()));
      case SetLattice::kSymmetric:
        return !is_empty(p) && flags(p).symmetric;
    }
    return true;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const std::string tag = "pair " + std::to_string(i) + ": ";
    ++r.samples;
    const Polyhedron fa = call_map(phi, a), fb = call_map(phi, b);
    for (const Polyhedron* img : {&fa, &fb}) {
      if (!member(*img)) {
        ++r.membership_violations;
        note(r, max_witnesses, tag + "image " + describe(*img) + " of " + describe(img == &fa ? a : b) + " leaves the lattice");
      }
    }
    const Polyhedron m = meet_convex(a, b);
    if (!is_empty(m)) {
      const Polyhedron fm = call_map(phi, m);
      if (!same_set(fm, meet_convex(fa, fb))) {
        ++r.meet_violations;
        note(r, max_witnesses, tag + "phi(A ^ B) != phi(A) ^ phi(B) for A = " + describe(a) + ", B = " + describe(b));
      }
    }
    const Polyhedron j = join_convex(a, b);
    if (!same_set(call_map(phi, j), join_convex(fa, fb))) {
      ++r.join_violations;
      note(r, max_witnesses, tag + "phi(A v B) != phi(A) v phi(B) for A = " + describe(a) + ", B = " + describe(b));
    }
    if (is_subset(a, b) != is_subset(fa, fb) || is_subset(b, a) != is_subset(fb, fa)) {
      ++r.order_violations;
      note(r, max_witnesses, tag + "inclusion not preserved for A = " + describe(a) + ", B = " + describe(b));
    }
  }
  return r;
}

LatticeIsoReport check_lattice_iso(const SubspaceMap& phi, const std::vector<std::pair<Subspace, Subspace>>& pairs,
                                   int max_witnesses) {
  LatticeIsoReport r;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const std::string tag = "pair " + std::to_string(i) + ": ";
    ++r.samples;
    const Subspace fa = call_map(phi, a), fb = call_map(phi, b);
    if (!same_subspace(call_map(phi, meet_sub(a, b)), meet_sub(fa, fb))) {
      ++r.meet_violations;
      note(r, max_witnesses, tag + "meet not preserved");
    }
    if (!same_subspace(call_map(phi, join_sub(a, b)), join_sub(fa, fb))) {
      ++r.join_violations;
      note(r, max_witnesses, tag + "join not preserved");
    }
    if (is_subspace_of(a, b) != is_subspace_of(fa, fb) || is_subspace_of(b, a) != is_subspace_of(fb, fa)) {
      ++r.order_violations;
      note(r, max_witnesses, tag + "inclusion not preserved");
    }
  }
  return r;
}

std::vector<double> dyadic_ladder(int k) {
  if (k < 0) throw InvalidArgument("dyadic_ladder: depth must be non-negative");
  std::vector<double> q;
  for (int i = k; i >= -k; --i) q.push_back(std::ldexp(1.0, i));
  return q;
}

CompactExtension extend_to_compact(const SetMap& phi, const Polyhedron& a, const std::vector<double>& ladder,
                                   const std::optional<Polyhedron>& ball, bool parallel) {
  const int n = a.dim();
  if (ladder.empty()) throw InvalidArgument("extend_to_compact: empty ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0.0)) throw InvalidArgument("extend_to_compact: ladder entries must be positive");
    if (i > 0 && ladder[i] >= ladder[i - 1]) throw InvalidArgument("extend_to_compact: ladder must be descending");
  }
  if (!is_bounded(a) || !flags(a).symmetric) throw InvalidArgument("extend_to_compact: body must be symmetric and compact");
  const Polyhedron b = ball ? *ball : Polyhedron::cross_polytope(n);

  const long m = static_cast<long>(ladder.size());
  std::vector<Polyhedron> images(ladder.size());
  std::vector<std::exception_ptr> errors(ladder.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < m; ++i) {
    try {
      images[i] = to_hrep(phi(join_convex(a, scale(b, ladder[i]))));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Polyhedron body = reduce_hrep(images.front());
  for (std::size_t i = 1; i < images.size(); ++i) body = reduce_hrep(intersect(body, images[i]));
  double radius = 0.0;
  const Polyhedron image_of_ball = to_vrep(phi(b));
  for (const Vec& v : image_of_ball.vertices()) radius = std::max(radius, v.norm());
  return {to_vrep(body), ladder.back() * radius};
}

}  // namespace convdual

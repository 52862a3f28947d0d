#include "convdual/transforms.hpp"

#include "convdual/fenchel.hpp"

#include <cmath>

namespace convdual {

CanonicalTransform CanonicalTransform::identity(int n, TransformMode mode) {
  return {1.0, Mat::Identity(n, n), Vec::Zero(n), Vec::Zero(n), 0.0, mode};
}

void CanonicalTransform::validate() const {
  const int n = static_cast<int>(U.rows());
  if (n < 1 || U.cols() != n) throw InvalidArgument("CanonicalTransform: U must be square");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidArgument("CanonicalTransform: alpha must be positive");
  require_dim(shift, n, "CanonicalTransform shift");
  require_dim(phi0, n, "CanonicalTransform phi0");
  if (!U.allFinite() || !shift.allFinite() || !phi0.allFinite() || !std::isfinite(r0)) {
    throw InvalidArgument("CanonicalTransform: non-finite parameter");
  }
  if (std::abs(U.determinant()) <= 1e-12) throw InvalidArgument("CanonicalTransform: U is singular");
}

const char* to_string(TransformMode mode) {
  return mode == TransformMode::kPreserving ? "preserving" : "reversing";
}

TransformMode parse_mode(const std::string& s) {
  if (s == "preserving") return TransformMode::kPreserving;
  if (s == "reversing") return TransformMode::kReversing;
  throw InvalidArgument("unknown transform mode '" + s + "'");
}

PLConvexFunction apply_affine_part(const CanonicalTransform& t, const PLConvexFunction& f) {
  t.validate();
  if (f.dim() != t.dim()) throw InvalidArgument("apply: dimension mismatch");
  std::vector<AffineFunctional> pieces;
  pieces.reserve(f.pieces().size());
  const Mat ut = t.U.transpose();
  for (const AffineFunctional& u : f.pieces()) {
    pieces.push_back({t.alpha * (ut * u.phi) + t.phi0, t.alpha * (u.phi.dot(t.shift) + u.c) + t.r0});
  }
  if (!f.has_domain()) return PLConvexFunction(std::move(pieces));
  std::vector<Halfspace> hs;
  for (const Halfspace& h : f.domain()->halfspaces()) {
    hs.push_back({ut * h.normal, h.offset - h.normal.dot(t.shift)});
  }
  return PLConvexFunction(std::move(pieces), Polyhedron::from_halfspaces(f.dim(), std::move(hs)));
}

PLConvexFunction apply(const CanonicalTransform& t, const PLConvexFunction& f) {
  if (t.mode == TransformMode::kPreserving) return apply_affine_part(t, f);
  if (f.dim() != t.dim()) throw InvalidArgument("apply: dimension mismatch");
  return apply_affine_part(t, conjugate_pl(f));
}

double apply_pointwise(const CanonicalTransform& t, const std::function<double(const Vec&)>& f, const Vec& y) {
  require_dim(y, t.dim(), "apply_pointwise");
  const double inner = f(t.U * y + t.shift);
  if (inner == kInf) return kInf;
  return t.alpha * inner + t.phi0.dot(y) + t.r0;
}

CanonicalTransform invert(const CanonicalTransform& t) {
  t.validate();
  if (t.mode != TransformMode::kPreserving) {
    throw InvalidArgument("invert: only preserving transforms have a canonical inverse; use compose");
  }
  const Eigen::PartialPivLU<Mat> lu(t.U);
  const Mat uinv = lu.inverse();
  const Vec ux0 = uinv * t.shift;
  CanonicalTransform r;
  r.alpha = 1.0 / t.alpha;
  r.U = uinv;
  r.shift = -ux0;
  r.phi0 = -(uinv.transpose() * t.phi0) / t.alpha;
  r.r0 = (t.phi0.dot(ux0) - t.r0) / t.alpha;
  r.mode = TransformMode::kPreserving;
  return r;
}

CanonicalTransform conjugate_through(const CanonicalTransform& p) {
  p.validate();
  const Mat uinv = p.U.inverse();
  const Vec ux0 = uinv * p.shift;
  CanonicalTransform r;
  r.alpha = p.alpha;
  r.U = uinv.transpose() / p.alpha;
  r.shift = -(uinv.transpose() * p.phi0) / p.alpha;
  r.phi0 = -ux0;
  r.r0 = p.phi0.dot(ux0) - p.r0;
  r.mode = TransformMode::kPreserving;
  return r;
}

namespace {

// s o t for the affine parts only.
CanonicalTransform compose_affine(const CanonicalTransform& s, const CanonicalTransform& t) {
  CanonicalTransform r;
  r.alpha = s.alpha * t.alpha;
  r.U = t.U * s.U;
  r.shift = t.U * s.shift + t.shift;
  r.phi0 = s.alpha * (s.U.transpose() * t.phi0) + s.phi0;
  r.r0 = s.alpha * (t.phi0.dot(s.shift) + t.r0) + s.r0;
  return r;
}

}  // namespace

CanonicalTransform compose(const CanonicalTransform& s, const CanonicalTransform& t) {
  s.validate();
  t.validate();
  if (s.dim() != t.dim()) throw InvalidArgument("compose: dimension mismatch");
  const bool s_rev = s.mode == TransformMode::kReversing;
  const bool t_rev = t.mode == TransformMode::kReversing;
  // With P the affine part, a reversing transform is P o F, and F o P = P' o F.
  CanonicalTransform r = s_rev ? compose_affine(s, conjugate_through(t)) : compose_affine(s, t);
  r.mode = (s_rev != t_rev) ? TransformMode::kReversing : TransformMode::kPreserving;
  return r;
}

double parameter_distance(const CanonicalTransform& a, const CanonicalTransform& b) {
  if (a.mode != b.mode || a.dim() != b.dim()) return kInf;
  auto rel = [](double x, double y) { return std::abs(x - y) / (1.0 + std::abs(y)); };
  double d = std::max(rel(a.alpha, b.alpha), rel(a.r0, b.r0));
  for (int i = 0; i < a.dim(); ++i) {
    d = std::max({d, rel(a.shift(i), b.shift(i)), rel(a.phi0(i), b.phi0(i))});
    for (int j = 0; j < a.dim(); ++j) d = std::max(d, rel(a.U(i, j), b.U(i, j)));
  }
  return d;
}

}  // namespace convdual

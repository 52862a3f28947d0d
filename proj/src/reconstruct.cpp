#include "convdual/reconstruct.hpp"

#include "convdual/fenchel.hpp"
#include "convdual/sampling.hpp"

#include <cmath>

namespace convdual {

namespace {

double rel_err(double a, double b) {
  if (a == kInf && b == kInf) return 0.0;
  if (a == kInf || b == kInf) return kInf;
  return std::abs(a - b) / (1.0 + std::abs(b));
}

void check_square(const Mat& a, const char* where) {
  if (a.rows() != a.cols() || a.rows() < 1) throw InvalidArgument(std::string(where) + ": matrix must be square");
  if (std::abs(a.determinant()) <= 1e-12) throw InvalidArgument(std::string(where) + ": matrix must be invertible");
}

PLConvexFunction call_checked(const FunctionOracle& o, const PLConvexFunction& f) {
  PLConvexFunction out = o.call(f);
  if (out.dim() != o.n) throw InvalidArgument("oracle returned a function of the wrong dimension");
  return out;
}

// Endpoint w of a segment [-w, w] (symmetric) or [0, w] (anchored).
Vec segment_endpoint(const Polyhedron& image, bool symmetric, const char* where) {
  const Polyhedron v = reduce_vrep(to_vrep(image));
  const auto& vs = v.vertices();
  const std::string ctx(where);
  if (!v.rays().empty()) throw NonRepresentable(ctx + ": image of a segment is unbounded");
  if (vs.size() == 1) throw NonRepresentable(ctx + ": image of a nonzero segment is degenerate");
  if (vs.size() != 2) throw NonRepresentable(ctx + ": image of a segment is not a segment");
  const double scale = 1.0 + std::max(vs[0].norm(), vs[1].norm());
  if (symmetric) {
    if ((vs[0] + vs[1]).norm() > 1e-8 * scale) throw NonRepresentable(ctx + ": image of a symmetric segment is not symmetric");
    return vs[0];
  }
  if (vs[0].norm() <= 1e-9 * scale) return vs[1];
  if (vs[1].norm() <= 1e-9 * scale) return vs[0];
  throw NonRepresentable(ctx + ": image of an anchored segment does not contain the origin as an endpoint");
}

// (a, b) with w = a u + b v in the least-squares sense, and the fit residual.
std::pair<Eigen::Vector2d, double> fit_pair(const Vec& u, const Vec& v, const Vec& w) {
  Mat m(u.size(), 2);
  m << u, v;
  const Eigen::Vector2d ab = m.colPivHouseholderQr().solve(w);
  return {ab, (m * ab - w).norm() / (1.0 + w.norm())};
}

Mat unit_columns(int n) { return Mat::Identity(n, n); }

Polyhedron random_symmetric_body(Rng& rng, int n) { return random_symmetric_polytope(rng, n, n + 1); }

// Largest pointwise error between the oracle image of f and f(E .).
double action_residual(const FunctionOracle& o, const Mat& e, const PLConvexFunction& f, Rng& rng, int points) {
  const PLConvexFunction tf = call_checked(o, f);
  double worst = 0.0;
  for (const Vec& x : random_points(rng, o.n, points, 2.0)) worst = std::max(worst, rel_err(tf(x), f(e * x)));
  return worst;
}

// Audit sigma_C <= sigma_{C v C'} on sampled symmetric bodies.
void audit_seminorm_pairs(const FunctionOracle& o, const RecoveryOptions& opt, Rng& rng) {
  for (int k = 0; k < opt.audit_pairs; ++k) {
    const Polyhedron c = random_symmetric_body(rng, o.n);
    const Polyhedron d = join_convex(c, random_symmetric_body(rng, o.n));
    const PLConvexFunction f = SublinearFunction(c).to_pl(), g = SublinearFunction(d).to_pl();
    if (!is_leq(call_checked(o, f), call_checked(o, g))) {
      throw AuditFailure("seminorm oracle is not order preserving on sampled pair " + std::to_string(k));
    }
  }
}

void require_dim_at_least(int n, int lo, const char* where) {
  if (n < lo) throw InvalidArgument(std::string(where) + ": dimension too small");
}

}  // namespace

const char* to_string(ConeTag tag) {
  switch (tag) {
    case ConeTag::kConv: return "conv";
    case ConeTag::kSubl: return "subl";
    case ConeTag::kMink: return "mink";
    case ConeTag::kSemn: return "semn";
  }
  return "?";
}

const char* to_string(ScalarClass c) {
  switch (c) {
    case ScalarClass::kUpToPositiveScalar: return "up-to-positive-scalar";
    case ScalarClass::kUpToSign: return "up-to-sign";
    case ScalarClass::kExact: return "exact";
  }
  return "?";
}

Mat normalize_sign(const Mat& m) {
  const double big = m.cwiseAbs().maxCoeff();
  if (!(big > 0.0)) throw InvalidArgument("normalize: zero matrix");
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j)) > 1e-9 * big) return m(i, j) > 0.0 ? Mat(m) : Mat(-m);
    }
  }
  return m;
}

Mat normalize_up_to_scalar(const Mat& m) {
  const double norm = m.norm();
  if (!(norm > 0.0)) throw InvalidArgument("normalize: zero matrix");
  return normalize_sign(m / norm);
}

RecoveredMap recover_linear_subspaces(const SubspaceOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  require_dim_at_least(n, 2, "recover_linear_subspaces");
  auto image_line = [&](const Vec& x) {
    const Subspace s = oracle.call(Subspace::line(x));
    if (s.ambient() != n) throw InvalidArgument("recover_linear_subspaces: oracle changed the dimension");
    if (s.dim() != 1) throw NonRepresentable("recover_linear_subspaces: image of a line is not a line");
    return Vec(s.basis().col(0));
  };
  const Mat e = unit_columns(n);
  std::vector<Vec> v(n);
  for (int i = 0; i < n; ++i) v[i] = image_line(e.col(i));
  Mat lambda(n, n);
  lambda.col(0) = v[0];
  for (int j = 1; j < n; ++j) {
    const Vec w = image_line(e.col(0) + e.col(j));
    const auto [ab, res] = fit_pair(v[0], v[j], w);
    if (res > 1e-8 || std::abs(ab(0)) < 1e-10 || std::abs(ab(1)) < 1e-10) {
      throw NonRepresentable("recover_linear_subspaces: relative scalings are inconsistent");
    }
    lambda.col(j) = (ab(1) / ab(0)) * v[j];
  }
  if (std::abs(lambda.determinant()) <= 1e-12 * std::pow(lambda.norm(), n)) {
    throw NonRepresentable("recover_linear_subspaces: recovered map is singular");
  }

  RecoveredMap out{normalize_up_to_scalar(lambda), ScalarClass::kUpToPositiveScalar, 0.0};
  Rng rng(opt.seed);
  for (int k = 0; k < opt.validation_inputs; ++k) {
    const int d = rng.integer(1, n - 1);
    const Subspace s = Subspace::span(n, random_orthonormal(rng, n, d));
    const Subspace got = oracle.call(s), want = image(out.matrix, s);
    if (got.dim() != want.dim()) throw NonRepresentable("recover_linear_subspaces: validation image has the wrong dimension");
    out.residual = std::max({out.residual, containment_gap(got, want), containment_gap(want, got)});
  }
  if (out.residual > opt.tolerance) throw NonRepresentable("recover_linear_subspaces: validation residual too large");
  return out;
}

RecoveredMap recover_from_segments(const SetOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  require_dim_at_least(n, 2, "recover_from_segments");
  auto probe = [&](const Vec& x) {
    return segment_endpoint(oracle.call(Segment{x, true}.to_polyhedron()), true, "recover_from_segments");
  };
  const Mat e = unit_columns(n);
  std::vector<Vec> w(n);
  for (int i = 0; i < n; ++i) w[i] = probe(e.col(i));
  Mat lambda(n, n);
  lambda.col(0) = w[0];
  for (int j = 1; j < n; ++j) {
    const auto [ab, res] = fit_pair(w[0], w[j], probe(e.col(0) + e.col(j)));
    if (res > 1e-8 || std::abs(std::abs(ab(0)) - 1.0) > 1e-8 || std::abs(std::abs(ab(1)) - 1.0) > 1e-8) {
      throw NonRepresentable("recover_from_segments: segment images are not induced by a linear map");
    }
    lambda.col(j) = (ab(0) * ab(1) > 0.0 ? 1.0 : -1.0) * w[j];
  }
  if (std::abs(lambda.determinant()) <= 1e-12) throw NonRepresentable("recover_from_segments: recovered map is singular");

  RecoveredMap out{normalize_sign(lambda), ScalarClass::kUpToSign, 0.0};
  Rng rng(opt.seed);
  for (int k = 0; k < opt.validation_inputs; ++k) {
    const Vec x = rng.normal_vec(n);
    const Vec lx = out.matrix * x;
    const Vec got = probe(x);
    out.residual = std::max(out.residual, std::min((got - lx).norm(), (got + lx).norm()) / (1.0 + lx.norm()));
  }
  // Meet/join identity [-x, x] = Rx ^ (R(x - x0) v [-x0, x0]) for non-collinear x, x0.
  const int identity_checks = std::min(opt.validation_inputs, 5);
  for (int k = 0; k < identity_checks; ++k) {
    const Vec x = rng.normal_vec(n), x0 = rng.normal_vec(n);
    const Polyhedron lhs = oracle.call(Segment{x, true}.to_polyhedron());
    const Polyhedron rhs = meet_convex(oracle.call(Polyhedron::line(x)),
                                       join_convex(oracle.call(Polyhedron::line(x - x0)),
                                                   oracle.call(Segment{x0, true}.to_polyhedron())));
    if (!same_set(lhs, rhs, 1e-7)) throw NonRepresentable("recover_from_segments: meet/join identity fails on a sampled pair");
  }
  if (out.residual > opt.tolerance) throw NonRepresentable("recover_from_segments: validation residual too large");
  return out;
}

SetOracle induced_set_oracle(const FunctionOracle& oracle) {
  return {oracle.n, [oracle](const Polyhedron& c) { return body_of(call_checked(oracle, SublinearFunction(c).to_pl())); }};
}

RecoveredMap recover_seminorm_map(const FunctionOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  Rng rng(opt.seed);
  audit_seminorm_pairs(oracle, opt, rng);
  RecoveryOptions inner = opt;
  inner.validation_inputs = std::min(opt.validation_inputs, 10);
  const RecoveredMap lambda = recover_from_segments(induced_set_oracle(oracle), inner);
  RecoveredMap out{normalize_sign(lambda.matrix.transpose()), ScalarClass::kUpToSign, 0.0};
  for (int k = 0; k < 20; ++k) {
    const PLConvexFunction f = Seminorm(random_symmetric_body(rng, n)).to_pl();
    out.residual = std::max(out.residual, action_residual(oracle, out.matrix, f, rng, 50));
  }
  if (out.residual > opt.tolerance) throw NonRepresentable("recover_seminorm_map: verification residual too large");
  return out;
}

RecoveredMap recover_mink_map(const FunctionOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  const RecoveredMap candidate = recover_seminorm_map(oracle, opt);
  const SetOracle f = induced_set_oracle(oracle);
  const Mat e = unit_columns(n);
  int sign = 0;
  for (int i = 0; i < n; ++i) {
    const Vec w = segment_endpoint(f.call(Segment{e.col(i), false}.to_polyhedron()), false, "recover_mink_map");
    const Vec row = candidate.matrix.row(i).transpose();
    const double scale = 1e-8 * (1.0 + row.norm());
    int s = 0;
    if ((w - row).norm() <= scale) s = 1;
    else if ((w + row).norm() <= scale) s = -1;
    if (s == 0 || (sign != 0 && s != sign)) {
      throw NonRepresentable("recover_mink_map: anchored segment probes are inconsistent with both signs");
    }
    sign = s;
  }
  RecoveredMap out{sign * candidate.matrix, ScalarClass::kExact, 0.0};
  Rng rng(opt.seed + 1);
  for (int k = 0; k < 20; ++k) {
    const PLConvexFunction g = SublinearFunction(random_polytope_around_origin(rng, n, n + 2, 0.2)).to_pl();
    out.residual = std::max(out.residual, action_residual(oracle, out.matrix, g, rng, 50));
  }
  if (out.residual > opt.tolerance) throw NonRepresentable("recover_mink_map: verification residual too large");
  return out;
}

RecoveredMap recover_homogeneous_map(const HomogeneousOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  const double p = oracle.degree;
  const bool positive = oracle.mode == Homogeneity::kPositive;
  auto lift = [positive, p](const PLConvexFunction& k) {
    const Polyhedron body = body_of(k);
    return positive ? hom_power(MinkowskiGauge(polar(body)), p) : hom_power(Seminorm(body), p);
  };
  FunctionOracle reduced{positive ? ConeTag::kMink : ConeTag::kSemn, n, [oracle, lift](const PLConvexFunction& k) {
                           const HomogeneousFunction image = oracle.call(lift(k));
                           if (image.mode() != oracle.mode) throw NonRepresentable("homogeneous oracle changed the homogeneity mode");
                           return std::visit([](const auto& b) { return b.to_pl(); }, hom_root(image));
                         }};
  RecoveredMap out = positive ? recover_mink_map(reduced, opt) : recover_seminorm_map(reduced, opt);
  out.residual = 0.0;
  Rng rng(opt.seed + 2);
  for (int k = 0; k < 10; ++k) {
    const Polyhedron body = positive ? random_polytope_around_origin(rng, n, n + 2, 0.2) : random_symmetric_body(rng, n);
    const HomogeneousFunction h = lift(SublinearFunction(body).to_pl());
    const HomogeneousFunction th = oracle.call(h);
    for (const Vec& x : random_points(rng, n, 50, 2.0)) out.residual = std::max(out.residual, rel_err(th(x), h(out.matrix * x)));
  }
  if (out.residual > opt.tolerance) throw NonRepresentable("recover_homogeneous_map: verification residual too large");
  return out;
}

SublinearRecovery recover_sublinear_map(const FunctionOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  const Vec zero = Vec::Zero(n);
  const Mat e = unit_columns(n);
  Rng rng(opt.seed);
  const PLConvexFunction t0 = call_checked(oracle, PLConvexFunction::zero(n));
  Vec phi0(n);
  for (int j = 0; j < n; ++j) phi0(j) = t0(e.col(j));
  if (!phi0.allFinite() || std::abs(t0(zero)) > opt.tolerance) throw NonRepresentable("recover_sublinear_map: T(0) is not linear");
  for (const Vec& y : random_points(rng, n, 2 * n, 2.0)) {
    if (rel_err(t0(y), phi0.dot(y)) > opt.tolerance) throw NonRepresentable("recover_sublinear_map: T(0) is not linear");
  }
  Mat u(n, n);
  for (int i = 0; i < n; ++i) {
    const PLConvexFunction s = call_checked(oracle, PLConvexFunction::affine(e.col(i), 0.0));
    for (int j = 0; j < n; ++j) u(i, j) = s(e.col(j)) - phi0(j);
    if (!u.row(i).allFinite()) throw NonRepresentable("recover_sublinear_map: image of a linear functional is not finite");
  }
  if (std::abs(u.determinant()) <= 1e-12) throw NonRepresentable("recover_sublinear_map: recovered map is singular");

  SublinearRecovery out{{u, ScalarClass::kExact, 0.0}, phi0};
  for (int k = 0; k < opt.validation_inputs; ++k) {
    std::vector<AffineFunctional> pieces;
    for (int m = rng.integer(1, n + 2); m > 0; --m) pieces.push_back({rng.uniform_vec(n, -2.0, 2.0), 0.0});
    const PLConvexFunction f(std::move(pieces));
    const PLConvexFunction tf = call_checked(oracle, f);
    for (const Vec& x : random_points(rng, n, opt.validation_points, 2.0)) {
      out.map.residual = std::max(out.map.residual, rel_err(tf(x), f(u * x) + phi0.dot(x)));
    }
  }
  if (out.map.residual > opt.tolerance) throw NonRepresentable("recover_sublinear_map: verification residual too large");
  return out;
}

Identification identify_preserving(const FunctionOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  if (n < 1) throw InvalidArgument("identify_preserving: dimension must be positive");
  const Vec zero = Vec::Zero(n);
  const Mat e = unit_columns(n);
  Rng rng(opt.seed);

  // T(0) = <phi0, .> + r0 must be affine.
  const PLConvexFunction t0 = call_checked(oracle, PLConvexFunction::zero(n));
  CanonicalTransform t;
  t.r0 = t0(zero);
  t.phi0 = Vec(n);
  for (int j = 0; j < n; ++j) t.phi0(j) = t0(e.col(j)) - t.r0;
  if (!std::isfinite(t.r0) || !t.phi0.allFinite()) throw AuditFailure("identify_preserving: T(0) is not affine");
  for (const Vec& y : random_points(rng, n, 2 * n + 2, 2.0)) {
    if (rel_err(t0(y), t.phi0.dot(y) + t.r0) > opt.tolerance) throw AuditFailure("identify_preserving: T(0) is not affine");
  }
  auto s_of = [&](const PLConvexFunction& f) {
    const PLConvexFunction tf = call_checked(oracle, f);
    return [tf, &t0](const Vec& y) { return tf(y) - t0(y); };
  };

  // S(1) = alpha.
  const auto s1 = s_of(PLConvexFunction::constant(n, 1.0));
  t.alpha = s1(zero);
  if (!(t.alpha > 0.0) || !std::isfinite(t.alpha)) throw NonRepresentable("identify_preserving: S(1) is not a positive constant");
  for (const Vec& y : random_points(rng, n, n + 1, 2.0)) {
    if (rel_err(s1(y), t.alpha) > opt.tolerance) throw NonRepresentable("identify_preserving: S(1) is not constant");
  }

  // S(<e_i, .>)(y) = alpha ((U y)_i + x0_i).
  t.U = Mat(n, n);
  t.shift = Vec(n);
  for (int i = 0; i < n; ++i) {
    const auto si = s_of(PLConvexFunction::affine(e.col(i), 0.0));
    const double base = si(zero);
    t.shift(i) = base / t.alpha;
    for (int j = 0; j < n; ++j) t.U(i, j) = (si(e.col(j)) - base) / t.alpha;
  }
  if (!t.U.allFinite() || !t.shift.allFinite()) throw NonRepresentable("identify_preserving: image of an affine function is not finite");
  if (std::abs(t.U.determinant()) <= 1e-12) throw NonRepresentable("identify_preserving: recovered U is singular");
  t.mode = TransformMode::kPreserving;

  // S must act linearly on affine functions.
  for (int k = 0; k < std::max(1, n); ++k) {
    const AffineFunctional u = random_affine(rng, n);
    const auto su = s_of(PLConvexFunction::affine(u.phi, u.c));
    for (const Vec& y : random_points(rng, n, n + 1, 2.0)) {
      const double want = t.alpha * (u.phi.dot(t.U * y + t.shift) + u.c);
      if (rel_err(su(y), want) > opt.tolerance) throw NonRepresentable("identify_preserving: S is not linear on affine probes");
    }
  }

  Identification out{t, 0.0, 0};
  for (int k = 0; k < opt.audit_pairs; ++k) {
    const auto [f, g] = certified_pair(rng, n, rng.integer(1, 4));
    if (!is_leq(call_checked(oracle, f), call_checked(oracle, g))) {
      throw AuditFailure("identify_preserving: order not preserved on sampled pair " + std::to_string(k));
    }
    ++out.audited_pairs;
  }
  for (int k = 0; k < opt.validation_inputs; ++k) {
    const PLConvexFunction f = random_pl(rng, n, rng.integer(1, 5), rng.coin() ? DomainKind::kHalfspaces : DomainKind::kNone);
    const PLConvexFunction got = call_checked(oracle, f), want = apply(t, f);
    for (const Vec& y : random_points(rng, n, opt.validation_points, 2.0)) {
      out.residual = std::max(out.residual, rel_err(got(y), want(y)));
    }
  }
  if (out.residual > opt.tolerance) throw NonRepresentable("identify_preserving: verification residual too large");
  return out;
}

Identification identify_reversing(const FunctionOracle& oracle, const RecoveryOptions& opt) {
  const int n = oracle.n;
  if (n < 1 || n > kMaxExactConjugateDim) throw InvalidArgument("identify_reversing: dimension must be between 1 and 3");
  Rng rng(opt.seed);
  int audited = 0;
  for (int k = 0; k < opt.audit_pairs; ++k) {
    const auto [f, g] = certified_pair(rng, n, rng.integer(1, 4));
    if (!is_leq(call_checked(oracle, g), call_checked(oracle, f))) {
      throw AuditFailure("identify_reversing: order not reversed on sampled pair " + std::to_string(k));
    }
    ++audited;
  }
  const FunctionOracle flipped{ConeTag::kConv, n, [&oracle](const PLConvexFunction& f) { return call_checked(oracle, conjugate_pl(f)); }};
  RecoveryOptions inner = opt;
  inner.audit_pairs = 0;
  inner.validation_inputs = 0;
  Identification out = identify_preserving(flipped, inner);
  out.transform.mode = TransformMode::kReversing;
  out.audited_pairs = audited;
  constexpr double kTol = 1e-6;
  for (int k = 0; k < opt.validation_inputs; ++k) {
    const PLConvexFunction f = random_pl(rng, n, rng.integer(1, 5), rng.coin() ? DomainKind::kPolytope : DomainKind::kNone);
    const PLConvexFunction got = call_checked(oracle, f), want = apply(out.transform, f);
    for (const Vec& y : random_points(rng, n, opt.validation_points, 2.0)) {
      out.residual = std::max(out.residual, rel_err(got(y), want(y)));
    }
  }
  if (out.residual > std::max(kTol, opt.tolerance)) throw NonRepresentable("identify_reversing: verification residual too large");
  return out;
}

FunctionOracle transform_oracle(const CanonicalTransform& t) {
  t.validate();
  return {ConeTag::kConv, t.dim(), [t](const PLConvexFunction& f) { return apply(t, f); }};
}

FunctionOracle precomposition_oracle(ConeTag tag, const Mat& a, const Vec& phi0) {
  check_square(a, "precomposition_oracle");
  const int n = static_cast<int>(a.rows());
  const Vec b = phi0.size() == 0 ? Vec::Zero(n) : phi0;
  require_dim(b, n, "precomposition_oracle");
  return {tag, n, [a, b](const PLConvexFunction& f) {
            return add_affine(precompose(f, a, Vec::Zero(a.rows())), b, 0.0);
          }};
}

SetOracle linear_set_oracle(const Mat& a) {
  check_square(a, "linear_set_oracle");
  return {static_cast<int>(a.rows()), [a](const Polyhedron& c) { return linear_image(c, a); }};
}

SubspaceOracle linear_subspace_oracle(const Mat& a) {
  check_square(a, "linear_subspace_oracle");
  return {static_cast<int>(a.rows()), [a](const Subspace& s) { return image(a, s); }};
}

HomogeneousOracle linear_homogeneous_oracle(const Mat& a, double degree, Homogeneity mode) {
  check_square(a, "linear_homogeneous_oracle");
  return {static_cast<int>(a.rows()), degree, mode, [a](const HomogeneousFunction& h) {
            return std::visit([&](const auto& k) { return HomogeneousFunction(precompose(k, a), h.degree()); }, h.base());
          }};
}

MinkowskiGauge precompose(const MinkowskiGauge& k, const Mat& a) {
  check_square(a, "precompose");
  return MinkowskiGauge(linear_image(k.set(), a.inverse()));
}

Seminorm precompose(const Seminorm& k, const Mat& a) {
  check_square(a, "precompose");
  return Seminorm(linear_image(k.dual_body(), a.transpose()));
}

}  // namespace convdual

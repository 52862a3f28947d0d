// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "convdual/fenchel.hpp"
#include "convdual/reconstruct.hpp"
#include "convdual/sampling.hpp"
#include "convdual/verifier.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace convdual;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel_err(double a, double b) {
  if (a == kInf && b == kInf) return 0.0;
  if (a == kInf || b == kInf) return kInf;
  return std::abs(a - b) / (1.0 + std::abs(b));
}

double sign_free(const Mat& a, const Mat& b) { return std::min((a - b).norm(), (a + b).norm()); }

// Vertices (x, t) of the epigraph of f.
std::vector<Vec> epigraph_vertices(const PLConvexFunction& f) {
  const int n = f.dim();
  const std::size_t m = f.pieces().size() + (f.has_domain() ? f.domain()->halfspaces().size() : 0);
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
  return enumerate_vertices(a, b).points;
}

Outcome c1_biconjugation() {
  Rng rng(101);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + k % 3;
    const DomainKind dk = k % 3 == 0 ? DomainKind::kNone : (k % 3 == 1 ? DomainKind::kPolytope : DomainKind::kHalfspaces);
    const PLConvexFunction f = random_pl(rng, n, rng.integer(1, 6), dk);
    const PLConvexFunction ff = biconjugate(f);
    for (const Vec& p : epigraph_vertices(f)) worst = std::max(worst, rel_err(ff(p.head(n)), f(p.head(n))));
    for (const Vec& x : random_points(rng, n, 500, 2.0)) {
      if (f.in_domain(x)) worst = std::max(worst, rel_err(ff(x), f(x)));
    }
  }
  return {worst <= 1e-8, "max error " + fmt("%.3g", worst) + " over 1000 functions"};
}

Outcome c2_order_reversal() {
  Rng rng(102);
  int violations = 0, checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto [f, g] = certified_pair(rng, 1 + k % 3, rng.integer(1, 4));
    if (!is_leq(f, g)) continue;
    ++checked;
    if (!is_leq(conjugate_pl(g), conjugate_pl(f))) ++violations;
  }
  return {violations == 0 && checked == 1000,
          std::to_string(violations) + " violations over " + std::to_string(checked) + " certified pairs"};
}

Outcome c3_fast_legendre() {
  Rng rng(103);
  bool identical = true;
  for (int k = 0; k < 20; ++k) {
    std::vector<double> v(1024);
    for (int i = 0; i < 1024; ++i) {
      const double x = -2.0 + 4.0 * i / 1023.0;
      v[i] = k % 2 ? std::abs(x - 0.3) + 0.2 * x * x : rng.normal();
    }
    const GridFunction1D g(-2.0, 4.0 / 1023.0, v);
    const GridSpec out = k < 10 ? default_conjugate_grid(g) : GridSpec{-3.0, 6.0 / 1023.0, 1024};
    identical = identical && conjugate_grid(g, out).values() == conjugate_grid_brute(g, out).values();
  }
  const std::size_t n = 100000;
  const GridFunction1D g = GridFunction1D::sample(-1.0, 2.0 / (n - 1), n, [](double x) { return x * x + std::abs(x); });
  const GridSpec out = default_conjugate_grid(g);
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const GridFunction1D fast = conjugate_grid(g, out);
  const auto t1 = clock::now();
  const GridFunction1D slow = conjugate_grid_brute(g, out);
  const auto t2 = clock::now();
  const double tf = std::chrono::duration<double>(t1 - t0).count(), ts = std::chrono::duration<double>(t2 - t1).count();
  const double speedup = ts / std::max(tf, 1e-9);
  identical = identical && fast.values() == slow.values();
  return {identical && speedup >= 50.0, std::string(identical ? "bit-identical" : "MISMATCH") + ", speedup " +
                                            fmt("%.0f", speedup) + "x at N = M = 1e5 (fast " + fmt("%.4f", tf) +
                                            " s, brute " + fmt("%.2f", ts) + " s)"};
}

Outcome c4_ds_inversion() {
  Rng rng(104);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + k % 3;
    const Polyhedron c = random_polytope(rng, n, n + 3);
    worst = std::max(worst, vertex_hausdorff(body_of(support_function(c).to_pl()), c));
    std::vector<AffineFunctional> ps;
    for (int i = rng.integer(1, 6); i > 0; --i) ps.push_back({rng.uniform_vec(n, -2.0, 2.0), 0.0});
    const PLConvexFunction p(ps);
    const SublinearFunction sd(body_of(p));
    for (const Vec& x : random_points(rng, n, 20, 2.0)) worst = std::max(worst, rel_err(sd(x), p(x)));
  }
  return {worst <= 1e-9, "max error " + fmt("%.3g", worst) + " over 500 bodies and 500 functions"};
}

Outcome c5_identify_preserving() {
  Rng rng(105);
  double worst = 0.0;
  int failures = 0;
  for (int k = 0; k < 200; ++k) {
    const CanonicalTransform t = random_transform(rng, 1 + k % 6, TransformMode::kPreserving);
    RecoveryOptions opt;
    opt.seed = 1000 + k;
    try {
      worst = std::max(worst, parameter_distance(identify_preserving(transform_oracle(t), opt).transform, t));
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0 && worst <= 1e-8,
          "max parameter error " + fmt("%.3g", worst) + ", " + std::to_string(failures) + " failures over 200 transforms"};
}

Outcome c6_identify_reversing() {
  Rng rng(106);
  double worst = 0.0;
  int failures = 0;
  for (int k = 0; k < 100; ++k) {
    const CanonicalTransform t = random_transform(rng, 1 + k % 3, TransformMode::kReversing);
    RecoveryOptions opt;
    opt.seed = 2000 + k;
    try {
      worst = std::max(worst, identify_reversing(transform_oracle(t), opt).residual);
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0 && worst <= 1e-6,
          "max action residual " + fmt("%.3g", worst) + ", " + std::to_string(failures) + " failures over 100 transforms"};
}

Outcome c7_subspaces() {
  Rng rng(107);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Mat a = random_gl(rng, 2 + k % 4);
    RecoveryOptions opt;
    opt.seed = 3000 + k;
    worst = std::max(worst, sign_free(recover_linear_subspaces(linear_subspace_oracle(a), opt).matrix, normalize_up_to_scalar(a)));
  }
  return {worst <= 1e-8, "max Frobenius distance " + fmt("%.3g", worst) + " over 100 maps"};
}

Outcome c8_seminorms() {
  Rng rng(108);
  double class_err = 0.0, residual = 0.0, split = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Mat a = random_gl(rng, 2 + k % 2);
    RecoveryOptions opt;
    opt.seed = 4000 + k;
    const RecoveredMap r = recover_seminorm_map(precomposition_oracle(ConeTag::kSemn, a), opt);
    const RecoveredMap rn = recover_seminorm_map(precomposition_oracle(ConeTag::kSemn, -a), opt);
    class_err = std::max(class_err, sign_free(r.matrix, a));
    residual = std::max({residual, r.residual, rn.residual});
    split = std::max(split, (r.matrix - rn.matrix).norm());
  }
  return {class_err <= 1e-9 && residual <= 1e-9 && split <= 1e-9,
          "class error " + fmt("%.3g", class_err) + ", residual " + fmt("%.3g", residual) + ", A vs -A " + fmt("%.3g", split)};
}

Outcome c9_minkowski_sign() {
  Rng rng(109);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Mat a = random_gl(rng, 2 + k % 2);
    RecoveryOptions opt;
    opt.seed = 5000 + k;
    const Mat plus = recover_mink_map(precomposition_oracle(ConeTag::kMink, a), opt).matrix;
    const Mat minus = recover_mink_map(precomposition_oracle(ConeTag::kMink, -a), opt).matrix;
    worst = std::max({worst, (plus - a).norm(), (minus + a).norm()});
  }
  return {worst <= 1e-9, "max error " + fmt("%.3g", worst) + " over 50 maps, both signs"};
}

Outcome c10_compact_extension() {
  Rng rng(110);
  double worst = 0.0;
  const std::vector<double> ladder = dyadic_ladder(8);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 2;
    const Mat u = random_gl(rng, n);
    const Polyhedron a = random_symmetric_polytope(rng, n, n + 1);
    const SetMap phi = [u](const Polyhedron& c) { return linear_image(c, u); };
    worst = std::max(worst, hausdorff(extend_to_compact(phi, a, ladder).body, linear_image(a, u)));
  }
  return {worst <= 1e-6, "max Hausdorff distance " + fmt("%.3g", worst) + " over 100 bodies"};
}

Outcome c11_degree_p() {
  Rng rng(111);
  double worst = 0.0;
  for (double p : {1.0, 2.0, 3.0}) {
    for (int k = 0; k < 50; ++k) {
      const Mat a = random_gl(rng, 2 + k % 2);
      RecoveryOptions opt;
      opt.seed = 6000 + k;
      const RecoveredMap r = recover_homogeneous_map(linear_homogeneous_oracle(a, p, Homogeneity::kPositive), opt);
      worst = std::max({worst, (r.matrix - a).norm(), r.residual});
    }
  }
  return {worst <= 1e-8, "max error " + fmt("%.3g", worst) + " over 150 oracles"};
}

Outcome c12_lattice_iso() {
  Rng rng(112);
  std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
  for (int k = 0; k < 500; ++k) pairs.emplace_back(random_polytope(rng, 2, 4), random_polytope(rng, 2, 4));
  const int set_v = check_lattice_iso(linear_set_oracle(random_gl(rng, 2)).call, pairs).total();
  std::vector<std::pair<Subspace, Subspace>> spairs;
  for (int k = 0; k < 500; ++k) {
    spairs.emplace_back(Subspace::span(4, random_orthonormal(rng, 4, rng.integer(1, 3))),
                        Subspace::span(4, random_orthonormal(rng, 4, rng.integer(1, 3))));
  }
  const int sub_v = check_lattice_iso(linear_subspace_oracle(random_gl(rng, 4)).call, spairs).total();
  std::vector<std::pair<Polyhedron, Polyhedron>> zpairs;
  for (int k = 0; k < 50; ++k) {
    zpairs.emplace_back(random_polytope_around_origin(rng, 2, 4, 0.2), random_polytope_around_origin(rng, 2, 4, 0.2));
  }
  Vec t(2);
  t << 3.0, -1.0;
  const LatticeIsoReport tr =
      check_lattice_iso([t](const Polyhedron& c) { return translate(c, t); }, zpairs, SetLattice::kContainsOrigin);
  const bool refuted = tr.total() > 0 && !tr.witnesses.empty();
  return {set_v == 0 && sub_v == 0 && refuted,
          "linear: " + std::to_string(set_v) + " + " + std::to_string(sub_v) + " violations on 500 + 500 pairs; translation: " +
              std::to_string(tr.total()) + " violations, witness \"" + (tr.witnesses.empty() ? "" : tr.witnesses.front().substr(0, 60)) +
              "...\""};
}

Outcome c13_segment_mub() {
  Rng rng(113);
  int ok = 0, tested = 0;
  while (tested < 200) {
    const AffineFunctional u = random_affine(rng, 3), v = random_affine(rng, 3);
    AffineFunctional w;
    const double t = rng.uniform(-0.2, 1.2);
    const double drop = rng.uniform(0.0, 1.0);
    w = {t * u.phi + (1.0 - t) * v.phi, t * u.c + (1.0 - t) * v.c - drop};
    const CheckReport r = check_segment_mub(u, v, w);
    if (r.samples == 0) continue;  // w is not below max(u, v)
    ++tested;
    const double lambda = r.series.front();
    if (r.violations == 0 && lambda >= -1e-12 && lambda <= 1.0 + 1e-12) ++ok;
  }
  return {ok == tested, std::to_string(ok) + "/" + std::to_string(tested) + " triples decomposed with lambda in [0, 1]"};
}

Outcome c14_sup_commutation() {
  Rng rng(114);
  double worst = 0.0;
  int violations = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 4;
    std::vector<PLConvexFunction> family;
    for (int j = rng.integer(1, 5); j > 0; --j) {
      family.push_back(random_pl(rng, n, rng.integer(1, 4), j % 2 ? DomainKind::kHalfspaces : DomainKind::kNone));
    }
    const CanonicalTransform t = random_transform(rng, n, TransformMode::kPreserving);
    const CheckReport r = check_sup_commutation(transform_oracle(t), family, 7000 + k, 1000);
    worst = std::max(worst, r.max_error);
    violations += r.violations;
  }
  return {worst <= 1e-10, "max error " + fmt("%.3g", worst) + ", " + std::to_string(violations) + " violations over 100 families"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"biconjugation", c1_biconjugation},
      {"conjugate order reversal", c2_order_reversal},
      {"fast Legendre transform", c3_fast_legendre},
      {"D/S inversion", c4_ds_inversion},
      {"preserving identification", c5_identify_preserving},
      {"reversing identification", c6_identify_reversing},
      {"subspace lattice recovery", c7_subspaces},
      {"seminorm recovery", c8_seminorms},
      {"Minkowski sign disambiguation", c9_minkowski_sign},
      {"compact extension", c10_compact_extension},
      {"degree-p reduction", c11_degree_p},
      {"lattice isomorphism both directions", c12_lattice_iso},
      {"segment minimum upper bound", c13_segment_mub},
      {"sup commutation", c14_sup_commutation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (i == 0 && secs > 60.0) {
      o.pass = false;
      o.detail += " (exceeded 60 s)";
    }
    failed += !o.pass;
    std::printf("%s  %2zu  %-36s %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "convdual/verifier.hpp"

#include "convdual/fenchel.hpp"
#include "convdual/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

namespace convdual {

namespace {

constexpr int kMaxWitnesses = 5;

double rel_err(double a, double b) {
  if (a == kInf && b == kInf) return 0.0;
  if (a == kInf || b == kInf) return kInf;
  return std::abs(a - b) / (1.0 + std::abs(b));
}

std::string fmt_vec(const Vec& x) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i);
  os << ")";
  return os.str();
}

void witness(CheckReport& r, const std::string& what) {
  ++r.violations;
  if (static_cast<int>(r.witnesses.size()) < kMaxWitnesses) r.witnesses.push_back(what);
}

CheckReport from_lattice(const std::string& name, std::uint64_t seed, const LatticeIsoReport& l) {
  CheckReport r{name, seed, l.samples, l.total(), l.witnesses, 0.0, {}};
  r.max_error = l.total();
  return r;
}

// Points of dom f: samples from a box, rejected outside the domain.
std::vector<Vec> domain_points(Rng& rng, const PLConvexFunction& f, int count) {
  std::vector<Vec> pts;
  int tries = 0;
  while (static_cast<int>(pts.size()) < count && tries < 100 * count) {
    ++tries;
    Vec x = rng.uniform_vec(f.dim(), -2.0, 2.0);
    if (f.in_domain(x)) pts.push_back(std::move(x));
  }
  return pts;
}

// Fills a report by sampling a per-item error; items above tol are violations.
template <class Fn>
CheckReport error_check(const std::string& name, std::uint64_t seed, int count, double tol, Fn&& item_error) {
  CheckReport r{name, seed, 0, 0, {}, 0.0, {}};
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    ++r.samples;
    try {
      const double e = item_error(rng, k);
      r.max_error = std::max(r.max_error, e);
      if (!(e <= tol)) witness(r, "sample " + std::to_string(k) + ": error " + std::to_string(e));
    } catch (const std::exception& ex) {
      r.max_error = kInf;
      witness(r, "sample " + std::to_string(k) + ": " + ex.what());
    }
  }
  return r;
}

}  // namespace

int SuiteReport::violations() const {
  int v = 0;
  for (const CheckReport& c : checks) v += c.violations;
  return v;
}

CheckReport check_order_relation(const FunctionOracle& oracle, TransformMode mode, const std::vector<FunctionPair>& pairs,
                                 const std::optional<FunctionOracle>& inverse, std::uint64_t seed) {
  CheckReport r{"order_relation", seed, 0, 0, {}, 0.0, {}};
  const bool preserving = mode == TransformMode::kPreserving;
  auto ordered = [preserving](const PLConvexFunction& tf, const PLConvexFunction& tg) {
    return preserving ? leq_violation(tf, tg) : leq_violation(tg, tf);
  };
  auto one_side = [&](const FunctionOracle& o, const char* side, std::size_t i, const FunctionPair& p) {
    try {
      const auto bad = ordered(o.call(p.first), o.call(p.second));
      if (bad) {
        r.max_error = std::max(r.max_error, 1.0);
        witness(r, std::string(side) + " pair " + std::to_string(i) + ": order " + (preserving ? "lost" : "not reversed") +
                       " at x = " + fmt_vec(*bad));
      }
    } catch (const std::exception& e) {
      r.max_error = kInf;
      witness(r, std::string(side) + " pair " + std::to_string(i) + ": oracle failed: " + e.what());
    }
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ++r.samples;
    one_side(oracle, "forward", i, pairs[i]);
    if (inverse) one_side(*inverse, "converse", i, pairs[i]);
  }
  return r;
}

CheckReport check_sup_commutation(const FunctionOracle& oracle, const std::vector<PLConvexFunction>& family,
                                  std::uint64_t seed, int points) {
  if (family.empty()) throw InvalidArgument("check_sup_commutation: empty family");
  CheckReport r{"sup_commutation", seed, 0, 0, {}, 0.0, {}};
  const PLConvexFunction sup = sup_family(family);
  if (!is_proper(sup)) throw InvalidArgument("check_sup_commutation: sup of the family is not proper");
  const PLConvexFunction t_sup = oracle.call(sup);
  std::vector<PLConvexFunction> images;
  for (const PLConvexFunction& f : family) images.push_back(oracle.call(f));
  Rng rng(seed);
  for (const Vec& x : random_points(rng, oracle.n, points, 2.0)) {
    ++r.samples;
    double envelope = -kInf;
    for (const PLConvexFunction& g : images) envelope = std::max(envelope, g(x));
    const double a = t_sup(x);
    const double e = rel_err(a, envelope);
    r.max_error = std::max(r.max_error, e);
    if (e > 1e-10) {
      witness(r, "x = " + fmt_vec(x) + ": T(sup) = " + std::to_string(a) + ", sup T = " + std::to_string(envelope));
    }
  }
  return r;
}

CheckReport check_limsup_commutation(const FunctionOracle& oracle, const std::vector<PLConvexFunction>& sequence,
                                     const PLConvexFunction& limit, std::uint64_t seed, int points) {
  if (sequence.empty()) throw InvalidArgument("check_limsup_commutation: empty sequence");
  CheckReport r{"limsup_commutation", seed, 0, 0, {}, 0.0, {}};
  Rng rng(seed);
  const std::vector<Vec> xs = random_points(rng, oracle.n, points, 2.0);
  const std::size_t m = sequence.size();
  const PLConvexFunction t_limit = oracle.call(limit);

  // Tail envelopes by a backward running max over the sequence.
  auto tail_errors = [&](const auto& value_of, const auto& target) {
    std::vector<double> env(xs.size(), -kInf), errs(m, 0.0);
    for (std::size_t k = m; k-- > 0;) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        env[i] = std::max(env[i], value_of(k, xs[i]));
        errs[k] = std::max(errs[k], rel_err(env[i], target(xs[i])));
      }
    }
    return errs;
  };
  const auto input = tail_errors([&](std::size_t k, const Vec& x) { return sequence[k](x); },
                                 [&](const Vec& x) { return limit(x); });
  if (input.front() > 1e-12 && !(input.back() <= 0.5 * input.front())) {
    throw InvalidArgument("check_limsup_commutation: sequence does not approach its limit");
  }
  std::vector<PLConvexFunction> images;
  for (const PLConvexFunction& f : sequence) images.push_back(oracle.call(f));
  r.series = tail_errors([&](std::size_t k, const Vec& x) { return images[k](x); },
                         [&](const Vec& x) { return t_limit(x); });
  r.samples = static_cast<int>(m);
  r.max_error = r.series.back();
  for (std::size_t k = 1; k < m; ++k) {
    if (r.series[k] > r.series[k - 1] + 1e-12) {
      witness(r, "tail error increases at k = " + std::to_string(k) + ": " + std::to_string(r.series[k - 1]) + " -> " +
                     std::to_string(r.series[k]));
    }
  }
  return r;
}

CheckReport check_segment_mub(const AffineFunctional& u, const AffineFunctional& v, const AffineFunctional& w) {
  const int n = u.dim();
  if (n < 3) throw InvalidArgument("check_segment_mub: the segment property is only asserted for n >= 3");
  if (v.dim() != n || w.dim() != n) throw InvalidArgument("check_segment_mub: dimension mismatch");
  const Vec d = u.phi - v.phi;
  if (d.norm() <= kRankTol) throw InvalidArgument("check_segment_mub: gradients must differ");
  CheckReport r{"segment_mub", 0, 0, 0, {}, 0.0, {}};
  const PLConvexFunction h = max2(PLConvexFunction::affine(u.phi, u.c), PLConvexFunction::affine(v.phi, v.c));
  if (!is_leq(PLConvexFunction::affine(w.phi, w.c), h)) return r;
  r.samples = 1;
  const double lambda = (w.phi - v.phi).dot(d) / d.squaredNorm();
  r.series.push_back(lambda);
  const double scale = 1.0 + u.phi.norm() + v.phi.norm() + std::abs(u.c) + std::abs(v.c);
  const double off_line = (w.phi - v.phi - lambda * d).norm();
  const double excess = w.c - (lambda * u.c + (1.0 - lambda) * v.c);
  r.max_error = std::max({off_line, std::max(0.0, excess), std::max(0.0, -lambda), std::max(0.0, lambda - 1.0)});
  const double tol = 1e-8 * scale;
  if (off_line > tol) witness(r, "gradient of w is off the segment by " + std::to_string(off_line));
  else if (lambda < -tol || lambda > 1.0 + tol) witness(r, "lambda = " + std::to_string(lambda) + " outside [0, 1]");
  else if (excess > tol) witness(r, "w exceeds the convex combination by " + std::to_string(excess));
  return r;
}

CheckReport check_segment_mub(const AffineFunctional& u, const AffineFunctional& v, std::uint64_t seed, int samples) {
  const int n = u.dim();
  CheckReport r{"segment_mub", seed, 0, 0, {}, 0.0, {}};
  Rng rng(seed);
  int tries = 0;
  while (r.samples < samples && tries < 20 * samples) {
    ++tries;
    AffineFunctional w;
    if (tries % 2 == 0) {
      // Below the segment by construction.
      const double t = rng.uniform();
      w = {t * u.phi + (1.0 - t) * v.phi, t * u.c + (1.0 - t) * v.c - rng.uniform(0.0, 1.0)};
    } else {
      // Random candidates; most fail the filter and are skipped.
      const double t = rng.uniform(-0.5, 1.5);
      const Vec noise = rng.coin() ? Vec(0.1 * rng.normal_vec(n)) : Vec(Vec::Zero(n));
      const double drop = rng.uniform(0.0, 1.0);
      w = {t * u.phi + (1.0 - t) * v.phi + noise, t * u.c + (1.0 - t) * v.c - drop};
    }
    const CheckReport one = check_segment_mub(u, v, w);
    if (one.samples == 0) continue;
    ++r.samples;
    r.series.push_back(one.series.front());
    r.max_error = std::max(r.max_error, one.max_error);
    for (const std::string& s : one.witnesses) witness(r, "sample " + std::to_string(r.samples - 1) + ": " + s);
  }
  return r;
}

CheckReport check_generating_class(ConeTag tag, const PLConvexFunction& f, std::uint64_t seed) {
  const int n = f.dim();
  CheckReport r{std::string("generating_class.") + to_string(tag), seed, 0, 0, {}, 0.0, {}};
  // Generators as PL functions; only those below f are kept.
  std::vector<PLConvexFunction> gens;
  const PLConvexFunction canon = canonicalize(f);
  for (const AffineFunctional& u : canon.pieces()) {
    const Vec zero = Vec::Zero(n);
    switch (tag) {
      case ConeTag::kConv:
        gens.push_back(PLConvexFunction::affine(u.phi, u.c));
        break;
      case ConeTag::kSubl:
        gens.push_back(PLConvexFunction::affine(u.phi, 0.0));
        break;
      case ConeTag::kMink:
        gens.push_back(PLConvexFunction(std::vector<AffineFunctional>{{u.phi, 0.0}, {zero, 0.0}}));
        break;
      case ConeTag::kSemn:
        gens.push_back(PLConvexFunction(std::vector<AffineFunctional>{{u.phi, 0.0}, {Vec(-u.phi), 0.0}}));
        break;
    }
  }
  std::vector<PLConvexFunction> minorants;
  for (const PLConvexFunction& g : gens) {
    if (is_leq(g, f)) minorants.push_back(g);
  }
  Rng rng(seed);
  const std::vector<Vec> xs = domain_points(rng, f, 500);
  if (minorants.empty()) {
    witness(r, "no generator of the class lies below f");
    r.max_error = kInf;
    return r;
  }
  const PLConvexFunction rebuilt = sup_family(minorants);
  for (const Vec& x : xs) {
    ++r.samples;
    const double e = rel_err(rebuilt(x), f(x));
    r.max_error = std::max(r.max_error, e);
    if (e > 1e-9) witness(r, "x = " + fmt_vec(x) + ": rebuilt " + std::to_string(rebuilt(x)) + ", f = " + std::to_string(f(x)));
  }
  return r;
}

namespace {

using SuiteItem = std::pair<std::string, std::function<CheckReport(std::uint64_t)>>;

std::vector<FunctionPair> certified_pairs(Rng& rng, int count, int max_dim) {
  std::vector<FunctionPair> pairs;
  for (int k = 0; k < count; ++k) pairs.push_back(certified_pair(rng, 1 + k % max_dim, rng.integer(1, 4)));
  return pairs;
}

FunctionOracle fenchel_oracle(int n) {
  return {ConeTag::kConv, n, [](const PLConvexFunction& f) { return conjugate_pl(f); }};
}

CheckReport named(std::string name, CheckReport r) {
  r.check = std::move(name);
  return r;
}

// Order check over pairs of mixed dimension: one oracle per dimension.
CheckReport order_over_dims(const std::string& name, std::uint64_t seed, int count, int max_dim,
                            const std::function<FunctionOracle(int)>& oracle_for,
                            const std::function<std::optional<FunctionOracle>(int)>& inverse_for, TransformMode mode) {
  Rng rng(seed);
  const std::vector<FunctionPair> pairs = certified_pairs(rng, count, max_dim);
  CheckReport total{name, seed, 0, 0, {}, 0.0, {}};
  for (int n = 1; n <= max_dim; ++n) {
    std::vector<FunctionPair> sub;
    for (const FunctionPair& p : pairs) {
      if (p.first.dim() == n) sub.push_back(p);
    }
    const CheckReport r = check_order_relation(oracle_for(n), mode, sub, inverse_for(n), seed);
    total.samples += r.samples;
    total.max_error = std::max(total.max_error, r.max_error);
    for (const std::string& w : r.witnesses) witness(total, "n = " + std::to_string(n) + ", " + w);
    total.violations += r.violations - static_cast<int>(r.witnesses.size());
  }
  return total;
}

std::vector<SuiteItem> suite_items(const std::string& name) {
  std::vector<SuiteItem> items;
  const bool all = name == "all";
  if (all || name == "fenchel") {
    items.emplace_back("fenchel.order_reversal", [](std::uint64_t s) {
      return order_over_dims("fenchel.order_reversal", s, 100, 2, fenchel_oracle,
                             [](int n) { return std::optional<FunctionOracle>(fenchel_oracle(n)); }, TransformMode::kReversing);
    });
    items.emplace_back("fenchel.biconjugation", [](std::uint64_t s) {
      return error_check("fenchel.biconjugation", s, 50, 1e-8, [](Rng& rng, int k) {
        const int n = 1 + k % 3;
        const PLConvexFunction f = random_pl(rng, n, rng.integer(1, 5), k % 2 ? DomainKind::kPolytope : DomainKind::kNone);
        const PLConvexFunction ff = biconjugate(f);
        double e = 0.0;
        for (const Vec& x : random_points(rng, n, 100, 2.0)) e = std::max(e, rel_err(ff(x), f(x)));
        return e;
      });
    });
    items.emplace_back("fenchel.grid_fast_vs_brute", [](std::uint64_t s) {
      return error_check("fenchel.grid_fast_vs_brute", s, 10, 0.0, [](Rng& rng, int) {
        const int count = rng.integer(16, 256);
        std::vector<double> vals(count);
        for (int i = 0; i < count; ++i) {
          const double x = -1.0 + 2.0 * i / (count - 1);
          vals[i] = std::abs(x) + 0.3 * x * x + 0.01 * rng.normal();
        }
        const GridFunction1D g(-1.0, 2.0 / (count - 1), vals);
        const GridSpec out = default_conjugate_grid(g);
        const GridFunction1D fast = conjugate_grid(g, out), slow = conjugate_grid_brute(g, out);
        int mismatches = 0;
        for (std::size_t i = 0; i < out.count; ++i) mismatches += fast.values()[i] != slow.values()[i];
        return static_cast<double>(mismatches);
      });
    });
  }
  if (all || name == "cones") {
    items.emplace_back("cones.ds_roundtrip", [](std::uint64_t s) {
      return error_check("cones.ds_roundtrip", s, 50, 1e-9, [](Rng& rng, int k) {
        const int n = 1 + k % 3;
        const Polyhedron c = random_polytope(rng, n, n + 3);
        return vertex_hausdorff(body_of(support_function(c).to_pl()), c);
      });
    });
    items.emplace_back("cones.gauge_is_polar_support", [](std::uint64_t s) {
      return error_check("cones.gauge_is_polar_support", s, 20, 1e-9, [](Rng& rng, int k) {
        const int n = 2 + k % 2;
        const Polyhedron d = random_polytope_around_origin(rng, n, n + 3, 0.2);
        const SublinearFunction sp(polar(d));
        double e = 0.0;
        for (const Vec& x : random_points(rng, n, 50, 2.0)) e = std::max(e, rel_err(gauge(d, x), sp(x)));
        return e;
      });
    });
  }
  if (all || name == "lattice") {
    items.emplace_back("lattice.linear_sets", [](std::uint64_t s) {
      Rng rng(s);
      const Mat a = random_gl(rng, 2);
      std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
      for (int k = 0; k < 50; ++k) pairs.emplace_back(random_polytope(rng, 2, 4), random_polytope(rng, 2, 4));
      return from_lattice("lattice.linear_sets", s, check_lattice_iso(linear_set_oracle(a).call, pairs));
    });
    items.emplace_back("lattice.linear_subspaces", [](std::uint64_t s) {
      Rng rng(s);
      const Mat a = random_gl(rng, 4);
      std::vector<std::pair<Subspace, Subspace>> pairs;
      for (int k = 0; k < 100; ++k) {
        pairs.emplace_back(Subspace::span(4, random_orthonormal(rng, 4, rng.integer(1, 3))),
                           Subspace::span(4, random_orthonormal(rng, 4, rng.integer(1, 3))));
      }
      return from_lattice("lattice.linear_subspaces", s, check_lattice_iso(linear_subspace_oracle(a).call, pairs));
    });
    // D o T o S for a canonical sublinear oracle is a lattice isomorphism.
    items.emplace_back("lattice.induced_by_sublinear", [](std::uint64_t s) {
      Rng rng(s);
      const Mat a = random_gl(rng, 2);
      const SetOracle f = induced_set_oracle(precomposition_oracle(ConeTag::kSubl, a, rng.normal_vec(2)));
      std::vector<std::pair<Polyhedron, Polyhedron>> pairs;
      for (int k = 0; k < 30; ++k) pairs.emplace_back(random_polytope(rng, 2, 4), random_polytope(rng, 2, 4));
      return from_lattice("lattice.induced_by_sublinear", s, check_lattice_iso(f.call, pairs));
    });
  }
  if (all || name == "transforms") {
    items.emplace_back("transforms.order_preserving", [](std::uint64_t s) {
      Rng rng(s);
      std::vector<CanonicalTransform> ts;
      for (int n = 1; n <= 3; ++n) ts.push_back(random_transform(rng, n, TransformMode::kPreserving));
      return order_over_dims(
          "transforms.order_preserving", s, 100, 3, [ts](int n) { return transform_oracle(ts[n - 1]); },
          [ts](int n) { return std::optional<FunctionOracle>(transform_oracle(invert(ts[n - 1]))); },
          TransformMode::kPreserving);
    });
    items.emplace_back("transforms.sup_commutation", [](std::uint64_t s) {
      CheckReport total{"transforms.sup_commutation", s, 0, 0, {}, 0.0, {}};
      Rng rng(s);
      for (int k = 0; k < 10; ++k) {
        const int n = 1 + k % 3;
        std::vector<PLConvexFunction> family;
        for (int j = rng.integer(1, 4); j > 0; --j) family.push_back(random_pl(rng, n, rng.integer(1, 4)));
        const CheckReport r = check_sup_commutation(transform_oracle(random_transform(rng, n, TransformMode::kPreserving)),
                                                    family, s + k, 100);
        total.samples += r.samples;
        total.max_error = std::max(total.max_error, r.max_error);
        for (const std::string& w : r.witnesses) witness(total, w);
      }
      return total;
    });
    items.emplace_back("transforms.limsup_commutation", [](std::uint64_t s) {
      Rng rng(s);
      const PLConvexFunction f = random_pl(rng, 2, 4);
      std::vector<PLConvexFunction> seq;
      for (int k = 1; k <= 20; ++k) seq.push_back(add_affine(f, Vec::Zero(2), 1.0 / k));
      const FunctionOracle t = transform_oracle(random_transform(rng, 2, TransformMode::kPreserving));
      return named("transforms.limsup_commutation", check_limsup_commutation(t, seq, f, s));
    });
  }
  if (all || name == "reconstruct") {
    items.emplace_back("reconstruct.identify_preserving", [](std::uint64_t s) {
      return error_check("reconstruct.identify_preserving", s, 5, 1e-8, [](Rng& rng, int k) {
        const CanonicalTransform t = random_transform(rng, 1 + k % 4, TransformMode::kPreserving);
        RecoveryOptions opt;
        opt.seed = rng.integer(1, 1 << 30);
        opt.audit_pairs = 10;
        return parameter_distance(identify_preserving(transform_oracle(t), opt).transform, t);
      });
    });
    items.emplace_back("reconstruct.identify_reversing", [](std::uint64_t s) {
      return error_check("reconstruct.identify_reversing", s, 3, 1e-6, [](Rng& rng, int k) {
        const CanonicalTransform t = random_transform(rng, 1 + k % 2, TransformMode::kReversing);
        RecoveryOptions opt;
        opt.seed = rng.integer(1, 1 << 30);
        opt.audit_pairs = 10;
        opt.validation_inputs = 10;
        return identify_reversing(transform_oracle(t), opt).residual;
      });
    });
    items.emplace_back("reconstruct.subspaces", [](std::uint64_t s) {
      return error_check("reconstruct.subspaces", s, 5, 1e-8, [](Rng& rng, int k) {
        const Mat a = random_gl(rng, 2 + k % 4);
        const Mat got = recover_linear_subspaces(linear_subspace_oracle(a)).matrix;
        const Mat want = normalize_up_to_scalar(a);
        return std::min((got - want).norm(), (got + want).norm());
      });
    });
  }
  if (all || name == "generating") {
    items.emplace_back("generating.classes", [](std::uint64_t s) {
      CheckReport total{"generating.classes", s, 0, 0, {}, 0.0, {}};
      Rng rng(s);
      auto fold = [&](const CheckReport& r) {
        total.samples += r.samples;
        total.max_error = std::max(total.max_error, r.max_error);
        for (const std::string& w : r.witnesses) witness(total, r.check + ": " + w);
      };
      for (int k = 0; k < 5; ++k) {
        const int n = 1 + k % 3;
        fold(check_generating_class(ConeTag::kConv, random_pl(rng, n, 4, DomainKind::kPolytope), s + k));
        fold(check_generating_class(ConeTag::kSubl, SublinearFunction(random_polytope(rng, n, n + 2)).to_pl(), s + k));
        fold(check_generating_class(ConeTag::kMink,
                                    MinkowskiGauge(random_polytope_around_origin(rng, n, n + 2, 0.2)).to_pl(), s + k));
        fold(check_generating_class(ConeTag::kSemn, Seminorm(random_symmetric_polytope(rng, n, n + 1)).to_pl(), s + k));
      }
      return total;
    });
  }
  if (all || name == "mub") {
    items.emplace_back("mub.segment", [](std::uint64_t s) {
      Rng rng(s);
      const AffineFunctional u = random_affine(rng, 3), v = random_affine(rng, 3);
      return named("mub.segment", check_segment_mub(u, v, s, 200));
    });
  }
  if (items.empty()) throw InvalidArgument("unknown suite '" + name + "'");
  return items;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "cones", "fenchel", "generating", "lattice", "mub", "reconstruct", "transforms"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  const std::vector<SuiteItem> items = suite_items(name);
  SuiteReport out{name, seed, std::vector<CheckReport>(items.size())};
  const long m = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) {
    try {
      out.checks[i] = items[i].second(seed);
    } catch (const std::exception& e) {
      CheckReport r{items[i].first, seed, 0, 0, {}, kInf, {}};
      witness(r, std::string("check failed: ") + e.what());
      out.checks[i] = r;
    }
  }
  std::sort(out.checks.begin(), out.checks.end(), [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return out;
}

}  // namespace convdual

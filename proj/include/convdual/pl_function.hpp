#pragma once

// Extended-real piecewise-linear convex functions on R^n:
//
//   f(x) = max_i ( <phi_i, x> + c_i )   for x in dom f,   +inf otherwise,
//
// where dom f is a closed polyhedron (absent means all of R^n). Values are
// immutable; every operation returns a new function.

#include "convdual/polyhedron.hpp"

#include <optional>
#include <span>

namespace convdual {

struct AffineFunctional {
  Vec phi;
  double c = 0.0;

  int dim() const { return static_cast<int>(phi.size()); }
  double operator()(const Vec& x) const { return phi.dot(x) + c; }
};

class PLConvexFunction {
 public:
  // `domain` is stored in H-representation; an empty halfspace list means R^n.
  explicit PLConvexFunction(std::vector<AffineFunctional> pieces,
                            std::optional<Polyhedron> domain = std::nullopt);

  static PLConvexFunction affine(const Vec& phi, double c);
  static PLConvexFunction constant(int n, double c);
  static PLConvexFunction zero(int n) { return constant(n, 0.0); }
  // Indicator of a polyhedron: 0 on the set, +inf outside.
  static PLConvexFunction indicator(const Polyhedron& set);

  int dim() const { return dim_; }
  const std::vector<AffineFunctional>& pieces() const { return pieces_; }
  const std::optional<Polyhedron>& domain() const { return domain_; }
  bool has_domain() const { return domain_.has_value(); }

  bool in_domain(const Vec& x) const;
  double operator()(const Vec& x) const;

 private:
  int dim_ = 0;
  std::vector<AffineFunctional> pieces_;
  std::optional<Polyhedron> domain_;
};

inline double eval(const PLConvexFunction& f, const Vec& x) { return f(x); }

// Batch evaluation. The parallel kernel splits points across OpenMP threads;
// the serial version is the reference it is tested against.
std::vector<double> eval_batch(const PLConvexFunction& f, std::span<const Vec> xs);
std::vector<double> eval_batch_serial(const PLConvexFunction& f, std::span<const Vec> xs);

// Pointwise maximum; pieces are united and domains intersected.
PLConvexFunction max2(const PLConvexFunction& f, const PLConvexFunction& g);
PLConvexFunction sup_family(std::span<const PLConvexFunction> fs);
PLConvexFunction add(const PLConvexFunction& f, const PLConvexFunction& g);
// t * f for t >= 0; scale(f, 0) is the zero function on dom f.
PLConvexFunction scale(const PLConvexFunction& f, double t);

struct Minimum {
  double value = kInf;          // -inf when unbounded below, +inf when dom f is empty
  std::optional<Vec> argmin;
};
Minimum minimize_pl(const PLConvexFunction& f);

bool is_proper(const PLConvexFunction& f);

// f <= g everywhere. Decided per affine piece u of f by minimizing g - u over
// dom g, after checking dom g is inside dom f.
bool is_leq(const PLConvexFunction& f, const PLConvexFunction& g);
// A point where f(x) > g(x), or nullopt when f <= g.
std::optional<Vec> leq_violation(const PLConvexFunction& f, const PLConvexFunction& g);

// Removes duplicate and redundant pieces (a piece is redundant when the max
// of the remaining pieces dominates it on the domain) and reduces the domain.
PLConvexFunction canonicalize(const PLConvexFunction& f);

// The sublinear function p on R^{n+1} with p(x, 1) = f(x).
PLConvexFunction homogenize(const PLConvexFunction& f);

// |f(x0)| + sup |f(x) - f(y)| / |x - y|; requires dom f = R^n.
double lipschitz_bound(const PLConvexFunction& f, const Vec& x0);

// The non-redundant affine pieces; each is a minorant of f and their
// supremum equals f on its domain.
std::vector<AffineFunctional> minorants(const PLConvexFunction& f);

// Affine precomposition x -> f(m x + b) (m square, invertible).
PLConvexFunction precompose(const PLConvexFunction& f, const Mat& m, const Vec& b);
// f + <phi, .> + c
PLConvexFunction add_affine(const PLConvexFunction& f, const Vec& phi, double c);

}  // namespace convdual

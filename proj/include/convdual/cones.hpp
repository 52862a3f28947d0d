#pragma once

// Sublinear functions, gauges and seminorms, each carried by its body.
//
//   S : C -> sigma_C        (support_function)
//   D : p -> C(p)           (body_of), the inverse of S on closed convex sets
//
// Bodies may be unbounded; recession rays make the support function +inf
// outside the polar cone.

#include "convdual/pl_function.hpp"

#include <variant>

namespace convdual {

class SublinearFunction {
 public:
  explicit SublinearFunction(const Polyhedron& body);

  int dim() const { return body_.dim(); }
  // Reduced V-representation.
  const Polyhedron& body() const { return body_; }
  double operator()(const Vec& x) const;
  PLConvexFunction to_pl() const;

 private:
  Polyhedron body_;
};

// x -> inf{lambda > 0 : x in lambda D}, for a closed convex D containing 0.
class MinkowskiGauge {
 public:
  explicit MinkowskiGauge(const Polyhedron& set);

  int dim() const { return set_.dim(); }
  const Polyhedron& set() const { return set_; }
  double operator()(const Vec& x) const;
  // The same function as a PL convex function (the support function of the
  // polar set).
  PLConvexFunction to_pl() const;

 private:
  Polyhedron set_;
};

// Support function of a symmetric closed convex set containing the origin.
class Seminorm {
 public:
  explicit Seminorm(const Polyhedron& dual_body);

  int dim() const { return support_.dim(); }
  const Polyhedron& dual_body() const { return support_.body(); }
  double operator()(const Vec& x) const { return support_(x); }
  PLConvexFunction to_pl() const { return support_.to_pl(); }
  bool finite_valued() const;

 private:
  SublinearFunction support_;
};

enum class Homogeneity { kPositive, kAbsolute };

// x -> k(x)^p with k a gauge (positively homogeneous of degree p) or a
// seminorm (absolutely homogeneous of degree p).
class HomogeneousFunction {
 public:
  using Base = std::variant<MinkowskiGauge, Seminorm>;

  HomogeneousFunction(Base base, double degree);

  const Base& base() const { return base_; }
  double degree() const { return degree_; }
  Homogeneity mode() const;
  int dim() const;
  double operator()(const Vec& x) const;

 private:
  Base base_;
  double degree_;
};

SublinearFunction support_function(const Polyhedron& c);

// The body whose support function is p. Homogeneity of a PL input is checked
// by sampling p(t x) = t p(x) for t in {2, 1/2} at 100 points.
Polyhedron body_of(const SublinearFunction& p);
Polyhedron body_of(const PLConvexFunction& p);
// Sampled check of positive homogeneity, tolerance 1e-9 relative.
bool looks_homogeneous(const PLConvexFunction& p, int samples = 100, std::uint64_t seed = 0x5eed);

double gauge(const Polyhedron& d, const Vec& x);
Polyhedron polar(const Polyhedron& d);

HomogeneousFunction hom_power(const MinkowskiGauge& k, double p);
HomogeneousFunction hom_power(const Seminorm& k, double p);
HomogeneousFunction::Base hom_root(const HomogeneousFunction& f);

}  // namespace convdual

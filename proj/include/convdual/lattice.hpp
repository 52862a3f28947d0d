#pragma once

// Lattices of closed convex sets (meet = intersection, join = closed convex
// hull of the union) and of linear subspaces (meet = intersection, join =
// span), plus the compact-extension construction for set maps.

#include "convdual/polyhedron.hpp"

#include <functional>

namespace convdual {

Polyhedron meet_convex(const Polyhedron& a, const Polyhedron& b);
Polyhedron join_convex(const Polyhedron& a, const Polyhedron& b);

// Linear subspace of R^n stored by an orthonormal basis (n x k).
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int n, const Mat& columns);
  static Subspace zero(int n) { return Subspace(Mat(n, 0)); }
  static Subspace whole(int n) { return Subspace(Mat::Identity(n, n)); }
  static Subspace line(const Vec& v);

  int ambient() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }
  Mat projector() const { return basis_ * basis_.transpose(); }
  Subspace complement() const;

 private:
  explicit Subspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;
};

inline constexpr double kAngleTol = 1e-8;

// sin of the largest principal angle from `a` into `b` (0 when a is inside b).
double containment_gap(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& a, const Subspace& b, double tol = kAngleTol);
bool same_subspace(const Subspace& a, const Subspace& b, double tol = kAngleTol);
bool contains(const Subspace& s, const Vec& v, double tol = kAngleTol);
Subspace meet_sub(const Subspace& a, const Subspace& b);
Subspace join_sub(const Subspace& a, const Subspace& b);
Subspace image(const Mat& m, const Subspace& s);

// [-x, x] (symmetric) or [0, x] (anchored).
struct Segment {
  Vec endpoint;
  bool symmetric = true;

  Polyhedron to_polyhedron() const;
};

// Sub-lattice a set map is checked against; images must stay inside it.
enum class SetLattice { kAll, kContainsOrigin, kSymmetric };

using SetMap = std::function<Polyhedron(const Polyhedron&)>;
using SubspaceMap = std::function<Subspace(const Subspace&)>;

struct LatticeIsoReport {
  int samples = 0;
  int meet_violations = 0;
  int join_violations = 0;
  int order_violations = 0;       // A <= B and phi(A) <= phi(B) disagree
  int membership_violations = 0;  // phi(A) left the lattice
  std::vector<std::string> witnesses;

  int total() const { return meet_violations + join_violations + order_violations + membership_violations; }
};

// Counts violations of phi(A ^ B) = phi(A) ^ phi(B), phi(A v B) = phi(A) v
// phi(B) and A <= B <=> phi(A) <= phi(B) over the sampled pairs. An exception
// thrown by the map is rethrown with the offending input described.
LatticeIsoReport check_lattice_iso(const SetMap& phi, const std::vector<std::pair<Polyhedron, Polyhedron>>& pairs,
                                   SetLattice lattice = SetLattice::kAll, int max_witnesses = 5);
LatticeIsoReport check_lattice_iso(const SubspaceMap& phi, const std::vector<std::pair<Subspace, Subspace>>& pairs,
                                   int max_witnesses = 5);

// {2^K, ..., 2^-K}, descending.
std::vector<double> dyadic_ladder(int k = 8);

struct CompactExtension {
  Polyhedron body;
  // Hausdorff bound for the ladder truncation: q_min times the radius of the
  // image of the ball (exact for linear maps).
  double truncation_bound = 0.0;
};

// Intersection over q in the ladder of phi(A v q * ball). `ball` defaults to
// the unit cross-polytope. The images are computed in parallel when
// `parallel` is set; the map must then be safe to call concurrently.
CompactExtension extend_to_compact(const SetMap& phi, const Polyhedron& a, const std::vector<double>& ladder,
                                   const std::optional<Polyhedron>& ball = std::nullopt, bool parallel = true);

}  // namespace convdual

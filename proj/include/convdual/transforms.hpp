#pragma once

// Canonical fully order preserving / reversing transforms of conv(R^n):
//
//   preserving:  T(f)(y) = alpha f(U y + x0) + <phi0, y> + r0
//   reversing:   T(f)(y) = alpha f*(U y + x0*) + <phi0, y> + r0
//
// R^n is identified with its dual through the standard inner product, so U is
// an ordinary invertible matrix in both modes.

#include "convdual/pl_function.hpp"

#include <functional>

namespace convdual {

enum class TransformMode { kPreserving, kReversing };

struct CanonicalTransform {
  double alpha = 1.0;
  Mat U;
  Vec shift;
  Vec phi0;
  double r0 = 0.0;
  TransformMode mode = TransformMode::kPreserving;

  int dim() const { return static_cast<int>(U.rows()); }

  static CanonicalTransform identity(int n, TransformMode mode = TransformMode::kPreserving);
  // Throws InvalidArgument unless alpha > 0, U square invertible and the
  // vectors match its size.
  void validate() const;
};

const char* to_string(TransformMode mode);
TransformMode parse_mode(const std::string& s);

// Applies the preserving formula to f, ignoring the stored mode.
PLConvexFunction apply_affine_part(const CanonicalTransform& t, const PLConvexFunction& f);
PLConvexFunction apply(const CanonicalTransform& t, const PLConvexFunction& f);
// Pointwise evaluation of the preserving formula, given a way to evaluate f
// (or f* in reversing mode).
double apply_pointwise(const CanonicalTransform& t, const std::function<double(const Vec&)>& f, const Vec& y);

CanonicalTransform invert(const CanonicalTransform& t);
// compose(s, t) acts as f -> apply(s, apply(t, f)).
CanonicalTransform compose(const CanonicalTransform& s, const CanonicalTransform& t);

// The preserving transform P' with F o P = P' o F, F the Fenchel transform.
CanonicalTransform conjugate_through(const CanonicalTransform& p);

// Max over parameters of |a - b| / (1 + |b|), entrywise.
double parameter_distance(const CanonicalTransform& a, const CanonicalTransform& b);

}  // namespace convdual

#pragma once

// Sampled property checks for order transforms. A report with zero
// violations refutes nothing; it does not prove the property.

#include "convdual/reconstruct.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace convdual {

struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  int samples = 0;
  int violations = 0;
  std::vector<std::string> witnesses;
  double max_error = 0.0;
  // Per-step data: tail errors for the limsup check, lambdas for the segment check.
  std::vector<double> series;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;  // sorted by check name

  int violations() const;
};

using FunctionPair = std::pair<PLConvexFunction, PLConvexFunction>;

// Each pair must satisfy first <= second. Checks Tf <= Tg (preserving) or
// Tg <= Tf (reversing); with an inverse oracle also the converse direction
// through the preimages. An exception thrown by an oracle counts as a
// violation.
CheckReport check_order_relation(const FunctionOracle& oracle, TransformMode mode, const std::vector<FunctionPair>& pairs,
                                 const std::optional<FunctionOracle>& inverse = std::nullopt, std::uint64_t seed = 0);

// T(sup f_k) against sup T(f_k) on 1000 sampled points.
CheckReport check_sup_commutation(const FunctionOracle& oracle, const std::vector<PLConvexFunction>& family,
                                  std::uint64_t seed = 0, int points = 1000);

// Tail errors e_k = max over samples of |sup_{j >= k} T(f_j) - T(f)|, where
// f is the limit of the sequence. Violations count increases of e_k. Throws
// InvalidArgument when the input tails do not approach the limit.
CheckReport check_limsup_commutation(const FunctionOracle& oracle, const std::vector<PLConvexFunction>& sequence,
                                     const PLConvexFunction& limit, std::uint64_t seed = 0, int points = 200);

// For affine w <= max(u, v), the gradient of w lies on [grad u, grad v] and
// w <= lambda u + (1 - lambda) v. Requires n >= 3 and distinct gradients.
CheckReport check_segment_mub(const AffineFunctional& u, const AffineFunctional& v, std::uint64_t seed = 0,
                              int samples = 200);
// The same check against one given w; the series holds its lambda when w passes the filter.
CheckReport check_segment_mub(const AffineFunctional& u, const AffineFunctional& v, const AffineFunctional& w);

// Rebuilds f as the sup of its minorants from the class generating the
// tagged cone (affine, linear, phi v 0, |phi|), at 500 points of dom f.
CheckReport check_generating_class(ConeTag tag, const PLConvexFunction& f, std::uint64_t seed = 0);

// Suites: fenchel, cones, lattice, transforms, reconstruct, generating, mub, all.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
const std::vector<std::string>& suite_names();

}  // namespace convdual

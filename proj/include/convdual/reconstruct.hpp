#pragma once

// Recovery of linear and affine data from black-box order transforms.
//
// Every recovery probes a fixed design (basis directions e_i and sums
// e_1 + e_j), fits the map, then validates it on seeded random inputs and
// reports the residual. Audits of the order property are sampled: passing
// one does not prove the oracle is fully order preserving.

#include "convdual/cones.hpp"
#include "convdual/lattice.hpp"
#include "convdual/transforms.hpp"

#include <cstdint>

namespace convdual {

enum class ConeTag { kConv, kSubl, kMink, kSemn };

const char* to_string(ConeTag tag);

struct FunctionOracle {
  ConeTag tag = ConeTag::kConv;
  int n = 0;
  std::function<PLConvexFunction(const PLConvexFunction&)> call;
};

struct SetOracle {
  int n = 0;
  SetMap call;
};

struct SubspaceOracle {
  int n = 0;
  SubspaceMap call;
};

struct HomogeneousOracle {
  int n = 0;
  double degree = 1.0;
  Homogeneity mode = Homogeneity::kPositive;
  std::function<HomogeneousFunction(const HomogeneousFunction&)> call;
};

enum class ScalarClass { kUpToPositiveScalar, kUpToSign, kExact };

const char* to_string(ScalarClass c);

struct RecoveredMap {
  Mat matrix;
  ScalarClass scalar_class = ScalarClass::kExact;
  double residual = 0.0;  // max validation error
};

struct RecoveryOptions {
  std::uint64_t seed = 1;
  int audit_pairs = 100;
  int validation_inputs = 50;
  int validation_points = 100;
  double tolerance = 1e-8;
};

struct Identification {
  CanonicalTransform transform;
  double residual = 0.0;
  int audited_pairs = 0;
};

struct SublinearRecovery {
  RecoveredMap map;
  Vec phi0;
};

// Unit Frobenius norm, first nonzero entry (column-major) positive.
Mat normalize_up_to_scalar(const Mat& m);
// Sign flipped so the first nonzero entry (column-major) is positive.
Mat normalize_sign(const Mat& m);

RecoveredMap recover_linear_subspaces(const SubspaceOracle& oracle, const RecoveryOptions& opt = {});
RecoveredMap recover_from_segments(const SetOracle& oracle, const RecoveryOptions& opt = {});
RecoveredMap recover_seminorm_map(const FunctionOracle& oracle, const RecoveryOptions& opt = {});
RecoveredMap recover_mink_map(const FunctionOracle& oracle, const RecoveryOptions& opt = {});
RecoveredMap recover_homogeneous_map(const HomogeneousOracle& oracle, const RecoveryOptions& opt = {});
SublinearRecovery recover_sublinear_map(const FunctionOracle& oracle, const RecoveryOptions& opt = {});
Identification identify_preserving(const FunctionOracle& oracle, const RecoveryOptions& opt = {});
Identification identify_reversing(const FunctionOracle& oracle, const RecoveryOptions& opt = {});

// The set map C -> D(T(sigma_C)) induced by a function oracle on a cone.
SetOracle induced_set_oracle(const FunctionOracle& oracle);

// Oracles built from known maps, used for testing and by the command line.
FunctionOracle transform_oracle(const CanonicalTransform& t);
// f -> f(A .) + <phi0, .>
FunctionOracle precomposition_oracle(ConeTag tag, const Mat& a, const Vec& phi0 = Vec());
SetOracle linear_set_oracle(const Mat& a);
SubspaceOracle linear_subspace_oracle(const Mat& a);
// k^p -> (k o A)^p
HomogeneousOracle linear_homogeneous_oracle(const Mat& a, double degree, Homogeneity mode);

// k o A for a gauge or seminorm k.
MinkowskiGauge precompose(const MinkowskiGauge& k, const Mat& a);
Seminorm precompose(const Seminorm& k, const Mat& a);

}  // namespace convdual

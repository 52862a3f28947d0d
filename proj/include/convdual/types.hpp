#pragma once

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace convdual {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerances shared across modules.
inline constexpr double kLpTol = 1e-9;
inline constexpr double kGeomTol = 1e-9;
inline constexpr double kRankTol = 1e-10;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something the operation cannot accept (bad dimension,
// negative scale, improper function, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A black-box oracle produced an answer that no map of the expected form
// can explain.
class NonRepresentable : public Error {
 public:
  using Error::Error;
};

// A sampled audit of an oracle's claimed order property failed.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

inline void require_dim(const Vec& x, int n, const char* what) {
  if (x.size() != n) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (expected " +
                          std::to_string(n) + ", got " + std::to_string(x.size()) + ")");
  }
}

}  // namespace convdual

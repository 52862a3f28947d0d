#pragma once

// Small dense linear programs.
//
// The solver is a two-phase tableau simplex with Bland's rule, meant for the
// desk-scale problems this library generates (tens of rows and columns).
// Feasibility and optimality are decided with an absolute tolerance of
// kLpTol on the tableau entries.

#include "convdual/types.hpp"

namespace convdual {

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double value = kInf;  // objective at the optimum (minimization)
  Vec x;                // optimal point when status == kOptimal
};

// minimize  objective . x
// s.t.      rows of `le`  : a . x <= b
//           rows of `eq`  : a . x == b
//           x_j >= 0 when nonneg[j], free otherwise
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }

  void set_objective(const Vec& c);
  void add_le(const Vec& a, double b);
  void add_eq(const Vec& a, double b);
  void set_nonneg(int j, bool nonneg = true);

  LpResult minimize() const;
  LpResult maximize() const;

 private:
  int num_vars_;
  Vec objective_;
  std::vector<Vec> le_rows_;
  std::vector<double> le_rhs_;
  std::vector<Vec> eq_rows_;
  std::vector<double> eq_rhs_;
  std::vector<bool> nonneg_;
};

}  // namespace convdual

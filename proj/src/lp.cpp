#include "convdual/lp.hpp"

#include <algorithm>
#include <cmath>

namespace convdual {

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars), objective_(Vec::Zero(num_vars)), nonneg_(num_vars, false) {
  if (num_vars < 0) throw InvalidArgument("LinearProgram: negative variable count");
}

void LinearProgram::set_objective(const Vec& c) {
  require_dim(c, num_vars_, "LinearProgram::set_objective");
  objective_ = c;
}

void LinearProgram::add_le(const Vec& a, double b) {
  require_dim(a, num_vars_, "LinearProgram::add_le");
  le_rows_.push_back(a);
  le_rhs_.push_back(b);
}

void LinearProgram::add_eq(const Vec& a, double b) {
  require_dim(a, num_vars_, "LinearProgram::add_eq");
  eq_rows_.push_back(a);
  eq_rhs_.push_back(b);
}

void LinearProgram::set_nonneg(int j, bool nonneg) { nonneg_.at(j) = nonneg; }

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : t_(Mat::Zero(rows, cols + 1)), basis_(rows, -1), cols_(cols) {}

  Mat& t() { return t_; }
  std::vector<int>& basis() { return basis_; }
  int rows() const { return static_cast<int>(t_.rows()); }
  int cols() const { return cols_; }
  double rhs(int i) const { return t_(i, cols_); }

  void pivot(int row, int col) {
    const double p = t_(row, col);
    t_.row(row) /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  void drop_row(int row) {
    const int n = rows();
    Mat next(n - 1, t_.cols());
    next << t_.topRows(row), t_.bottomRows(n - row - 1);
    t_ = std::move(next);
    basis_.erase(basis_.begin() + row);
  }

  // Runs the simplex method on `cost` restricted to columns with allowed[j].
  // Returns false if the problem is unbounded.
  bool run(const Vec& cost, const std::vector<bool>& allowed) {
    Eigen::RowVectorXd reduced(cols_ + 1);
    reduced.head(cols_) = cost.transpose();
    reduced(cols_) = 0.0;
    for (int i = 0; i < rows(); ++i) {
      const double cb = cost(basis_[i]);
      if (cb != 0.0) reduced -= cb * t_.row(i);
    }
    constexpr int kMaxIterations = 100000;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && reduced(j) < -kLpTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = kInf;
      for (int i = 0; i < rows(); ++i) {
        const double a = t_(i, enter);
        if (a <= kLpTol) continue;
        const double ratio = rhs(i) / a;
        if (leave < 0 || ratio < best - kLpTol ||
            (std::abs(ratio - best) <= kLpTol && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::min(best, ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      const double r = reduced(enter);
      reduced -= r * t_.row(leave);
    }
    throw Error("simplex: iteration limit exceeded");
  }

 private:
  Mat t_;
  std::vector<int> basis_;
  int cols_;
};

}  // namespace

LpResult LinearProgram::minimize() const {
  // Column layout: structural columns (one per nonneg variable, two per free
  // variable), then one slack per <= row, then artificials.
  std::vector<int> pos_col(num_vars_), neg_col(num_vars_, -1);
  int ncols = 0;
  for (int j = 0; j < num_vars_; ++j) {
    pos_col[j] = ncols++;
    if (!nonneg_[j]) neg_col[j] = ncols++;
  }
  const int m_le = static_cast<int>(le_rows_.size());
  const int m_eq = static_cast<int>(eq_rows_.size());
  const int m = m_le + m_eq;
  const int slack0 = ncols;
  ncols += m_le;

  std::vector<int> needs_artificial;
  for (int i = 0; i < m_le; ++i) {
    if (le_rhs_[i] < 0.0) needs_artificial.push_back(i);
  }
  for (int i = 0; i < m_eq; ++i) needs_artificial.push_back(m_le + i);
  const int art0 = ncols;
  ncols += static_cast<int>(needs_artificial.size());

  Tableau tab(m, ncols);
  Mat& t = tab.t();
  auto fill_row = [&](int row, const Vec& a, double b, double sign) {
    for (int j = 0; j < num_vars_; ++j) {
      t(row, pos_col[j]) = sign * a(j);
      if (neg_col[j] >= 0) t(row, neg_col[j]) = -sign * a(j);
    }
    t(row, ncols) = sign * b;
  };
  for (int i = 0; i < m_le; ++i) {
    const double sign = le_rhs_[i] < 0.0 ? -1.0 : 1.0;
    fill_row(i, le_rows_[i], le_rhs_[i], sign);
    t(i, slack0 + i) = sign;
    if (sign > 0) tab.basis()[i] = slack0 + i;
  }
  for (int i = 0; i < m_eq; ++i) {
    const double sign = eq_rhs_[i] < 0.0 ? -1.0 : 1.0;
    fill_row(m_le + i, eq_rows_[i], eq_rhs_[i], sign);
  }
  for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
    const int row = needs_artificial[k];
    t(row, art0 + static_cast<int>(k)) = 1.0;
    tab.basis()[row] = art0 + static_cast<int>(k);
  }

  if (!needs_artificial.empty()) {
    Vec phase1 = Vec::Zero(ncols);
    phase1.tail(ncols - art0).setOnes();
    std::vector<bool> all(ncols, true);
    tab.run(phase1, all);
    double infeas = 0.0;
    for (int i = 0; i < tab.rows(); ++i) {
      if (tab.basis()[i] >= art0) infeas += tab.rhs(i);
    }
    if (infeas > kLpTol * (1.0 + static_cast<double>(m))) return {LpStatus::kInfeasible, kInf, {}};
    // Drive remaining (zero-level) artificials out of the basis.
    for (int i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis()[i] < art0) continue;
      int col = -1;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(t(i, j)) > kLpTol) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.drop_row(i);
      }
    }
  }

  Vec cost = Vec::Zero(ncols);
  for (int j = 0; j < num_vars_; ++j) {
    cost(pos_col[j]) = objective_(j);
    if (neg_col[j] >= 0) cost(neg_col[j]) = -objective_(j);
  }
  std::vector<bool> allowed(ncols, true);
  for (int j = art0; j < ncols; ++j) allowed[j] = false;
  if (!tab.run(cost, allowed)) return {LpStatus::kUnbounded, -kInf, {}};

  Vec col_value = Vec::Zero(ncols);
  for (int i = 0; i < tab.rows(); ++i) col_value(tab.basis()[i]) = tab.rhs(i);
  Vec x(num_vars_);
  for (int j = 0; j < num_vars_; ++j) {
    x(j) = col_value(pos_col[j]) - (neg_col[j] >= 0 ? col_value(neg_col[j]) : 0.0);
  }
  return {LpStatus::kOptimal, objective_.dot(x), x};
}

LpResult LinearProgram::maximize() const {
  LinearProgram negated = *this;
  negated.objective_ = -objective_;
  LpResult r = negated.minimize();
  if (r.status == LpStatus::kOptimal) r.value = -r.value;
  if (r.status == LpStatus::kUnbounded) r.value = kInf;
  if (r.status == LpStatus::kInfeasible) r.value = -kInf;
  return r;
}

}  // namespace convdual

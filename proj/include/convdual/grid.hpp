#pragma once

// Functions sampled on a uniform 1-D grid, with +inf marking nodes outside
// the effective domain. Used only by the fast conjugate path.

#include "convdual/types.hpp"

namespace convdual {

struct GridSpec {
  double x_min = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double node(std::size_t i) const { return x_min + static_cast<double>(i) * step; }
};

class GridFunction1D {
 public:
  GridFunction1D(double x_min, double step, std::vector<double> values);
  GridFunction1D(const GridSpec& grid, std::vector<double> values)
      : GridFunction1D(grid.x_min, grid.step, std::move(values)) {}

  // Samples `fn` at `count` nodes starting at x_min.
  template <class Fn>
  static GridFunction1D sample(double x_min, double step, std::size_t count, Fn&& fn) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = fn(x_min + static_cast<double>(i) * step);
    return GridFunction1D(x_min, step, std::move(v));
  }

  const GridSpec& grid() const { return grid_; }
  double x_min() const { return grid_.x_min; }
  double step() const { return grid_.step; }
  std::size_t size() const { return values_.size(); }
  double node(std::size_t i) const { return grid_.node(i); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  // First and one-past-last index of the finite block.
  std::size_t finite_begin() const { return begin_; }
  std::size_t finite_end() const { return end_; }
  std::size_t finite_count() const { return end_ - begin_; }

 private:
  GridSpec grid_;
  std::vector<double> values_;
  std::size_t begin_ = 0;
  std::size_t end_ = 0;
};

// Indices of the lower convex hull of the finite samples, left to right.
// Collinear points are kept.
std::vector<std::size_t> lower_hull(const GridFunction1D& g);

// Lower convex envelope of the samples, evaluated at the grid nodes.
GridFunction1D lsc_hull_grid(const GridFunction1D& g);

}  // namespace convdual

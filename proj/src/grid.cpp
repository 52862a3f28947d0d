#include "convdual/grid.hpp"

#include <cmath>

namespace convdual {

GridFunction1D::GridFunction1D(double x_min, double step, std::vector<double> values)
    : grid_{x_min, step, values.size()}, values_(std::move(values)) {
  if (values_.size() < 2) throw InvalidArgument("GridFunction1D: need at least 2 nodes");
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(x_min)) {
    throw InvalidArgument("GridFunction1D: step must be positive and finite");
  }
  const std::size_t n = values_.size();
  while (begin_ < n && values_[begin_] == kInf) ++begin_;
  end_ = begin_;
  while (end_ < n && values_[end_] != kInf) {
    if (std::isnan(values_[end_]) || values_[end_] == -kInf) {
      throw InvalidArgument("GridFunction1D: values must be finite or +inf");
    }
    ++end_;
  }
  for (std::size_t i = end_; i < n; ++i) {
    if (values_[i] != kInf) throw InvalidArgument("GridFunction1D: finite values must be contiguous");
  }
}

std::vector<std::size_t> lower_hull(const GridFunction1D& g) {
  std::vector<std::size_t> hull;
  hull.reserve(g.finite_count());
  for (std::size_t i = g.finite_begin(); i < g.finite_end(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (g.node(b) - g.node(a)) * (g[i] - g[a]) - (g[b] - g[a]) * (g.node(i) - g.node(a));
      if (cross >= 0.0) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }
  return hull;
}

GridFunction1D lsc_hull_grid(const GridFunction1D& g) {
  if (g.finite_count() < 2) throw InvalidArgument("lsc_hull_grid: need at least 2 finite samples");
  const std::vector<std::size_t> hull = lower_hull(g);
  std::vector<double> out(g.size(), kInf);
  std::size_t k = 0;
  for (std::size_t i = g.finite_begin(); i < g.finite_end(); ++i) {
    while (k + 1 < hull.size() && hull[k + 1] <= i) ++k;
    if (hull[k] == i) {
      out[i] = g[i];
      continue;
    }
    const std::size_t a = hull[k];
    const std::size_t b = hull[k + 1];
    const double t = static_cast<double>(i - a) / static_cast<double>(b - a);
    out[i] = std::min(g[i], (1.0 - t) * g[a] + t * g[b]);
  }
  return GridFunction1D(g.grid(), std::move(out));
}

}  // namespace convdual

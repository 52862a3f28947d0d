#pragma once

// Legendre-Fenchel conjugation, f*(y) = sup_x <y, x> - f(x).

#include "convdual/grid.hpp"
#include "convdual/pl_function.hpp"

namespace convdual {

inline constexpr int kMaxExactConjugateDim = 3;

// Exact conjugate of a proper PL function, n <= 3. Every vertex (x, t) of
// epi f becomes a piece y -> <x, y> - t of f*, and every recession direction
// (d, s) of epi f a domain constraint <d, y> <= s.
PLConvexFunction conjugate_pl(const PLConvexFunction& f);
PLConvexFunction biconjugate(const PLConvexFunction& f);

// Discrete transform g*(y_j) = max_i y_j x_i - g(x_i) over the finite samples.
// The fast version walks the lower hull of the samples with a single pointer
// and runs in O(N + M); its results are bit-identical to the brute force.
GridFunction1D conjugate_grid(const GridFunction1D& g, const GridSpec& out);
// Default output grid: N nodes spanning the slope range of the lower hull.
GridFunction1D conjugate_grid(const GridFunction1D& g);
GridSpec default_conjugate_grid(const GridFunction1D& g);

// O(NM) reference, and its OpenMP parallelization over output nodes.
GridFunction1D conjugate_grid_brute(const GridFunction1D& g, const GridSpec& out);
GridFunction1D conjugate_grid_brute_omp(const GridFunction1D& g, const GridSpec& out);

}  // namespace convdual

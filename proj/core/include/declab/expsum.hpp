// L^p norms of exponential sums with integer frequencies over the unit
// torus, by uniform-grid quadrature. f(t) = sum_x e(x . t) is sampled on an
// N (or N x N) grid via FFT after scattering the frequencies mod N, and the
// norm is the p-th root of the grid mean of |f|^p.
//
// For even p the integrand is a trigonometric polynomial with frequencies
// bounded by (p/2) * max|x|, so any grid with N >= 4 (max|x| + 1) ceil(p/2)
// integrates it exactly and the grid mean equals the energy count E_p;
// smaller grids throw GridTooCoarse. For other p the result is a quadrature
// estimate; default_grid applies 2x further oversampling.
//
// Accumulation order is fixed (row by row, bin by bin), so repeated runs
// produce bit-identical output.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "declab/cantor.hpp"
#include "declab/rational.hpp"

namespace declab {

// Smallest exact grid for even p; 2x that once rounded up for other p.
std::int64_t default_grid(std::int64_t max_abs_coord, double p);

double exp_sum_norm(const std::vector<std::int64_t>& freqs, double p, std::int64_t grid);
double exp_sum_norm(const std::vector<Vec2>& freqs, double p, std::int64_t grid);

struct DecLowerReport {
  double ratio = 0;  // ||f||_p / sqrt(#freqs), the empirical decoupling lower bound
  // k^{i (1/2 - 3/p - c_{p,alpha})}, only meaningful past the bilinear range
  std::optional<double> theoretical_cap;
  bool exact = false;  // even p on a fine enough grid
};

// Lifts the level to the parabola and compares the normalized L^p norm with
// the exponent bound at a dyadic rounding of alpha. grid <= 0 picks
// default_grid from the lifted frequencies.
DecLowerReport empirical_dec_lower(const CantorLevel& level, const Rat& p, std::int64_t grid = 0);

}  // namespace declab

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace quantlet {

// Shared trimmed probability grid: G points uniformly spaced on
// [delta, 1-delta]. G must be a power of two (the wavelet denoising stage
// operates on grid-length signals).
struct ProbabilityGrid {
    int G = 0;
    double delta = 0.0;
    std::vector<double> points;

    double spacing() const { return (1.0 - 2.0 * delta) / (G - 1); }
    bool compatible_with(const ProbabilityGrid& other, double tol = 1e-12) const;
};

bool is_power_of_two(unsigned v);

// Grid construction from the cohort's sample sizes:
// delta = max_i 1/(m_i+1), p_j = delta + (j-1)(1-2 delta)/(G-1).
ProbabilityGrid standard_grid(const std::vector<std::size_t>& sample_sizes, int G);

// Trapezoidal quadrature over [delta, 1-delta] on the grid.
double quad_inner(const ProbabilityGrid& grid, std::span<const double> a,
                  std::span<const double> b);
double quad_norm(const ProbabilityGrid& grid, std::span<const double> a);
// Mean under the normalized uniform measure on the trimmed interval.
double quad_mean(const ProbabilityGrid& grid, std::span<const double> a);

}  // namespace quantlet

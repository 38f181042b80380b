#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Small dense helpers for the normal-equation solves that appear throughout
// the pipeline (constrained curve fits, Gram-system reconstructions,
// least-squares refits). Column counts stay in the tens, so a pivoted
// Cholesky is all that is needed; rank-deficient directions get coefficient
// zero rather than blowing up.

namespace quantlet::linalg {

// Solve the SPSD system G x = b (G is d x d, row-major, overwritten).
// Diagonal-pivoted Cholesky; columns whose pivot falls below
// rel_tol * max_diag are treated as dependent and receive x = 0.
std::vector<double> solve_spsd(std::vector<double> G, std::vector<double> b,
                               double rel_tol = 1e-12);

// Least squares min ||A x - y||_2 with A column-major (n rows, d cols),
// via normal equations + solve_spsd.
std::vector<double> lstsq(std::span<const double> A, std::size_t n, std::size_t d,
                          std::span<const double> y, double rel_tol = 1e-12);

}  // namespace quantlet::linalg

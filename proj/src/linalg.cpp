#include "quantlet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "quantlet/kernels.hpp"

namespace quantlet::linalg {

std::vector<double> solve_spsd(std::vector<double> G, std::vector<double> b,
                               double rel_tol) {
    const std::size_t d = b.size();
    if (G.size() != d * d) throw std::invalid_argument("solve_spsd: dimension mismatch");

    // Outer-product Cholesky with diagonal pivoting: G = P L L^T P^T.
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    double max_diag = 0.0;
    for (std::size_t i = 0; i < d; ++i) max_diag = std::max(max_diag, G[i * d + i]);
    const double threshold = std::max(max_diag, 1.0e-300) * rel_tol;

    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(perm[i], perm[j]);
        std::swap(b[i], b[j]);
        for (std::size_t c = 0; c < d; ++c) std::swap(G[i * d + c], G[j * d + c]);
        for (std::size_t r = 0; r < d; ++r) std::swap(G[r * d + i], G[r * d + j]);
    };

    std::size_t rank = d;
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t piv = k;
        for (std::size_t j = k + 1; j < d; ++j)
            if (G[j * d + j] > G[piv * d + piv]) piv = j;
        swap_index(k, piv);
        const double diag = G[k * d + k];
        if (diag <= threshold) {
            rank = k;
            break;
        }
        const double l = std::sqrt(diag);
        G[k * d + k] = l;
        for (std::size_t r = k + 1; r < d; ++r) G[r * d + k] /= l;
        for (std::size_t r = k + 1; r < d; ++r) {
            const double f = G[r * d + k];
            if (f != 0.0)
                for (std::size_t c = k + 1; c <= r; ++c) G[r * d + c] -= f * G[c * d + k];
        }
    }

    // Forward/back substitution on the leading rank x rank block.
    std::vector<double> z(rank, 0.0);
    for (std::size_t i = 0; i < rank; ++i) {
        double acc = b[i];
        for (std::size_t j = 0; j < i; ++j) acc -= G[i * d + j] * z[j];
        z[i] = acc / G[i * d + i];
    }
    for (std::size_t ii = rank; ii-- > 0;) {
        double acc = z[ii];
        for (std::size_t j = ii + 1; j < rank; ++j) acc -= G[j * d + ii] * z[j];
        z[ii] = acc / G[ii * d + ii];
    }

    std::vector<double> x(d, 0.0);
    for (std::size_t i = 0; i < rank; ++i) x[perm[i]] = z[i];
    return x;
}

std::vector<double> lstsq(std::span<const double> A, std::size_t n, std::size_t d,
                          std::span<const double> y, double rel_tol) {
    if (A.size() != n * d || y.size() != n) throw std::invalid_argument("lstsq: shape mismatch");
    std::vector<double> G(d * d);
    std::vector<double> b(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double* ci = A.data() + i * n;
        for (std::size_t j = 0; j <= i; ++j) {
            const double g = kernels::dot(ci, A.data() + j * n, n);
            G[i * d + j] = g;
            G[j * d + i] = g;
        }
        b[i] = kernels::dot(ci, y.data(), n);
    }
    return solve_spsd(std::move(G), std::move(b), rel_tol);
}

}  // namespace quantlet::linalg

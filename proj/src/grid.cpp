#include "quantlet/grid.hpp"

#include <cmath>
#include <format>

#include "quantlet/errors.hpp"
#include "quantlet/kernels.hpp"

namespace quantlet {

bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

bool ProbabilityGrid::compatible_with(const ProbabilityGrid& other, double tol) const {
    return G == other.G && std::fabs(delta - other.delta) <= tol;
}

ProbabilityGrid standard_grid(const std::vector<std::size_t>& sample_sizes, int G) {
    if (G < 2 || !is_power_of_two(static_cast<unsigned>(G)))
        throw ConfigError(std::format("grid size G={} is not a power of two >= 2", G));
    if (sample_sizes.empty()) throw SchemaError("standard_grid: no sample sizes given");

    double delta = 0.0;
    for (std::size_t m : sample_sizes) delta = std::max(delta, 1.0 / (static_cast<double>(m) + 1.0));
    if (delta >= 0.5)
        throw SchemaError(std::format(
            "degenerate sample: trim level delta={:.4f} >= 0.5 (smallest sample too small)", delta));

    ProbabilityGrid grid;
    grid.G = G;
    grid.delta = delta;
    grid.points.resize(G);
    const double step = (1.0 - 2.0 * delta) / (G - 1);
    for (int j = 0; j < G; ++j) grid.points[j] = delta + j * step;
    return grid;
}

double quad_inner(const ProbabilityGrid& grid, std::span<const double> a,
                  std::span<const double> b) {
    const std::size_t n = a.size();
    const double h = grid.spacing();
    double s = kernels::dot(a.data(), b.data(), n);
    s -= 0.5 * (a[0] * b[0] + a[n - 1] * b[n - 1]);
    return s * h;
}

double quad_norm(const ProbabilityGrid& grid, std::span<const double> a) {
    return std::sqrt(quad_inner(grid, a, a));
}

double quad_mean(const ProbabilityGrid& grid, std::span<const double> a) {
    const std::size_t n = a.size();
    const double h = grid.spacing();
    double s = kernels::sum(a.data(), n) - 0.5 * (a[0] + a[n - 1]);
    return s * h / (1.0 - 2.0 * grid.delta);
}

}  // namespace quantlet

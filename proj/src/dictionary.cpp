#include "quantlet/dictionary.hpp"

#include <cmath>
#include <format>
#include <stdexcept>

#include "quantlet/errors.hpp"
#include "quantlet/kernels.hpp"
#include "quantlet/rng.hpp"
#include "quantlet/special.hpp"

namespace quantlet {

std::pair<std::vector<double>, std::vector<double>> gaussian_bases(const ProbabilityGrid& grid) {
    std::vector<double> z1(grid.points.size(), 1.0);
    std::vector<double> z2(grid.points.size());
    for (std::size_t j = 0; j < grid.points.size(); ++j)
        z2[j] = special::inv_norm_cdf(grid.points[j]);
    return {std::move(z1), std::move(z2)};
}

namespace {

// Composite Simpson over [0,1]; exact for cubics, which pins the
// closed-form Beta(1,1) moments (1/2, 1/12) to machine precision.
constexpr int kMomentIntervals = 2048;

void beta_moments(double a, double b, double& mu, double& sigma) {
    const double h = 1.0 / kMomentIntervals;
    auto F = [&](double u) { return special::reg_inc_beta(a, b, u); };
    // Cache CDF values; both moments use the same nodes.
    std::vector<double> f(kMomentIntervals + 1);
    for (int i = 0; i <= kMomentIntervals; ++i) f[i] = F(i * h);
    auto simpson = [&](auto&& g) {
        double s = g(f[0], 0.0) + g(f[kMomentIntervals], 1.0);
        for (int i = 1; i < kMomentIntervals; ++i)
            s += (i % 2 ? 4.0 : 2.0) * g(f[i], i * h);
        return s * h / 3.0;
    };
    mu = simpson([](double fv, double) { return fv; });
    const double var = simpson([&](double fv, double) {
        const double d = fv - mu;
        return d * d;
    });
    sigma = std::sqrt(var);
}

}  // namespace

DictionaryElement beta_element(double a, double b, const ProbabilityGrid& grid) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error(std::format("beta_element: parameters must be positive, got ({}, {})", a, b));

    double mu = 0.0, sigma = 0.0;
    beta_moments(a, b, mu, sigma);

    DictionaryElement el;
    el.kind = ElementKind::Beta;
    el.a = a;
    el.b = b;
    el.values.resize(grid.points.size());
    for (std::size_t j = 0; j < grid.points.size(); ++j)
        el.values[j] = (special::reg_inc_beta(a, b, grid.points[j]) - mu) / sigma;

    // Project out the unit-norm Gaussian pair under the grid quadrature.
    auto [z1, z2] = gaussian_bases(grid);
    const double n1 = quad_norm(grid, z1);
    const double n2 = quad_norm(grid, z2);
    kernels::scale(1.0 / n1, z1.data(), z1.size());
    kernels::scale(1.0 / n2, z2.data(), z2.size());
    kernels::axpy(-quad_inner(grid, el.values, z1), z1.data(), el.values.data(), z1.size());
    kernels::axpy(-quad_inner(grid, el.values, z2), z2.data(), el.values.data(), z2.size());
    return el;
}

OvercompleteDictionary build_dictionary(const ProbabilityGrid& grid, int K0, double J,
                                        std::uint64_t seed) {
    if (K0 < 0) throw ConfigError("build_dictionary: K0 must be >= 0");
    if (!(J > 0.0)) throw ConfigError("build_dictionary: J must be > 0");

    OvercompleteDictionary dict;
    dict.grid = grid;
    dict.J = J;
    dict.K0 = K0;
    dict.seed = seed;
    dict.elements.reserve(static_cast<std::size_t>(K0) + 2);

    auto [z1, z2] = gaussian_bases(grid);
    dict.elements.push_back({ElementKind::Constant, 0.0, 0.0, std::move(z1)});
    dict.elements.push_back({ElementKind::Gaussian, 0.0, 0.0, std::move(z2)});

    // Draw all parameters first so element construction order cannot
    // perturb the stream.
    Rng rng(seed);
    std::vector<std::pair<double, double>> thetas(K0);
    for (auto& th : thetas) {
        th.first = J * rng.uniform_open();  // open interval keeps parameters positive
        th.second = J * rng.uniform_open();
    }
    for (const auto& [a, b] : thetas) dict.elements.push_back(beta_element(a, b, grid));
    return dict;
}

}  // namespace quantlet

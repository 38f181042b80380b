#include "quantlet/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <format>

#include "quantlet/errors.hpp"

namespace quantlet {

const char* region_name(Region r) {
    switch (r) {
        case Region::Lesion: return "lesion";
        case Region::Peri: return "peri";
        case Region::Liver: return "liver";
    }
    return "?";
}

Region region_from_name(const std::string& name) {
    if (name == "lesion") return Region::Lesion;
    if (name == "peri") return Region::Peri;
    if (name == "liver") return Region::Liver;
    throw SchemaError(std::format("unknown region '{}'", name));
}

QuantileFunction empirical_quantiles(const PixelSample& sample, const ProbabilityGrid& grid) {
    const std::size_t m = sample.values.size();
    if (m < 2)
        throw SchemaError(std::format("sample '{}' has {} pixels; need at least 2",
                                      sample.sample_id, m));
    // The trim level must keep every grid point inside the sample's
    // interpolation range [1/(m+1), m/(m+1)].
    if (grid.delta + 1e-12 < 1.0 / (static_cast<double>(m) + 1.0))
        throw SchemaError(std::format(
            "sample '{}' (m={}) is too small for trim level delta={:.6g}",
            sample.sample_id, m, grid.delta));
    for (double v : sample.values)
        if (!std::isfinite(v))
            throw SchemaError(std::format("sample '{}' contains a non-finite value",
                                          sample.sample_id));

    std::vector<double> sorted = sample.values;
    std::sort(sorted.begin(), sorted.end());

    QuantileFunction qf;
    qf.sample_id = sample.sample_id;
    qf.region = sample.region;
    qf.values.resize(grid.points.size());
    const double mp1 = static_cast<double>(m) + 1.0;
    for (std::size_t j = 0; j < grid.points.size(); ++j) {
        const double h = std::clamp(mp1 * grid.points[j], 1.0, static_cast<double>(m));
        auto k = static_cast<std::size_t>(std::floor(h));
        k = std::clamp<std::size_t>(k, 1, m - 1);
        const double w = h - static_cast<double>(k);
        qf.values[j] = (1.0 - w) * sorted[k - 1] + w * sorted[k];
    }
    return qf;
}

}  // namespace quantlet

#pragma once

#include <string>
#include <vector>

#include "quantlet/grid.hpp"

namespace quantlet {

enum class Region { Lesion, Peri, Liver };

const char* region_name(Region r);
Region region_from_name(const std::string& name);

// One sample's unordered pixel values for one region. Variable length
// across samples.
struct PixelSample {
    std::string sample_id;
    Region region = Region::Liver;
    std::vector<double> values;
};

// Values of the empirical quantile function on a shared trimmed grid;
// non-decreasing by construction.
struct QuantileFunction {
    std::string sample_id;
    Region region = Region::Liver;
    std::vector<double> values;
};

// Type-6 style interpolation of order statistics: with h = (m+1) p,
// k = floor(h) clamped to [1, m-1] and w = h - k, returns
// (1-w) X^(k) + w X^(k+1). Requires grid.delta >= 1/(m+1).
QuantileFunction empirical_quantiles(const PixelSample& sample, const ProbabilityGrid& grid);

}  // namespace quantlet

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quantlet {

enum class VoxelLabel { NormalRoi, Lesion, Peri, Liver, Background };

const char* voxel_label_name(VoxelLabel l);
VoxelLabel voxel_label_from_name(const std::string& name);

// Multi-phase intensity series for every voxel of one scan. Intensities are
// stored voxel-major: intensities[v * phases + t].
struct PhaseSeriesVolume {
    int phases = 0;
    std::vector<double> phase_times;  // size == phases; defaults to 0..P-1

    struct Voxel {
        std::int64_t id = 0;
        int x = 0, y = 0, z = 0;
        VoxelLabel label = VoxelLabel::Background;
    };
    std::vector<Voxel> voxels;
    std::vector<double> intensities;

    std::span<const double> series(std::size_t v) const {
        return {intensities.data() + v * static_cast<std::size_t>(phases),
                static_cast<std::size_t>(phases)};
    }
};

// Continuous piecewise-quadratic enhancement curve with one interior knot.
// Each piece is c[0] + c[1]*t + c[2]*t^2; the left piece applies for
// t <= knot. Continuity at the knot is exact by construction.
struct NormalEnhancementCurve {
    double knot = 0.0;
    std::array<double, 3> left{};
    std::array<double, 3> right{};
    std::vector<double> phase_times;
    double rss = 0.0;  // residual sum of squares of the fit

    double operator()(double t) const {
        const auto& c = (t <= knot) ? left : right;
        return c[0] + t * (c[1] + t * c[2]);
    }
    double continuity_gap() const;
};

// Per-voxel root-mean-square deviation from the enhancement curve.
struct EpmMap {
    std::vector<std::int64_t> voxel_ids;
    std::vector<double> values;
};

// Least-squares continuous piecewise-quadratic fit to all
// (phase_time, intensity) pairs of the normal_roi voxels. The knot is
// chosen by exhaustive search over interior phase times (minimum RSS,
// earliest knot on ties). Requires at least 6 normal_roi voxels.
NormalEnhancementCurve fit_normal_curve(const PhaseSeriesVolume& volume);

// Population variant: pools normal_roi voxels across volumes.
NormalEnhancementCurve fit_normal_curve(std::span<const PhaseSeriesVolume> volumes);

// EPM_v = sqrt( (1/P) sum_t (curve(t) - I_vt)^2 ) for every non-background
// voxel, in input order.
EpmMap compute_epm(const PhaseSeriesVolume& volume, const NormalEnhancementCurve& curve);

}  // namespace quantlet

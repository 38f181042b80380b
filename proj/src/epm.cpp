#include "quantlet/epm.hpp"

#include <cmath>
#include <format>
#include <limits>

#include "quantlet/errors.hpp"
#include "quantlet/kernels.hpp"
#include "quantlet/linalg.hpp"

namespace quantlet {

const char* voxel_label_name(VoxelLabel l) {
    switch (l) {
        case VoxelLabel::NormalRoi: return "normal_roi";
        case VoxelLabel::Lesion: return "lesion";
        case VoxelLabel::Peri: return "peri";
        case VoxelLabel::Liver: return "liver";
        case VoxelLabel::Background: return "background";
    }
    return "?";
}

VoxelLabel voxel_label_from_name(const std::string& name) {
    if (name == "normal_roi") return VoxelLabel::NormalRoi;
    if (name == "lesion") return VoxelLabel::Lesion;
    if (name == "peri") return VoxelLabel::Peri;
    if (name == "liver") return VoxelLabel::Liver;
    if (name == "background") return VoxelLabel::Background;
    throw SchemaError(std::format("unknown voxel region '{}'", name));
}

double NormalEnhancementCurve::continuity_gap() const {
    const double l = left[0] + knot * (left[1] + knot * left[2]);
    const double r = right[0] + knot * (right[1] + knot * right[2]);
    return std::fabs(l - r);
}

namespace {

// Continuous piecewise quadratic with knot k spanned by the truncated-power
// basis {1, t, t^2, (t-k)_+, (t-k)_+^2}: both truncated terms vanish at the
// knot, so continuity holds for any coefficients.
struct KnotFit {
    std::vector<double> coef;  // 5 coefficients
    double rss = 0.0;
};

KnotFit fit_for_knot(std::span<const double> times, std::span<const double> values,
                     double knot) {
    const std::size_t n = times.size();
    constexpr std::size_t d = 5;
    std::vector<double> A(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = times[i];
        const double u = t > knot ? t - knot : 0.0;
        A[0 * n + i] = 1.0;
        A[1 * n + i] = t;
        A[2 * n + i] = t * t;
        A[3 * n + i] = u;
        A[4 * n + i] = u * u;
    }
    KnotFit fit;
    fit.coef = linalg::lstsq(A, n, d, values);
    std::vector<double> pred(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) acc += fit.coef[j] * A[j * n + i];
        pred[i] = acc;
    }
    fit.rss = kernels::sumsq_diff(values.data(), pred.data(), n);
    return fit;
}

NormalEnhancementCurve fit_pairs(std::span<const double> times, std::span<const double> values,
                                 const std::vector<double>& phase_times) {
    const std::size_t P = phase_times.size();

    // Degenerate design: constant intensities fit exactly by a constant.
    double vmin = values[0], vmax = values[0];
    for (double v : values) {
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    NormalEnhancementCurve curve;
    curve.phase_times = phase_times;
    if (vmax - vmin <= 0.0) {
        curve.knot = phase_times[P / 2];
        curve.left = {values[0], 0.0, 0.0};
        curve.right = curve.left;
        curve.rss = 0.0;
        return curve;
    }

    double best_rss = std::numeric_limits<double>::infinity();
    KnotFit best;
    double best_knot = phase_times[1];
    for (std::size_t c = 1; c + 1 < P; ++c) {
        const double knot = phase_times[c];
        KnotFit fit = fit_for_knot(times, values, knot);
        if (fit.rss < best_rss - 1e-12 * (1.0 + best_rss)) {
            best_rss = fit.rss;
            best = fit;
            best_knot = knot;
        }
    }

    curve.knot = best_knot;
    const auto& c = best.coef;
    curve.left = {c[0], c[1], c[2]};
    // right(t) = left(t) + c3 (t-k) + c4 (t-k)^2, expanded in powers of t
    const double k = best_knot;
    curve.right = {c[0] - c[3] * k + c[4] * k * k, c[1] + c[3] - 2.0 * c[4] * k, c[2] + c[4]};
    curve.rss = best.rss;
    return curve;
}

void collect_roi(const PhaseSeriesVolume& v, const std::vector<double>& phase_times,
                 std::vector<double>& times, std::vector<double>& values,
                 std::size_t& roi_count) {
    for (std::size_t i = 0; i < v.voxels.size(); ++i) {
        if (v.voxels[i].label != VoxelLabel::NormalRoi) continue;
        ++roi_count;
        const auto series = v.series(i);
        for (int t = 0; t < v.phases; ++t) {
            times.push_back(phase_times[t]);
            values.push_back(series[t]);
        }
    }
}

std::vector<double> effective_phase_times(const PhaseSeriesVolume& v) {
    if (!v.phase_times.empty()) {
        if (v.phase_times.size() != static_cast<std::size_t>(v.phases))
            throw SchemaError("phase_times length does not match phase count");
        return v.phase_times;
    }
    std::vector<double> t(v.phases);
    for (int i = 0; i < v.phases; ++i) t[i] = i;
    return t;
}

}  // namespace

NormalEnhancementCurve fit_normal_curve(const PhaseSeriesVolume& volume) {
    return fit_normal_curve(std::span<const PhaseSeriesVolume>{&volume, 1});
}

NormalEnhancementCurve fit_normal_curve(std::span<const PhaseSeriesVolume> volumes) {
    if (volumes.empty()) throw SchemaError("fit_normal_curve: no volumes");
    const int P = volumes[0].phases;
    if (P < 3) throw SchemaError(std::format("need at least 3 phases, got {}", P));
    std::vector<double> phase_times = effective_phase_times(volumes[0]);
    std::vector<double> times, values;
    std::size_t roi_count = 0;
    for (const auto& v : volumes) {
        if (v.phases != P) throw SchemaError("volumes disagree on phase count");
        collect_roi(v, effective_phase_times(v), times, values, roi_count);
    }
    if (roi_count < 6)
        throw SchemaError(std::format(
            "insufficient normal-tissue ROI: {} voxels labeled normal_roi, need >= 6", roi_count));
    return fit_pairs(times, values, phase_times);
}

EpmMap compute_epm(const PhaseSeriesVolume& volume, const NormalEnhancementCurve& curve) {
    const std::vector<double> phase_times = effective_phase_times(volume);
    const int P = volume.phases;
    std::vector<double> curve_vals(P);
    for (int t = 0; t < P; ++t) curve_vals[t] = curve(phase_times[t]);

    EpmMap map;
    map.voxel_ids.reserve(volume.voxels.size());
    map.values.reserve(volume.voxels.size());
    for (std::size_t v = 0; v < volume.voxels.size(); ++v) {
        if (volume.voxels[v].label == VoxelLabel::Background) continue;
        const auto series = volume.series(v);
        const double ss = kernels::sumsq_diff(curve_vals.data(), series.data(), P);
        map.voxel_ids.push_back(volume.voxels[v].id);
        map.values.push_back(std::sqrt(ss / P));
    }
    return map;
}

}  // namespace quantlet

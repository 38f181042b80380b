#include "quantlet/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quantlet/grid.hpp"

namespace quantlet::wavelet {

namespace {

// Symlet-8 (least-asymmetric, 8 vanishing moments) scaling filter.
constexpr int kTaps = 16;
constexpr double kLo[kTaps] = {
    -0.0033824159510104515, -0.0005421323318126162, 0.03169508781153073,
    0.007607487324951444,   -0.14329423835146674,   -0.061273359067996844,
    0.4813596512593184,     0.7771857517001619,     0.36444189483631767,
    -0.051945838108136605,  -0.027219029917281264,  0.049137179673704054,
    0.0038087520138695512,  -0.01495225833709116,   -0.00030292051473094914,
    0.0018899503327682616,
};

double hi_tap(int k) {
    // Quadrature mirror: g[k] = (-1)^k h[L-1-k]
    const double h = kLo[kTaps - 1 - k];
    return (k % 2) ? -h : h;
}

// One periodized analysis step: n -> n/2 approx + n/2 detail.
void analysis_step(std::span<const double> x, std::span<double> approx,
                   std::span<double> detail) {
    const std::size_t n = x.size();
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double a = 0.0, d = 0.0;
        for (int k = 0; k < kTaps; ++k) {
            const std::size_t idx = (2 * i + static_cast<std::size_t>(k)) % n;
            a += kLo[k] * x[idx];
            d += hi_tap(k) * x[idx];
        }
        approx[i] = a;
        detail[i] = d;
    }
}

// Inverse of analysis_step (transpose of the orthogonal analysis operator).
void synthesis_step(std::span<const double> approx, std::span<const double> detail,
                    std::span<double> x) {
    const std::size_t n = x.size();
    const std::size_t half = n / 2;
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        for (int k = 0; k < kTaps; ++k) {
            const std::size_t idx = (2 * i + static_cast<std::size_t>(k)) % n;
            x[idx] += kLo[k] * approx[i] + hi_tap(k) * detail[i];
        }
    }
}

}  // namespace

Decomposition dwt(std::span<const double> signal) {
    const std::size_t n = signal.size();
    if (n < 2 || !is_power_of_two(static_cast<unsigned>(n)))
        throw std::invalid_argument("dwt: signal length must be a power of two >= 2");

    Decomposition dec;
    dec.coeffs.resize(n);
    std::vector<double> cur(signal.begin(), signal.end());
    std::vector<double> approx, detail;
    std::size_t write_end = n;  // details fill from the back, finest first
    while (cur.size() > 8) {
        const std::size_t half = cur.size() / 2;
        approx.assign(half, 0.0);
        detail.assign(half, 0.0);
        analysis_step(cur, approx, detail);
        std::copy(detail.begin(), detail.end(), dec.coeffs.begin() + (write_end - half));
        write_end -= half;
        dec.level_sizes.insert(dec.level_sizes.begin(), half);
        cur = approx;
    }
    std::copy(cur.begin(), cur.end(), dec.coeffs.begin());
    dec.approx_size = cur.size();
    return dec;
}

std::vector<double> idwt(const Decomposition& dec) {
    std::vector<double> cur(dec.coeffs.begin(), dec.coeffs.begin() + dec.approx_size);
    std::size_t offset = dec.approx_size;
    std::vector<double> out;
    for (std::size_t ls : dec.level_sizes) {
        std::span<const double> detail{dec.coeffs.data() + offset, ls};
        out.assign(2 * ls, 0.0);
        synthesis_step(cur, detail, out);
        cur = out;
        offset += ls;
    }
    return cur;
}

DenoiseInfo soft_denoise(std::span<double> signal) {
    const std::size_t n = signal.size();
    DenoiseInfo info;
    if (n < 16) return info;  // too short for a meaningful noise estimate

    Decomposition dec = dwt(signal);
    const std::size_t finest = dec.level_sizes.back();
    const std::size_t finest_off = dec.coeffs.size() - finest;

    // sigma_hat = MAD(finest detail)/0.6745 (Donoho-Johnstone).
    std::vector<double> mags(finest);
    for (std::size_t i = 0; i < finest; ++i) mags[i] = std::fabs(dec.coeffs[finest_off + i]);
    std::nth_element(mags.begin(), mags.begin() + finest / 2, mags.end());
    double median = mags[finest / 2];
    if (finest % 2 == 0) {
        const double lower = *std::max_element(mags.begin(), mags.begin() + finest / 2);
        median = 0.5 * (median + lower);
    }
    info.sigma_hat = median / 0.6745;
    info.threshold = info.sigma_hat * std::sqrt(2.0 * std::log(static_cast<double>(n)));

    auto soft = [&](double c) {
        const double m = std::fabs(c) - info.threshold;
        return m > 0.0 ? std::copysign(m, c) : 0.0;
    };
    for (std::size_t i = dec.approx_size; i < dec.coeffs.size(); ++i)
        dec.coeffs[i] = soft(dec.coeffs[i]);

    const std::vector<double> rec = idwt(dec);
    std::copy(rec.begin(), rec.end(), signal.begin());
    return info;
}

}  // namespace quantlet::wavelet

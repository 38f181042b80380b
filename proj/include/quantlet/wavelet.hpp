#pragma once

#include <span>
#include <vector>

// Periodized orthogonal discrete wavelet transform (Symlet-8) and the
// universal-threshold soft denoiser used on quantlet basis rows. Signal
// lengths must be powers of two.

namespace quantlet::wavelet {

inline constexpr const char* kFamily = "sym8";

// Full pyramid down to a coarsest approximation of length >= 8.
// Layout of `coeffs`: [approx | detail_coarsest | ... | detail_finest].
struct Decomposition {
    std::vector<double> coeffs;
    std::vector<std::size_t> level_sizes;  // detail lengths, coarsest first
    std::size_t approx_size = 0;
};

Decomposition dwt(std::span<const double> signal);
std::vector<double> idwt(const Decomposition& dec);

struct DenoiseInfo {
    double sigma_hat = 0.0;   // MAD-based noise estimate from finest details
    double threshold = 0.0;   // sigma_hat * sqrt(2 ln G)
};

// Soft-thresholds all detail coefficients at the universal threshold
// (approximation coefficients pass through) and reconstructs in place.
DenoiseInfo soft_denoise(std::span<double> signal);

}  // namespace quantlet::wavelet

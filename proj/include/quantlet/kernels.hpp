#pragma once

#include <cstddef>
#include <span>

// Dense double-precision kernels used by the hot loops (quadrature inner
// products, coordinate-descent sweeps, Gram-Schmidt updates). Every kernel
// has a scalar reference implementation plus SIMD variants; the active
// variant is chosen once at runtime from CPU capabilities. SIMD results may
// differ from scalar ones by reassociation roundoff only; the equivalence
// suite bounds that difference.

namespace quantlet::kernels {

enum class Backend {
    Auto,    // pick the best supported variant
    Scalar,
    Avx2,
    Neon,
};

// Resolved backend currently in use.
Backend active_backend();
const char* backend_name(Backend b);

// Force a specific backend (test hook). Throws std::invalid_argument if the
// requested backend is not supported on this CPU. Backend::Auto restores
// the default choice.
void force_backend(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum_i a[i]
double sum(const double* a, std::size_t n);
// sum_i (a[i] - b[i])^2
double sumsq_diff(const double* a, const double* b, std::size_t n);
// sum_i w[i] * a[i] * b[i]
double dot3(const double* w, const double* a, const double* b, std::size_t n);
// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);
// x[i] *= alpha
void scale(double alpha, double* x, std::size_t n);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return dot(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> a) { return sum(a.data(), a.size()); }
inline double sumsq_diff(std::span<const double> a, std::span<const double> b) {
    return sumsq_diff(a.data(), b.data(), a.size());
}
inline double dot3(std::span<const double> w, std::span<const double> a,
                   std::span<const double> b) {
    return dot3(w.data(), a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    axpy(alpha, x.data(), y.data(), x.size());
}
inline void scale(double alpha, std::span<double> x) { scale(alpha, x.data(), x.size()); }

}  // namespace quantlet::kernels

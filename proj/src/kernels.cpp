#include "quantlet/kernels.hpp"

#include <atomic>
#include <stdexcept>

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define QUANTLET_HAVE_NEON 1
#else
#define QUANTLET_HAVE_NEON 0
#endif

namespace quantlet::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sumsq_diff_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double dot3_scalar(const double* w, const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

#if QUANTLET_HAVE_NEON

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_neon(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
        acc1 = vaddq_f64(acc1, vld1q_f64(a + i + 2));
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) acc += a[i];
    return acc;
}

double sumsq_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vfmaq_f64(acc, d, d);
    }
    double out = vaddvq_f64(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        out += d * d;
    }
    return out;
}

double dot3_neon(const double* w, const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t wa = vmulq_f64(vld1q_f64(w + i), vld1q_f64(a + i));
        acc = vfmaq_f64(acc, wa, vld1q_f64(b + i));
    }
    double out = vaddvq_f64(acc);
    for (; i < n; ++i) out += w[i] * a[i] * b[i];
    return out;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double alpha, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

#endif  // QUANTLET_HAVE_NEON

#if defined(__x86_64__) || defined(_M_X64)
// Compiled with -mavx2 -mfma in its own translation unit.
double dot_avx2(const double* a, const double* b, std::size_t n);
double sum_avx2(const double* a, std::size_t n);
double sumsq_diff_avx2(const double* a, const double* b, std::size_t n);
double dot3_avx2(const double* w, const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void scale_avx2(double alpha, double* x, std::size_t n);
#define QUANTLET_HAVE_AVX2_TU 1
#else
#define QUANTLET_HAVE_AVX2_TU 0
#endif

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*sumsq_diff)(const double*, const double*, std::size_t);
    double (*dot3)(const double*, const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    Backend id;
};

constexpr Vtable kScalar{dot_scalar, sum_scalar, sumsq_diff_scalar,
                         dot3_scalar, axpy_scalar, scale_scalar, Backend::Scalar};

#if QUANTLET_HAVE_AVX2_TU
constexpr Vtable kAvx2{dot_avx2, sum_avx2, sumsq_diff_avx2,
                       dot3_avx2, axpy_avx2, scale_avx2, Backend::Avx2};
#endif
#if QUANTLET_HAVE_NEON
constexpr Vtable kNeon{dot_neon, sum_neon, sumsq_diff_neon,
                       dot3_neon, axpy_neon, scale_neon, Backend::Neon};
#endif

bool cpu_has_avx2() {
#if QUANTLET_HAVE_AVX2_TU
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Vtable* pick_default() {
#if QUANTLET_HAVE_AVX2_TU
    if (cpu_has_avx2()) return &kAvx2;
#endif
#if QUANTLET_HAVE_NEON
    return &kNeon;
#endif
    return &kScalar;
}

std::atomic<const Vtable*> g_active{nullptr};

const Vtable& active() {
    const Vtable* v = g_active.load(std::memory_order_acquire);
    if (!v) {
        v = pick_default();
        g_active.store(v, std::memory_order_release);
    }
    return *v;
}

}  // namespace detail

Backend active_backend() { return detail::active().id; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

void force_backend(Backend b) {
    using namespace detail;
    switch (b) {
        case Backend::Auto:
            g_active.store(pick_default(), std::memory_order_release);
            return;
        case Backend::Scalar:
            g_active.store(&kScalar, std::memory_order_release);
            return;
        case Backend::Avx2:
#if QUANTLET_HAVE_AVX2_TU
            if (cpu_has_avx2()) {
                g_active.store(&kAvx2, std::memory_order_release);
                return;
            }
#endif
            throw std::invalid_argument("avx2 backend not supported on this CPU");
        case Backend::Neon:
#if QUANTLET_HAVE_NEON
            g_active.store(&kNeon, std::memory_order_release);
            return;
#else
            throw std::invalid_argument("neon backend not supported on this CPU");
#endif
    }
    throw std::invalid_argument("unknown backend");
}

double dot(const double* a, const double* b, std::size_t n) {
    return detail::active().dot(a, b, n);
}
double sum(const double* a, std::size_t n) { return detail::active().sum(a, n); }
double sumsq_diff(const double* a, const double* b, std::size_t n) {
    return detail::active().sumsq_diff(a, b, n);
}
double dot3(const double* w, const double* a, const double* b, std::size_t n) {
    return detail::active().dot3(w, a, b, n);
}
void axpy(double alpha, const double* x, double* y, std::size_t n) {
    detail::active().axpy(alpha, x, y, n);
}
void scale(double alpha, double* x, std::size_t n) { detail::active().scale(alpha, x, n); }

}  // namespace quantlet::kernels

// AVX2/FMA backend. Compiled with -mavx2 -mfma; selected at runtime only when
// the CPU reports AVX2+FMA, so the rest of the binary stays baseline-ISA.
#include "gridperturb/kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace gridperturb::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void lincomb2_avx2(double* out, double s1, const double* a, double s2,
                   const double* b, std::size_t n) {
    const __m256d v1 = _mm256_set1_pd(s1);
    const __m256d v2 = _mm256_set1_pd(s2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_mul_pd(v2, _mm256_loadu_pd(b + i));
        r = _mm256_fmadd_pd(v1, _mm256_loadu_pd(a + i), r);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = s1 * a[i] + s2 * b[i];
}

void mul_add_mul_avx2(double* out, const double* a, const double* b,
                      const double* c, const double* d, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
        r = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), r);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = a[i] * b[i] + c[i] * d[i];
}

void mul_sub_mul_avx2(double* out, const double* a, const double* b,
                      const double* c, const double* d, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
        r = _mm256_fmsub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), r);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void abs_diff_avx2(double* out, const double* a, const double* b, std::size_t n) {
    // clear the sign bit instead of branching
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_and_pd(d, mask));
    }
    for (; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i];
    return acc;
}

const Backend kAvx2 = {
    "avx2",   dot_avx2,         axpy_avx2,    lincomb2_avx2,
    mul_add_mul_avx2, mul_sub_mul_avx2, abs_diff_avx2, sum_avx2,
};

}  // namespace

const Backend* avx2_backend() {
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? &kAvx2 : nullptr;
}

}  // namespace gridperturb::kernels

#include "gridperturb/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace gridperturb::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void lincomb2_scalar(double* out, double s1, const double* a, double s2,
                     const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = s1 * a[i] + s2 * b[i];
}

void mul_add_mul_scalar(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] + c[i] * d[i];
}

void mul_sub_mul_scalar(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void abs_diff_scalar(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

const Backend kScalar = {
    "scalar",   dot_scalar,         axpy_scalar,    lincomb2_scalar,
    mul_add_mul_scalar, mul_sub_mul_scalar, abs_diff_scalar, sum_scalar,
};

const Backend* pick() {
    const char* env = std::getenv("GRIDPERTURB_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
    if (const Backend* avx2 = avx2_backend()) return avx2;
    return &kScalar;
}

}  // namespace

const Backend& scalar_backend() { return kScalar; }

#ifndef GRIDPERTURB_BUILD_AVX2
const Backend* avx2_backend() { return nullptr; }
#endif

const Backend& active() {
    static const Backend* selected = pick();
    return *selected;
}

}  // namespace gridperturb::kernels

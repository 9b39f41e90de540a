#pragma once
// Vectorized double-precision primitives behind the dense linear algebra and
// graph-signal arithmetic. A backend is a table of function pointers; the
// active table is chosen once at startup from CPU capabilities and can be
// forced to the scalar reference with GRIDPERTURB_SIMD=scalar.

#include <cstddef>

namespace gridperturb::kernels {

struct Backend {
    const char* name;

    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[i] += alpha*x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // out[i] = s1*a[i] + s2*b[i]
    void (*lincomb2)(double* out, double s1, const double* a, double s2,
                     const double* b, std::size_t n);
    // out[i] = a[i]*b[i] + c[i]*d[i]
    void (*mul_add_mul)(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n);
    // out[i] = a[i]*b[i] - c[i]*d[i]
    void (*mul_sub_mul)(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n);
    // out[i] = |a[i] - b[i]|
    void (*abs_diff)(double* out, const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
};

const Backend& scalar_backend();
// nullptr when the build has no AVX2 translation unit or the CPU lacks AVX2.
const Backend* avx2_backend();

// Selected once per process (thread-safe); honors GRIDPERTURB_SIMD.
const Backend& active();

inline double dot(const double* a, const double* b, std::size_t n) {
    return active().dot(a, b, n);
}
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active().axpy(alpha, x, y, n);
}
inline void lincomb2(double* out, double s1, const double* a, double s2,
                     const double* b, std::size_t n) {
    active().lincomb2(out, s1, a, s2, b, n);
}
inline void mul_add_mul(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n) {
    active().mul_add_mul(out, a, b, c, d, n);
}
inline void mul_sub_mul(double* out, const double* a, const double* b,
                        const double* c, const double* d, std::size_t n) {
    active().mul_sub_mul(out, a, b, c, d, n);
}
inline void abs_diff(double* out, const double* a, const double* b, std::size_t n) {
    active().abs_diff(out, a, b, n);
}
inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }

}  // namespace gridperturb::kernels

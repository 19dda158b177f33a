#pragma once

#include <complex>
#include <cstddef>

#ifdef TDSTS_HAVE_OPENMP
#include <omp.h>
#endif

namespace tdsts::kernels {

using Complex = std::complex<double>;

// Banded ladder-operator applications on a two-mode amplitude tensor stored
// row-major, index = j*n2 + k (j = physical mode, k = tilde mode).
//
// Every kernel writes each output element exactly once, so the OpenMP
// variants produce bitwise the same result as the *_ref serial variants for
// any thread count. The *_ref versions are the reference implementations the
// test suite compares against; the unsuffixed versions are the production
// paths (OpenMP when compiled in, plain loops otherwise).
//
// `sq` must hold sqrt(i) for i in [0, max(n1, n2) + 2).

// out[j,k] = c_raise*sqrt(j*k)*in[j-1,k-1] + c_lower*sqrt((j+1)(k+1))*in[j+1,k+1]
void pair_ladder_apply(const Complex* in, Complex* out, int n1, int n2,
                       const double* sq, Complex c_raise, Complex c_lower);
void pair_ladder_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                           const double* sq, Complex c_raise, Complex c_lower);

// out[j,k] = c_raise*sqrt(j(j-1))*in[j-2,k] + c_lower*sqrt((j+1)(j+2))*in[j+2,k]
void mode1_quadratic_apply(const Complex* in, Complex* out, int n1, int n2,
                           const double* sq, Complex c_raise, Complex c_lower);
void mode1_quadratic_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                               const double* sq, Complex c_raise, Complex c_lower);

// out[j,k] = c_raise*sqrt(k(k-1))*in[j,k-2] + c_lower*sqrt((k+1)(k+2))*in[j,k+2]
void mode2_quadratic_apply(const Complex* in, Complex* out, int n1, int n2,
                           const double* sq, Complex c_raise, Complex c_lower);
void mode2_quadratic_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                               const double* sq, Complex c_raise, Complex c_lower);

// out[j,k] = c_raise*sqrt(j)*in[j-1,k] + c_lower*sqrt(j+1)*in[j+1,k]
void mode1_linear_apply(const Complex* in, Complex* out, int n1, int n2,
                        const double* sq, Complex c_raise, Complex c_lower);
void mode1_linear_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                            const double* sq, Complex c_raise, Complex c_lower);

// out[j,k] = c_raise*sqrt(k)*in[j,k-1] + c_lower*sqrt(k+1)*in[j,k+1]
void mode2_linear_apply(const Complex* in, Complex* out, int n1, int n2,
                        const double* sq, Complex c_raise, Complex c_lower);
void mode2_linear_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                            const double* sq, Complex c_raise, Complex c_lower);

// state[j,k] *= exp(-i * angle * (j - k)); exact free evolution.
void phase_rotation_apply(Complex* state, int n1, int n2, double angle);
void phase_rotation_apply_ref(Complex* state, int n1, int n2, double angle);

bool openmp_enabled();
int max_threads();

/// Parallel map over [0, n): f(i) must write only state owned by index i.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& f) {
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
#else
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
#endif
}

}  // namespace tdsts::kernels

#include "tdsts/kernels.hpp"

#include <cmath>
#include <vector>

namespace tdsts::kernels {

bool openmp_enabled() {
#ifdef TDSTS_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef TDSTS_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void pair_ladder_apply(const Complex* in, Complex* out, int n1, int n2,
                       const double* sq, Complex c_raise, Complex c_lower) {
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (j > 0 && k > 0)
                acc += c_raise * (sq[j] * sq[k]) * in[row - n2 + (k - 1)];
            if (j + 1 < n1 && k + 1 < n2)
                acc += c_lower * (sq[j + 1] * sq[k + 1]) * in[row + n2 + (k + 1)];
            out[row + k] = acc;
        }
    }
}

void pair_ladder_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                           const double* sq, Complex c_raise, Complex c_lower) {
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (j > 0 && k > 0)
                acc += c_raise * (sq[j] * sq[k]) * in[row - n2 + (k - 1)];
            if (j + 1 < n1 && k + 1 < n2)
                acc += c_lower * (sq[j + 1] * sq[k + 1]) * in[row + n2 + (k + 1)];
            out[row + k] = acc;
        }
    }
}

void mode1_quadratic_apply(const Complex* in, Complex* out, int n1, int n2,
                           const double* sq, Complex c_raise, Complex c_lower) {
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        const bool lo = j >= 2;
        const bool hi = j + 2 < n1;
        const double wlo = lo ? sq[j] * sq[j - 1] : 0.0;
        const double whi = hi ? sq[j + 1] * sq[j + 2] : 0.0;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (lo) acc += c_raise * wlo * in[row - 2 * n2 + k];
            if (hi) acc += c_lower * whi * in[row + 2 * n2 + k];
            out[row + k] = acc;
        }
    }
}

void mode1_quadratic_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                               const double* sq, Complex c_raise, Complex c_lower) {
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        const bool lo = j >= 2;
        const bool hi = j + 2 < n1;
        const double wlo = lo ? sq[j] * sq[j - 1] : 0.0;
        const double whi = hi ? sq[j + 1] * sq[j + 2] : 0.0;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (lo) acc += c_raise * wlo * in[row - 2 * n2 + k];
            if (hi) acc += c_lower * whi * in[row + 2 * n2 + k];
            out[row + k] = acc;
        }
    }
}

void mode2_quadratic_apply(const Complex* in, Complex* out, int n1, int n2,
                           const double* sq, Complex c_raise, Complex c_lower) {
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (k >= 2) acc += c_raise * (sq[k] * sq[k - 1]) * in[row + k - 2];
            if (k + 2 < n2) acc += c_lower * (sq[k + 1] * sq[k + 2]) * in[row + k + 2];
            out[row + k] = acc;
        }
    }
}

void mode2_quadratic_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                               const double* sq, Complex c_raise, Complex c_lower) {
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (k >= 2) acc += c_raise * (sq[k] * sq[k - 1]) * in[row + k - 2];
            if (k + 2 < n2) acc += c_lower * (sq[k + 1] * sq[k + 2]) * in[row + k + 2];
            out[row + k] = acc;
        }
    }
}

void mode1_linear_apply(const Complex* in, Complex* out, int n1, int n2,
                        const double* sq, Complex c_raise, Complex c_lower) {
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        const double wlo = (j > 0) ? sq[j] : 0.0;
        const double whi = (j + 1 < n1) ? sq[j + 1] : 0.0;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (j > 0) acc += c_raise * wlo * in[row - n2 + k];
            if (j + 1 < n1) acc += c_lower * whi * in[row + n2 + k];
            out[row + k] = acc;
        }
    }
}

void mode1_linear_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                            const double* sq, Complex c_raise, Complex c_lower) {
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        const double wlo = (j > 0) ? sq[j] : 0.0;
        const double whi = (j + 1 < n1) ? sq[j + 1] : 0.0;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (j > 0) acc += c_raise * wlo * in[row - n2 + k];
            if (j + 1 < n1) acc += c_lower * whi * in[row + n2 + k];
            out[row + k] = acc;
        }
    }
}

void mode2_linear_apply(const Complex* in, Complex* out, int n1, int n2,
                        const double* sq, Complex c_raise, Complex c_lower) {
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (k > 0) acc += c_raise * sq[k] * in[row + k - 1];
            if (k + 1 < n2) acc += c_lower * sq[k + 1] * in[row + k + 1];
            out[row + k] = acc;
        }
    }
}

void mode2_linear_apply_ref(const Complex* in, Complex* out, int n1, int n2,
                            const double* sq, Complex c_raise, Complex c_lower) {
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        for (int k = 0; k < n2; ++k) {
            Complex acc(0.0, 0.0);
            if (k > 0) acc += c_raise * sq[k] * in[row + k - 1];
            if (k + 1 < n2) acc += c_lower * sq[k + 1] * in[row + k + 1];
            out[row + k] = acc;
        }
    }
}

namespace {

// Shared phase tables so the parallel and serial paths multiply by bitwise
// identical factors.
void make_phase_tables(int n1, int n2, double angle, std::vector<Complex>& ph1,
                       std::vector<Complex>& ph2) {
    ph1.resize(static_cast<std::size_t>(n1));
    ph2.resize(static_cast<std::size_t>(n2));
    for (int j = 0; j < n1; ++j) ph1[j] = std::polar(1.0, -angle * j);
    for (int k = 0; k < n2; ++k) ph2[k] = std::polar(1.0, angle * k);
}

}  // namespace

void phase_rotation_apply(Complex* state, int n1, int n2, double angle) {
    std::vector<Complex> ph1, ph2;
    make_phase_tables(n1, n2, angle, ph1, ph2);
#ifdef TDSTS_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        const Complex pj = ph1[j];
        for (int k = 0; k < n2; ++k) state[row + k] *= pj * ph2[k];
    }
}

void phase_rotation_apply_ref(Complex* state, int n1, int n2, double angle) {
    std::vector<Complex> ph1, ph2;
    make_phase_tables(n1, n2, angle, ph1, ph2);
    for (int j = 0; j < n1; ++j) {
        const int row = j * n2;
        const Complex pj = ph1[j];
        for (int k = 0; k < n2; ++k) state[row + k] *= pj * ph2[k];
    }
}

}  // namespace tdsts::kernels

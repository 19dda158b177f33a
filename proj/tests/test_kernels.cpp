#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tdsts/kernels.hpp"

using namespace tdsts::kernels;

namespace {

struct Fixture {
    int n1 = 37, n2 = 41;
    std::vector<double> sq;
    std::vector<Complex> in, out_par, out_ref;

    Fixture() {
        const int nmax = std::max(n1, n2);
        sq.resize(nmax + 2);
        for (int i = 0; i < nmax + 2; ++i) sq[i] = std::sqrt(double(i));
        in.resize(n1 * n2);
        out_par.assign(in.size(), Complex(0, 0));
        out_ref.assign(in.size(), Complex(0, 0));
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (auto& c : in) c = Complex(u(rng), u(rng));
    }
};

void check_bitwise_equal(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].real() == b[i].real());
        CHECK(a[i].imag() == b[i].imag());
    }
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference bitwise") {
    Fixture f;
    const Complex cr(0.3, -0.7), cl(-0.2, 0.5);

    SUBCASE("pair ladder") {
        pair_ladder_apply(f.in.data(), f.out_par.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        pair_ladder_apply_ref(f.in.data(), f.out_ref.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        check_bitwise_equal(f.out_par, f.out_ref);
    }
    SUBCASE("mode1 quadratic") {
        mode1_quadratic_apply(f.in.data(), f.out_par.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        mode1_quadratic_apply_ref(f.in.data(), f.out_ref.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        check_bitwise_equal(f.out_par, f.out_ref);
    }
    SUBCASE("mode2 quadratic") {
        mode2_quadratic_apply(f.in.data(), f.out_par.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        mode2_quadratic_apply_ref(f.in.data(), f.out_ref.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        check_bitwise_equal(f.out_par, f.out_ref);
    }
    SUBCASE("mode1 linear") {
        mode1_linear_apply(f.in.data(), f.out_par.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        mode1_linear_apply_ref(f.in.data(), f.out_ref.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        check_bitwise_equal(f.out_par, f.out_ref);
    }
    SUBCASE("mode2 linear") {
        mode2_linear_apply(f.in.data(), f.out_par.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        mode2_linear_apply_ref(f.in.data(), f.out_ref.data(), f.n1, f.n2, f.sq.data(), cr, cl);
        check_bitwise_equal(f.out_par, f.out_ref);
    }
    SUBCASE("phase rotation") {
        auto a = f.in;
        auto b = f.in;
        phase_rotation_apply(a.data(), f.n1, f.n2, 0.37);
        phase_rotation_apply_ref(b.data(), f.n1, f.n2, 0.37);
        check_bitwise_equal(a, b);
    }
}

TEST_CASE("ladder amplitudes carry the right matrix elements") {
    // Single basis vector |j=2, k=3>, n1 = n2 = 6.
    const int n = 6;
    std::vector<double> sq(n + 2);
    for (int i = 0; i < n + 2; ++i) sq[i] = std::sqrt(double(i));
    std::vector<Complex> in(n * n, Complex(0, 0)), out(n * n, Complex(0, 0));
    in[2 * n + 3] = Complex(1, 0);

    SUBCASE("pair ladder raise/lower") {
        pair_ladder_apply_ref(in.data(), out.data(), n, n, sq.data(), Complex(1, 0),
                              Complex(0, 0));
        // raise: out[3,4] = sqrt(3*4)
        CHECK(out[3 * n + 4].real() == doctest::Approx(std::sqrt(12.0)));
        pair_ladder_apply_ref(in.data(), out.data(), n, n, sq.data(), Complex(0, 0),
                              Complex(1, 0));
        // lower: out[1,2] = sqrt(2*3)
        CHECK(out[1 * n + 2].real() == doctest::Approx(std::sqrt(6.0)));
    }
    SUBCASE("mode1 quadratic") {
        mode1_quadratic_apply_ref(in.data(), out.data(), n, n, sq.data(), Complex(1, 0),
                                  Complex(0, 0));
        // a+a+ |2> -> sqrt(3*4) |4>
        CHECK(out[4 * n + 3].real() == doctest::Approx(std::sqrt(12.0)));
        mode1_quadratic_apply_ref(in.data(), out.data(), n, n, sq.data(), Complex(0, 0),
                                  Complex(1, 0));
        // aa |2> -> sqrt(2*1) |0>
        CHECK(out[0 * n + 3].real() == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("mode2 linear") {
        mode2_linear_apply_ref(in.data(), out.data(), n, n, sq.data(), Complex(1, 0),
                               Complex(0, 0));
        // b+ |3> -> sqrt(4) |4>
        CHECK(out[2 * n + 4].real() == doctest::Approx(2.0));
        mode2_linear_apply_ref(in.data(), out.data(), n, n, sq.data(), Complex(0, 0),
                               Complex(1, 0));
        // b |3> -> sqrt(3) |2>
        CHECK(out[2 * n + 2].real() == doctest::Approx(std::sqrt(3.0)));
    }
}

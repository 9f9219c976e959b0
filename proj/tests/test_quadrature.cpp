#include <cmath>
#include <complex>

#include "doctest.h"

#include "dsirr/quadrature.hpp"

using namespace dsirr;

TEST_CASE("polynomials and classic integrals") {
    const QuadResult cube = integrate([](double x) { return x * x; }, 0.0,
                                      1.0, 1e-14);
    CHECK(cube.converged);
    CHECK(cube.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    const QuadResult sine = integrate([](double x) { return std::sin(x); },
                                      0.0, M_PI, 1e-13);
    CHECK(sine.converged);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-13));

    // damped oscillation: exact value 1/101 over the infinite range, and the
    // [0, 60] truncation error is ~e^-60
    const QuadResult osc = integrate(
        [](double x) { return std::exp(-x) * std::cos(10.0 * x); }, 0.0, 60.0,
        1e-14);
    CHECK(osc.converged);
    CHECK(osc.value == doctest::Approx(1.0 / 101.0).epsilon(1e-12));
}

TEST_CASE("gaussian mass with relative tolerance") {
    const QuadResult g = integrate(
        [](double x) { return std::exp(-x * x); }, -40.0, 40.0, 0.0, 1e-12);
    CHECK(g.converged);
    CHECK(g.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(g.evals > 0);
}

TEST_CASE("non-convergence is reported, not hidden") {
    // integrable endpoint singularity with almost no refinement depth
    const QuadResult bad = integrate(
        [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3) + 1e-300); },
        0.0, 1.0, 1e-14, 0.0, 3);
    CHECK_FALSE(bad.converged);
    CHECK(bad.error > 1e-14);
}

TEST_CASE("complex integrand") {
    const QuadResultC e = integrate_complex(
        [](double x) { return std::exp(std::complex<double>(0.0, x)); }, 0.0,
        1.0, 1e-14);
    CHECK(e.converged);
    CHECK(e.value.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
    CHECK(e.value.imag() ==
          doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-14));
}

TEST_CASE("oscillatory gaussian, the shape the screen states produce") {
    // int exp(-x^2/2) cos(8 x) dx = sqrt(2 pi) exp(-32)
    const QuadResult f = integrate(
        [](double x) { return std::exp(-0.5 * x * x) * std::cos(8.0 * x); },
        -12.0, 12.0, 1e-18, 1e-10);
    CHECK(f.converged);
    CHECK(f.value ==
          doctest::Approx(std::sqrt(2.0 * M_PI) * std::exp(-32.0))
              .epsilon(1e-8));
}

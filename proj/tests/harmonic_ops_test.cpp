#include <doctest.h>

#include <cmath>
#include <limits>

#include "genhankel/error.hpp"
#include "genhankel/harmonic_ops.hpp"
#include "genhankel/transform.hpp"
#include "support.hpp"

using namespace genhankel;
using testing::rel_diff;

TEST_CASE("NormSpec conjugates")
{
    CHECK(NormSpec::of(1.0).conjugate == std::numeric_limits<double>::infinity());
    CHECK(NormSpec::of(2.0).conjugate == doctest::Approx(2.0));
    CHECK(NormSpec::of(4.0).conjugate == doctest::Approx(4.0 / 3.0));
    CHECK(NormSpec::of(std::numeric_limits<double>::infinity()).conjugate == 1.0);
    CHECK_THROWS_AS((void)NormSpec::of(0.5), DomainError);
    CHECK_THROWS_AS((void)NormSpec::of(std::nan("")), DomainError);
}

TEST_CASE("translation by zero is the identity")
{
    const Params p = make_params(3, 0.7);
    const Function1D f = polynomial_bump(0.2, 1.5, 3);
    for (double y : {-1.0, -0.2, 0.0, 0.5, 1.6}) {
        CHECK(std::abs(translate(p, f, 0.0, y) - f(y)) < 1e-9);
    }
}

TEST_CASE("translation is symmetric in x and y")
{
    const Params p = make_params(2, 0.8);
    const Function1D f = make_function([](double z) { return Complex(std::exp(-z * z)); }, -7, 7);
    CHECK(std::abs(translate(p, f, 1.0, 0.3) - translate(p, f, 0.3, 1.0)) < 1e-10);
    testing::Sampler s(41);
    for (int i = 0; i < 10; ++i) {
        const double x = s.signed_uniform(0.05, 3.0);
        const double y = s.signed_uniform(0.05, 3.0);
        CHECK(std::abs(translate(p, f, x, y) - translate(p, f, y, x)) < 1e-10);
    }
}

TEST_CASE("translated function support")
{
    const Params p = make_params(2, 0.8);
    const Function1D f = polynomial_bump(0.0, 1.0, 4);
    const Function1D t = translated(p, f, 2.25);
    // rho = 1, |x|^{1/2} = 1.5, so the support is |y|^{1/2} <= 2.5
    CHECK(t.support_hi <= 6.25 + 1e-12);
    CHECK(t.support_lo >= -6.25 - 1e-12);
    CHECK(std::abs(t(6.3)) == 0.0);
    CHECK(std::abs(t(1.0) - translate(p, f, 2.25, 1.0)) < 1e-15);
}

TEST_CASE("operator_T examples")
{
    const Params p = make_params(2, 0.8);
    const double lambda = 1.5;
    const Function1D b = make_function([p, lambda](double x) { return b_kernel(p, lambda, x); }, -1e3, 1e3);
    const Complex t = operator_T(p, b, 0.9);
    CHECK(std::abs(t + std::pow(lambda, 2.0 / 2) * b_kernel(p, lambda, 0.9)) < 1e-6);

    // even f: analytic derivatives and finite differences agree, no reflection term
    const Function1D g = gaussian_bump(0.0, 1.0);
    const double x = 0.7;
    const double e = std::exp(-x * x);
    const double expected = std::pow(x, 1.0) * ((4 * x * x - 2) * e + (2 * 0.8 / x) * (-2 * x * e));
    CHECK(std::abs(operator_T(p, g, x) - expected) < 1e-12);
    CHECK(std::abs(operator_T_fd(p, g, x, 1e-4) - expected) < 1e-6);

    CHECK_THROWS_AS((void)operator_T(p, g, 0.0), DomainError);
}

TEST_CASE("operator_T eigenrelation converges at second order")
{
    for (auto [n, kappa] : {std::pair{1, 1.0}, std::pair{2, 0.8}, std::pair{3, 0.7}}) {
        const Params p = make_params(n, kappa);
        const double lambda = 1.3;
        const double x = -0.8;
        const Function1D b = make_function([p, lambda](double z) { return b_kernel(p, lambda, z); }, -1e3, 1e3);
        const Complex target = -std::pow(lambda, 2.0 / n) * b_kernel(p, lambda, x);
        const double e1 = std::abs(operator_T_fd(p, b, x, 4e-3) - target);
        const double e2 = std::abs(operator_T_fd(p, b, x, 2e-3) - target);
        CAPTURE(n);
        CAPTURE(e1);
        CAPTURE(e2);
        CHECK(e1 / e2 > 3.2);
        CHECK(e1 / e2 < 4.8);
    }
}

TEST_CASE("operator_T is symmetric against mu")
{
    const Params p = make_params(2, 0.8);
    const Function1D f = polynomial_bump(1.2, 0.8, 5);
    const Function1D g = add(polynomial_bump(1.0, 0.6, 5), polynomial_bump(-1.3, 0.9, 5));
    const Function1D tf = make_function([&](double x) { return x == 0.0 ? Complex{} : operator_T(p, f, x); }, -2.5,
                                        2.5, {-2.2, -0.4, 0.4, 2.0});
    const Function1D tg = make_function([&](double x) { return x == 0.0 ? Complex{} : operator_T(p, g, x); }, -2.5,
                                        2.5, {-2.2, -0.4, 0.4, 1.6});
    const Complex lhs = integrate_mu(p, make_function([&](double x) { return tf(x) * g(x); }, -2.5, 2.5,
                                                      {-2.2, -0.4, 0.4, 1.6, 2.0}));
    const Complex rhs = integrate_mu(p, make_function([&](double x) { return f(x) * tg(x); }, -2.5, 2.5,
                                                      {-2.2, -0.4, 0.4, 1.6, 2.0}));
    CHECK(std::abs(lhs - rhs) < 1e-6);
}

TEST_CASE("lp_norm")
{
    const Params p = make_params(3, 0.7);
    const Function1D zero = make_function([](double) { return Complex{}; }, -1, 1);
    for (double q : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
        const NormSpec spec = NormSpec::of(q);
        CHECK(lp_norm(p, zero, spec) == 0.0);
        const Function1D f = polynomial_bump(0.3, 1.1, 3);
        CHECK(rel_diff(lp_norm(p, scale(f, 3.0), spec), 3.0 * lp_norm(p, f, spec)) < 1e-13);
    }
    const Function1D f = polynomial_bump(0.0, 1.0, 3);
    CHECK(rel_diff(lp_norm(p, f, NormSpec::of(std::numeric_limits<double>::infinity())), 1.0) < 1e-15);
    CHECK(rel_diff(lp_norm(p, f, NormSpec::of(1.0)), integrate_mu(p, f).real()) < 1e-13);
}

TEST_CASE("radial_interpolant reproduces smooth functions")
{
    const Params p = make_params(3, 0.7);
    const Function1D f = polynomial_bump(0.1, 1.4, 6);
    const Function1D r = radial_interpolant(p, f, 4, 24);
    testing::Sampler s(5);
    for (int i = 0; i < 200; ++i) {
        const double x = s.uniform(f.support_lo, f.support_hi);
        CHECK(std::abs(r(x) - f(x)) < 1e-8);
    }
    CHECK(r(f.support_hi + 0.1) == Complex{});
}

TEST_CASE("convolution is commutative")
{
    const Params p = make_params(3, 0.7);
    const Function1D f = polynomial_bump(0.3, 0.6, 4);
    const Function1D g = polynomial_bump(-0.4, 0.8, 4);
    CHECK(std::abs(convolve(p, f, g, 0.5) - convolve(p, g, f, 0.5)) < 1e-7);
}

TEST_CASE("convolution support")
{
    const Params p = make_params(2, 0.8);
    const Function1D f = polynomial_bump(0.0, 0.25, 4); // |.|^{1/2} <= 0.5
    const Function1D g = polynomial_bump(0.0, 1.0, 4);  // |.|^{1/2} <= 1
    for (double x : {2.3, -2.4, 5.0}) {
        CHECK(convolve(p, f, g, x) == Complex{});
    }
    CHECK(std::abs(convolve(p, f, g, 0.3)) > 0.0);
}

TEST_CASE("convolution is associative")
{
    const Params p = make_params(2, 0.8);
    const Function1D f = polynomial_bump(0.2, 0.5, 4);
    const Function1D g = polynomial_bump(-0.1, 0.4, 4);
    const Function1D h = polynomial_bump(0.0, 0.6, 4);
    QuadratureOptions opts;
    opts.tol = 1e-10;
    const Function1D fg = radial_interpolant(p, convolution(p, f, g, opts), 4, 20);
    const Function1D gh = radial_interpolant(p, convolution(p, g, h, opts), 4, 20);
    for (double x : {-0.6, -0.2, 0.1, 0.45, 0.9}) {
        const Complex left = convolve(p, fg, h, x, opts);
        const Complex right = convolve(p, f, gh, x, opts);
        CAPTURE(x);
        CHECK(std::abs(left - right) < 1e-5);
    }
}

#ifndef GENHANKEL_FUNCTION_HPP
#define GENHANKEL_FUNCTION_HPP

#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace genhankel {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(double)>;

/// A complex function of one real variable as the integrators see it: an
/// evaluator, a closed support interval outside which it vanishes, and the
/// points where it fails to be smooth (support edges, kinks).  Quadratures
/// split their panels at these points.
///
/// Optional first/second derivatives are consumed by operator_T; when absent
/// it falls back to central differences.
struct Function1D {
    ComplexFn eval;
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();
    std::vector<double> breakpoints;
    ComplexFn derivative1;
    ComplexFn derivative2;

    [[nodiscard]] Complex operator()(double x) const
    {
        if (x < support_lo || x > support_hi) {
            return {};
        }
        return eval(x);
    }

    [[nodiscard]] bool compact() const noexcept
    {
        return support_lo > -std::numeric_limits<double>::infinity() &&
               support_hi < std::numeric_limits<double>::infinity();
    }

    /// Support edges plus interior breakpoints, sorted and deduplicated.
    [[nodiscard]] std::vector<double> singular_points() const;
};

/// f(x) = c everywhere (not compactly supported).
[[nodiscard]] Function1D constant_function(Complex c);

/// Wraps a closed-form evaluator with declared compact support.
[[nodiscard]] Function1D make_function(ComplexFn eval, double support_lo, double support_hi,
                                       std::vector<double> breakpoints = {});

/// Smooth compactly supported bump (1 - ((x-center)/radius)^2)^power on
/// [center-radius, center+radius], scaled by `height`; derivatives are exact.
[[nodiscard]] Function1D polynomial_bump(double center, double radius, int power, double height = 1.0);

/// exp(-(x-center)^2 / width^2) truncated where it drops below 1e-19;
/// derivatives are exact.
[[nodiscard]] Function1D gaussian_bump(double center, double width, double height = 1.0);

/// Pointwise sum / scalar multiple, keeping supports and breakpoints (and
/// derivatives when every term has them).
[[nodiscard]] Function1D add(const Function1D& f, const Function1D& g);
[[nodiscard]] Function1D scale(const Function1D& f, Complex c);

} // namespace genhankel

#endif

#include "genhankel/function.hpp"

#include <algorithm>
#include <cmath>

#include "genhankel/error.hpp"

namespace genhankel {

std::vector<double> Function1D::singular_points() const
{
    std::vector<double> pts = breakpoints;
    if (std::isfinite(support_lo)) {
        pts.push_back(support_lo);
    }
    if (std::isfinite(support_hi)) {
        pts.push_back(support_hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

Function1D constant_function(Complex c)
{
    Function1D f;
    f.eval = [c](double) { return c; };
    f.derivative1 = [](double) { return Complex{}; };
    f.derivative2 = [](double) { return Complex{}; };
    return f;
}

Function1D make_function(ComplexFn eval, double support_lo, double support_hi, std::vector<double> breakpoints)
{
    if (!(support_lo <= support_hi)) {
        throw DomainError("make_function: empty support");
    }
    Function1D f;
    f.eval = std::move(eval);
    f.support_lo = support_lo;
    f.support_hi = support_hi;
    f.breakpoints = std::move(breakpoints);
    return f;
}

Function1D polynomial_bump(double center, double radius, int power, double height)
{
    if (!(radius > 0.0) || power < 3) {
        throw DomainError("polynomial_bump: radius > 0 and power >= 3 required");
    }
    Function1D f;
    f.support_lo = center - radius;
    f.support_hi = center + radius;
    const double k = power;
    f.eval = [=](double x) {
        const double c = (x - center) / radius;
        const double g = 1.0 - c * c;
        return Complex(g > 0.0 ? height * std::pow(g, k) : 0.0);
    };
    f.derivative1 = [=](double x) {
        const double c = (x - center) / radius;
        const double g = 1.0 - c * c;
        if (g <= 0.0) {
            return Complex{};
        }
        return Complex(height * k * std::pow(g, k - 1.0) * (-2.0 * c / radius));
    };
    f.derivative2 = [=](double x) {
        const double c = (x - center) / radius;
        const double g = 1.0 - c * c;
        if (g <= 0.0) {
            return Complex{};
        }
        const double gp = -2.0 * c / radius;
        const double gpp = -2.0 / (radius * radius);
        return Complex(height * k * ((k - 1.0) * std::pow(g, k - 2.0) * gp * gp + std::pow(g, k - 1.0) * gpp));
    };
    return f;
}

Function1D gaussian_bump(double center, double width, double height)
{
    if (!(width > 0.0)) {
        throw DomainError("gaussian_bump: width must be positive");
    }
    // exp(-r^2) < 1e-19 for r > 6.62
    const double reach = 6.62 * width;
    Function1D f;
    f.support_lo = center - reach;
    f.support_hi = center + reach;
    const double w2 = width * width;
    f.eval = [=](double x) {
        const double d = x - center;
        return Complex(height * std::exp(-d * d / w2));
    };
    f.derivative1 = [=](double x) {
        const double d = x - center;
        return Complex(height * (-2.0 * d / w2) * std::exp(-d * d / w2));
    };
    f.derivative2 = [=](double x) {
        const double d = x - center;
        return Complex(height * (4.0 * d * d / (w2 * w2) - 2.0 / w2) * std::exp(-d * d / w2));
    };
    return f;
}

Function1D add(const Function1D& f, const Function1D& g)
{
    Function1D h;
    h.support_lo = std::min(f.support_lo, g.support_lo);
    h.support_hi = std::max(f.support_hi, g.support_hi);
    h.breakpoints = f.singular_points();
    for (double b : g.singular_points()) {
        h.breakpoints.push_back(b);
    }
    h.eval = [f, g](double x) { return f(x) + g(x); };
    if (f.derivative1 && g.derivative1 && f.derivative2 && g.derivative2) {
        const auto inside = [](const Function1D& u, double x) { return x >= u.support_lo && x <= u.support_hi; };
        h.derivative1 = [f, g, inside](double x) {
            return (inside(f, x) ? f.derivative1(x) : Complex{}) + (inside(g, x) ? g.derivative1(x) : Complex{});
        };
        h.derivative2 = [f, g, inside](double x) {
            return (inside(f, x) ? f.derivative2(x) : Complex{}) + (inside(g, x) ? g.derivative2(x) : Complex{});
        };
    }
    return h;
}

Function1D scale(const Function1D& f, Complex c)
{
    Function1D h = f;
    h.eval = [f, c](double x) { return c * f(x); };
    if (f.derivative1) {
        h.derivative1 = [f, c](double x) { return c * f.derivative1(x); };
    }
    if (f.derivative2) {
        h.derivative2 = [f, c](double x) { return c * f.derivative2(x); };
    }
    return h;
}

} // namespace genhankel

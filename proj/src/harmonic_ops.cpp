#include "genhankel/harmonic_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "genhankel/error.hpp"
#include "genhankel/kernels.hpp"
#include "genhankel/transform.hpp"

namespace genhankel {

namespace {

double root_n(double v, int n) { return n == 1 ? std::abs(v) : std::pow(std::abs(v), 1.0 / n); }

double power_n(double s, int n) { return n == 1 ? s : std::pow(s, n); }

double radial_extent(const Params& p, const Function1D& f)
{
    if (!f.compact()) {
        throw DomainError("harmonic_ops: the function must have compact support");
    }
    return root_n(std::max(std::abs(f.support_lo), std::abs(f.support_hi)), p.n);
}

// Points y where y -> tau_x f(y) may fail to be smooth: the support of
// nu_{x,y} has an edge on a singular point of f, or y hits 0 or +-x.
std::vector<double> translation_breaks(const Params& p, const Function1D& f, double x)
{
    const double a = root_n(x, p.n);
    std::vector<double> radii{0.0, a};
    for (double e : f.singular_points()) {
        const double r = root_n(e, p.n);
        radii.push_back(a + r);
        radii.push_back(std::abs(a - r));
    }
    std::vector<double> out;
    for (double r : radii) {
        const double y = power_n(r, p.n);
        out.push_back(y);
        out.push_back(-y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

QuadratureOptions tighter(const QuadratureOptions& opts)
{
    QuadratureOptions inner = opts;
    inner.tol = opts.tol / 10.0;
    return inner;
}

// Zeros of a real-valued f on its support, where |f| has kinks.
std::vector<double> sign_changes(const Function1D& f)
{
    constexpr int samples = 2000;
    std::vector<double> out;
    const double lo = f.support_lo;
    const double hi = f.support_hi;
    const auto value = [&](double x) { return f(x).real(); };
    double prev_x = lo;
    double prev = value(lo);
    for (int k = 1; k <= samples; ++k) {
        const double x = lo + (hi - lo) * k / samples;
        const double cur = value(x);
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
            double a = prev_x;
            double b = x;
            const bool a_neg = prev < 0.0;
            for (int it = 0; it < 60; ++it) {
                const double m = 0.5 * (a + b);
                if ((value(m) < 0.0) == a_neg) {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev = cur;
    }
    return out;
}

} // namespace

NormSpec NormSpec::of(double p)
{
    if (!(p >= 1.0)) {
        throw DomainError("NormSpec: p must lie in [1, inf]");
    }
    NormSpec s;
    s.p = p;
    if (p == 1.0) {
        s.conjugate = std::numeric_limits<double>::infinity();
    } else if (std::isinf(p)) {
        s.conjugate = 1.0;
    } else {
        s.conjugate = p / (p - 1.0);
    }
    return s;
}

Complex translate(const Params& p, const Function1D& f, double x, double y, const QuadratureOptions& opts)
{
    return nu_integrate(p, x, y, f, opts);
}

Function1D translated(const Params& p, const Function1D& f, double x, const QuadratureOptions& opts)
{
    const double reach = power_n(radial_extent(p, f) + root_n(x, p.n), p.n);
    Function1D out;
    out.support_lo = -reach;
    out.support_hi = reach;
    out.breakpoints = translation_breaks(p, f, x);
    out.eval = [p, f, x, opts](double y) { return nu_integrate(p, x, y, f, opts); };
    return out;
}

Complex convolve(const Params& p, const Function1D& f, const Function1D& g, double x, const QuadratureOptions& opts)
{
    const QuadratureOptions inner = tighter(opts);
    const double reflect = p.n % 2 == 0 ? 1.0 : -1.0;
    Function1D h = f;
    h.derivative1 = nullptr;
    h.derivative2 = nullptr;
    h.eval = [&](double y) {
        const Complex fy = f.eval(y);
        if (fy == Complex{}) {
            return Complex{};
        }
        return fy * nu_integrate(p, x, reflect * y, g, inner);
    };
    std::vector<double> breaks;
    for (double b : translation_breaks(p, g, x)) {
        breaks.push_back(reflect * b);
    }
    return integrate_mu(p, h, opts, breaks);
}

Function1D convolution(const Params& p, const Function1D& f, const Function1D& g, const QuadratureOptions& opts)
{
    const double reach = power_n(radial_extent(p, f) + radial_extent(p, g), p.n);
    Function1D out;
    out.support_lo = -reach;
    out.support_hi = reach;
    out.breakpoints.push_back(0.0);
    out.eval = [p, f, g, opts](double x) { return convolve(p, f, g, x, opts); };
    return out;
}

Complex operator_T_fd(const Params& p, const Function1D& f, double x, double step)
{
    if (x == 0.0) {
        throw DomainError("operator_T: x must be nonzero");
    }
    if (!(step > 0.0)) {
        throw DomainError("operator_T: step must be positive");
    }
    const Complex fp = f(x + step);
    const Complex f0 = f(x);
    const Complex fm = f(x - step);
    const Complex d1 = (fp - fm) / (2.0 * step);
    const Complex d2 = (fp - 2.0 * f0 + fm) / (step * step);
    const double scale = std::pow(std::abs(x), 2.0 * (1.0 - 1.0 / p.n));
    return scale * (d2 + (2.0 * p.kappa / x) * d1 - (p.kappa / (x * x)) * (f0 - f(-x)));
}

Complex operator_T(const Params& p, const Function1D& f, double x, std::optional<double> step)
{
    if (x == 0.0) {
        throw DomainError("operator_T: x must be nonzero");
    }
    if (!f.derivative1 || !f.derivative2 || step) {
        return operator_T_fd(p, f, x, step.value_or(1e-4 * std::max(1.0, std::abs(x))));
    }
    const bool inside = x >= f.support_lo && x <= f.support_hi;
    const Complex d1 = inside ? f.derivative1(x) : Complex{};
    const Complex d2 = inside ? f.derivative2(x) : Complex{};
    const double scale = std::pow(std::abs(x), 2.0 * (1.0 - 1.0 / p.n));
    return scale * (d2 + (2.0 * p.kappa / x) * d1 - (p.kappa / (x * x)) * (f(x) - f(-x)));
}

namespace {

struct ChebyshevPanel {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<Complex> values;

    [[nodiscard]] Complex operator()(double s) const
    {
        Complex num{};
        double den = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const double d = s - nodes[j];
            if (d == 0.0) {
                return values[j];
            }
            const double w = weights[j] / d;
            num += w * values[j];
            den += w;
        }
        return num / den;
    }
};

ChebyshevPanel chebyshev_panel(double lo, double hi, int degree, const std::function<Complex(double)>& f)
{
    ChebyshevPanel c{lo, hi, {}, {}, {}};
    const int m = degree + 1;
    for (int j = 0; j < m; ++j) {
        const double theta = (2.0 * j + 1.0) * std::numbers::pi / (2.0 * m);
        const double s = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(theta);
        c.nodes.push_back(s);
        c.weights.push_back((j % 2 == 0 ? 1.0 : -1.0) * std::sin(theta));
        c.values.push_back(f(s));
    }
    return c;
}

} // namespace

Function1D radial_interpolant(const Params& p, const Function1D& f, int pieces, int degree)
{
    if (!f.compact()) {
        throw DomainError("radial_interpolant: the function must have compact support");
    }
    if (pieces < 1 || degree < 1) {
        throw DomainError("radial_interpolant: pieces and degree must be positive");
    }
    const int n = p.n;
    std::vector<ChebyshevPanel> sides[2];
    const double reach[2] = {root_n(std::max(f.support_hi, 0.0), n), root_n(std::max(-f.support_lo, 0.0), n)};
    Function1D out;
    out.support_lo = f.support_lo;
    out.support_hi = f.support_hi;
    out.breakpoints.push_back(0.0);
    for (int side = 0; side < 2; ++side) {
        const double sign = side == 0 ? 1.0 : -1.0;
        for (int k = 0; k < pieces && reach[side] > 0.0; ++k) {
            const double lo = reach[side] * k / pieces;
            const double hi = reach[side] * (k + 1) / pieces;
            sides[side].push_back(chebyshev_panel(lo, hi, degree, [&](double s) { return f(sign * power_n(s, n)); }));
            if (k > 0) {
                out.breakpoints.push_back(sign * power_n(lo, n));
            }
        }
    }
    auto panels = std::make_shared<std::array<std::vector<ChebyshevPanel>, 2>>();
    (*panels)[0] = std::move(sides[0]);
    (*panels)[1] = std::move(sides[1]);
    out.eval = [panels, n](double x) {
        const std::vector<ChebyshevPanel>& side = (*panels)[x < 0.0 ? 1 : 0];
        if (side.empty()) {
            return Complex{};
        }
        const double s = root_n(x, n);
        const double width = side.front().hi - side.front().lo;
        const std::size_t k = std::min(side.size() - 1, static_cast<std::size_t>(s / width));
        return side[k](s);
    };
    return out;
}

double lp_norm(const Params& p, const Function1D& f, const NormSpec& spec, const QuadratureOptions& opts)
{
    if (!f.compact()) {
        throw DomainError("lp_norm: the function must have compact support");
    }
    if (std::isinf(spec.p)) {
        constexpr int samples = 4000;
        double best = 0.0;
        for (int k = 0; k <= samples; ++k) {
            const double x = f.support_lo + (f.support_hi - f.support_lo) * k / samples;
            best = std::max(best, std::abs(f(x)));
        }
        for (double x : f.breakpoints) {
            best = std::max(best, std::abs(f(x)));
        }
        return best;
    }
    Function1D h = f;
    h.derivative1 = nullptr;
    h.derivative2 = nullptr;
    const double q = spec.p;
    h.eval = [&f, q](double x) { return Complex(std::pow(std::abs(f.eval(x)), q), 0.0); };
    const double integral = integrate_mu(p, h, opts, sign_changes(f)).real();
    return std::pow(integral, 1.0 / q);
}

} // namespace genhankel

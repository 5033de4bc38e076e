#include "genhankel/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "genhankel/error.hpp"
#include "genhankel/specfun.hpp"

namespace genhankel {

namespace {

double root_n(double v, int n) { return n == 1 ? std::abs(v) : std::pow(std::abs(v), 1.0 / n); }

double power_n(double s, int n) { return n == 1 ? s : std::pow(s, n); }

Complex minus_i_pow(int n)
{
    switch (n % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, -1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, 1.0};
    }
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void append_uniform(std::vector<double>& breaks, double lo, double hi, double spacing)
{
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        return;
    }
    const int count = std::min(200, static_cast<int>((hi - lo) / spacing));
    for (int k = 1; k <= count; ++k) {
        breaks.push_back(lo + k * spacing);
    }
}

// int h dmu with optional uniform panel spacing in the s = |x|^{1/n} variable,
// used to keep oscillatory integrands at a bounded number of periods per panel.
Complex integrate_mu_impl(const Params& p, const Function1D& h, const QuadratureOptions& opts,
                          const std::vector<double>& extra_breaks, double s_spacing)
{
    if (!h.compact()) {
        throw DomainError("integrate_mu: the integrand must have compact support");
    }
    std::vector<double> points = h.singular_points();
    points.insert(points.end(), extra_breaks.begin(), extra_breaks.end());
    const double weight_exp = 2.0 * p.alpha + 1.0;

    Complex total{};
    for (const double branch : {1.0, -1.0}) {
        const double reach = branch > 0.0 ? std::max(h.support_hi, 0.0) : std::max(-h.support_lo, 0.0);
        if (reach <= 0.0) {
            continue;
        }
        const double s_max = root_n(reach, p.n);
        std::vector<double> breaks;
        for (double e : points) {
            if (e * branch > 0.0) {
                breaks.push_back(root_n(e, p.n));
            }
        }
        append_uniform(breaks, 0.0, s_max, s_spacing);
        const auto integrand = [&](double s) { return h(branch * power_n(s, p.n)); };
        total += integrate_weighted(integrand, 0.0, s_max, weight_exp, 0.0, breaks, {}, opts);
    }
    return total * (p.n / p.M);
}

double oscillation_spacing(double frequency)
{
    return frequency > 0.0 ? 3.0 * std::numbers::pi / frequency : 0.0;
}

} // namespace

Complex SampledFunction::operator()(double x) const
{
    if (x < support_lo || x > support_hi || grid.empty() || x < grid.front() || x > grid.back()) {
        return {};
    }
    const std::size_t size = grid.size();
    std::size_t i = static_cast<std::size_t>(std::upper_bound(grid.begin(), grid.end(), x) - grid.begin());
    i = i == 0 ? 0 : i - 1;
    // four nodes i-1 .. i+2, shifted to stay inside the grid
    std::size_t first = i == 0 ? 0 : i - 1;
    first = std::min(first, size - 4);
    Complex acc{};
    for (std::size_t a = first; a < first + 4; ++a) {
        double basis = 1.0;
        for (std::size_t b = first; b < first + 4; ++b) {
            if (b != a) {
                basis *= (x - grid[b]) / (grid[a] - grid[b]);
            }
        }
        acc += basis * values[a];
    }
    return acc;
}

SampledFunction make_sampled(std::vector<double> grid, std::vector<Complex> values, double support_lo,
                             double support_hi)
{
    if (grid.size() < 4) {
        throw DomainError("make_sampled: at least 4 grid points are required");
    }
    if (grid.size() != values.size()) {
        throw DomainError("make_sampled: grid and values differ in length");
    }
    if (!(support_lo <= 0.0 && 0.0 <= support_hi)) {
        throw DomainError("make_sampled: the support must contain 0");
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!std::isfinite(grid[k]) || (k > 0 && !(grid[k] > grid[k - 1]))) {
            throw DomainError("make_sampled: grid must be finite and strictly increasing");
        }
        if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag())) {
            throw DomainError("make_sampled: non-finite value at x = " + std::to_string(grid[k]));
        }
        if ((grid[k] < support_lo || grid[k] > support_hi) && values[k] != Complex{}) {
            throw DomainError("make_sampled: nonzero value outside the support at x = " + std::to_string(grid[k]));
        }
    }
    return {std::move(grid), std::move(values), support_lo, support_hi};
}

SampledFunction sample(const Function1D& f, std::vector<double> grid)
{
    if (grid.empty()) {
        throw DomainError("sample: empty grid");
    }
    std::vector<Complex> values;
    values.reserve(grid.size());
    for (double x : grid) {
        values.push_back(f(x));
    }
    const double lo = std::min(0.0, std::max(f.support_lo, grid.front()));
    const double hi = std::max(0.0, std::min(f.support_hi, grid.back()));
    return make_sampled(std::move(grid), std::move(values), lo, hi);
}

Function1D as_function(const SampledFunction& f)
{
    Function1D out;
    out.support_lo = std::max(f.support_lo, f.grid.front());
    out.support_hi = std::min(f.support_hi, f.grid.back());
    if (out.support_lo > out.support_hi) {
        out.support_lo = out.support_hi = 0.0;
    }
    for (double x : f.grid) {
        if (x > out.support_lo && x < out.support_hi) {
            out.breakpoints.push_back(x);
        }
    }
    out.eval = [f](double x) { return f(x); };
    return out;
}

Function1D even_part(const Function1D& f)
{
    Function1D out;
    const double reach = std::max(std::abs(f.support_lo), std::abs(f.support_hi));
    out.support_lo = -reach;
    out.support_hi = reach;
    for (double e : f.singular_points()) {
        out.breakpoints.push_back(e);
        out.breakpoints.push_back(-e);
    }
    out.eval = [f](double x) { return 0.5 * (f(x) + f(-x)); };
    return out;
}

Function1D odd_part(const Function1D& f)
{
    Function1D out = even_part(f);
    out.eval = [f](double x) { return 0.5 * (f(x) - f(-x)); };
    return out;
}

Complex b_kernel(const Params& p, double lambda, double x)
{
    const double prod = lambda * x;
    if (prod == 0.0) {
        return {1.0, 0.0};
    }
    const double r = p.n * root_n(prod, p.n);
    const double even = bessel_j_norm(p.alpha, r);
    const double odd_coeff = std::pow(0.5 * p.n, p.n) / pochhammer(p.alpha + 1.0, static_cast<unsigned>(p.n));
    const double odd = odd_coeff * prod * bessel_j_norm(p.alpha + p.n, r);
    return Complex(even, 0.0) + minus_i_pow(p.n) * odd;
}

double mu_weight(const Params& p, double x)
{
    const double e = 2.0 * p.kappa + 2.0 / p.n - 2.0;
    return std::pow(std::abs(x), e) / p.M;
}

Complex integrate_mu(const Params& p, const Function1D& h, const QuadratureOptions& opts,
                     std::vector<double> extra_breaks)
{
    return integrate_mu_impl(p, h, opts, extra_breaks, 0.0);
}

namespace {

Complex transform_F_with_spacing(const Params& p, const Function1D& f, double lambda, const QuadratureOptions& opts,
                                 double s_spacing)
{
    Function1D h = f;
    h.derivative1 = nullptr;
    h.derivative2 = nullptr;
    h.eval = [&f, &p, lambda](double x) { return f.eval(x) * b_kernel(p, lambda, x); };
    return integrate_mu_impl(p, h, opts, {}, s_spacing);
}

} // namespace

Complex transform_F(const Params& p, const Function1D& f, double lambda, const QuadratureOptions& opts)
{
    // B_lambda(+-s^n) oscillates in s with angular frequency n |lambda|^{1/n}
    return transform_F_with_spacing(p, f, lambda, opts, oscillation_spacing(p.n * root_n(lambda, p.n)));
}

SpectralSamples transform_F(const Params& p, const Function1D& f, const std::vector<double>& lambdas,
                            const QuadratureOptions& opts)
{
    // One panel layout for the whole batch (set by the largest |lambda|), so
    // the quadrature nodes coincide across lambdas and f is evaluated once per
    // node.  This matters when f is itself an expensive integral.
    double top = 0.0;
    for (double lambda : lambdas) {
        top = std::max(top, std::abs(lambda));
    }
    const double spacing = oscillation_spacing(p.n * root_n(top, p.n));
    auto cache = std::make_shared<std::unordered_map<double, Complex>>();
    Function1D memo = f;
    memo.eval = [&f, cache](double x) {
        if (auto it = cache->find(x); it != cache->end()) {
            return it->second;
        }
        const Complex v = f.eval(x);
        cache->emplace(x, v);
        return v;
    };
    SpectralSamples out{lambdas, {}};
    out.values.reserve(lambdas.size());
    for (double lambda : lambdas) {
        out.values.push_back(transform_F_with_spacing(p, memo, lambda, opts, spacing));
    }
    return out;
}

SpectralSamples transform_F(const Params& p, const SampledFunction& f, const std::vector<double>& lambdas,
                            const QuadratureOptions& opts)
{
    return transform_F(p, as_function(f), lambdas, opts);
}

SpectralSamples inverse_F(const Params& p, const SampledFunction& g, const std::vector<double>& xs,
                          const QuadratureOptions& opts)
{
    const Function1D gf = as_function(g);
    SpectralSamples out{xs, {}};
    out.values.reserve(xs.size());
    const double sign = p.n % 2 == 0 ? 1.0 : -1.0;
    for (double x : xs) {
        out.values.push_back(transform_F(p, gf, sign * x, opts));
    }
    return out;
}

double transform_H(double alpha, const Function1D& f, double lambda, const QuadratureOptions& opts)
{
    if (!(alpha > -0.5)) {
        throw DomainError("transform_H: alpha must exceed -1/2");
    }
    if (lambda < 0.0) {
        throw DomainError("transform_H: lambda must be nonnegative");
    }
    if (f.support_lo < 0.0 || !std::isfinite(f.support_hi)) {
        throw DomainError("transform_H: f must be supported in a bounded subset of [0, inf)");
    }
    const double reach = f.support_hi;
    if (reach <= 0.0) {
        return 0.0;
    }
    std::vector<double> breaks = f.singular_points();
    append_uniform(breaks, 0.0, reach, oscillation_spacing(lambda));
    const auto integrand = [&](double t) { return f(t).real() * bessel_j_norm(alpha, t * lambda); };
    const double integral = integrate_weighted(integrand, 0.0, reach, 2.0 * alpha + 1.0, 0.0, breaks, {}, opts);
    return integral / (std::pow(2.0, alpha - 1.0) * gamma_fn(alpha + 1.0));
}

double transform_H(double alpha, const SampledFunction& f, double lambda, const QuadratureOptions& opts)
{
    return transform_H(alpha, as_function(f), lambda, opts);
}

namespace {

// Breakpoints of t -> f(+-(t/n)^n) on [0, inf).
std::vector<double> radial_breaks(const Params& p, const Function1D& f)
{
    std::vector<double> out;
    for (double e : f.singular_points()) {
        if (e != 0.0) {
            out.push_back(p.n * root_n(e, p.n));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double radial_reach(const Params& p, const Function1D& f)
{
    if (!f.compact()) {
        throw DomainError("decomposition: f must have compact support");
    }
    return p.n * root_n(std::max(std::abs(f.support_lo), std::abs(f.support_hi)), p.n);
}

} // namespace

Function1D decomposition_even(const Params& p, const Function1D& f)
{
    Function1D g;
    g.support_lo = 0.0;
    g.support_hi = radial_reach(p, f);
    g.breakpoints = radial_breaks(p, f);
    const int n = p.n;
    g.eval = [f, n](double t) {
        const double x = power_n(t / n, n);
        return 0.5 * (f(x) + f(-x));
    };
    return g;
}

Function1D decomposition_odd(const Params& p, const Function1D& f, const QuadratureOptions& opts)
{
    Function1D j;
    j.support_lo = 0.0;
    j.support_hi = radial_reach(p, f);
    j.breakpoints = radial_breaks(p, f);
    const int n = p.n;
    const double reach = j.support_hi;
    const std::vector<double> breaks = j.breakpoints;
    QuadratureOptions inner = opts;
    inner.tol = opts.tol / 10.0;
    j.eval = [f, n, reach, breaks, inner](double s) {
        if (s >= reach) {
            return Complex{};
        }
        const auto integrand = [&](double t) {
            const double x = power_n(t / n, n);
            const Complex fo = 0.5 * (f(x) - f(-x));
            if (n == 1) {
                return fo;
            }
            // (t^2 - s^2)^{n-1} t^{1-n}, finite as t -> 0 with s = 0
            return fo * std::pow((t - s) * (t + s) / t, n - 1);
        };
        return integrate_weighted(integrand, s, reach, 0.0, 0.0, breaks, {}, inner);
    };
    return j;
}

Complex decompose_F_via_H(const Params& p, const Function1D& f, double lambda, const QuadratureOptions& opts)
{
    const double mu = root_n(lambda, p.n);
    const double scale = std::pow(static_cast<double>(p.n), p.alpha + 1.0);
    const double even = transform_H(p.alpha, decomposition_even(p, f), mu, opts) / (2.0 * scale);
    Complex odd{};
    if (lambda != 0.0) {
        const double h_odd = transform_H(p.alpha, decomposition_odd(p, f, opts), mu, opts);
        odd = minus_i_pow(p.n) * (lambda / (factorial(p.n - 1) * std::pow(2.0, p.n) * scale)) * h_odd;
    }
    return Complex(even, 0.0) + odd;
}

SampledFunction read_sampled_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw DomainError("read_sampled_csv: empty input");
    }
    std::vector<double> grid;
    std::vector<Complex> values;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::vector<double> cols;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t\r");
            const auto last = cell.find_last_not_of(" \t\r");
            std::size_t used = 0;
            try {
                cols.push_back(first == std::string::npos ? 0.0 : std::stod(cell.substr(first), &used));
            } catch (const std::exception&) {
                used = 0;
            }
            if (first == std::string::npos || used != last - first + 1) {
                throw DomainError("read_sampled_csv: bad number on line " + std::to_string(line_no));
            }
        }
        if (cols.size() != 2 && cols.size() != 3) {
            throw DomainError("read_sampled_csv: expected 2 or 3 columns on line " + std::to_string(line_no));
        }
        grid.push_back(cols[0]);
        values.emplace_back(cols[1], cols.size() == 3 ? cols[2] : 0.0);
    }
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (values[k] != Complex{}) {
            lo = std::min(lo, grid[k]);
            hi = std::max(hi, grid[k]);
        }
    }
    // extend to the neighbouring nodes so the interpolant decays to zero there
    const auto it_lo = std::lower_bound(grid.begin(), grid.end(), lo);
    if (it_lo != grid.begin() && lo < 0.0) {
        lo = *(it_lo - 1);
    }
    const auto it_hi = std::upper_bound(grid.begin(), grid.end(), hi);
    if (it_hi != grid.end() && hi > 0.0) {
        hi = *it_hi;
    }
    return make_sampled(std::move(grid), std::move(values), lo, hi);
}

SampledFunction read_sampled_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("read_sampled_csv: cannot open " + path);
    }
    return read_sampled_csv(in);
}

void write_spectral_csv(std::ostream& out, const SpectralSamples& s, const std::string& first_column)
{
    out << first_column << ",re,im\n";
    char buf[128];
    for (std::size_t k = 0; k < s.lambdas.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.lambdas[k], s.values[k].real(), s.values[k].imag());
        out << buf;
    }
}

} // namespace genhankel

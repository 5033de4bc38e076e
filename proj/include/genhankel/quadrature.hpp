#ifndef GENHANKEL_QUADRATURE_HPP
#define GENHANKEL_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "genhankel/error.hpp"

namespace genhankel {

enum class RuleFamily { Legendre, Jacobi };

/// Weight function of a Gauss rule on (-1, 1): (1-s)^a (1+s)^b.
/// Legendre is the a = b = 0 member; a symmetric Jacobi rule has a == b.
struct RuleKind {
    RuleFamily family = RuleFamily::Legendre;
    double a = 0.0;
    double b = 0.0;

    static RuleKind legendre() { return {}; }
    static RuleKind jacobi(double exponent) { return {RuleFamily::Jacobi, exponent, exponent}; }
    static RuleKind jacobi(double a, double b) { return {RuleFamily::Jacobi, a, b}; }

    friend bool operator==(const RuleKind&, const RuleKind&) = default;
};

struct QuadratureRule {
    RuleKind kind;
    int order = 0;
    std::vector<double> nodes;   // strictly increasing, inside (-1, 1)
    std::vector<double> weights; // strictly positive
};

/// Integral of the rule's weight over (-1, 1):
/// 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2).
[[nodiscard]] double zeroth_moment(const RuleKind& kind);

/// Gauss rule exact for polynomials of degree <= 2*order-1 against the
/// weight of `kind`.  Nodes are seeded by the Golub-Welsch eigenvalues and
/// polished by Newton on the Jacobi polynomial; weights use the closed form.
/// Throws DomainError for order < 1 or exponents <= -1, AccuracyError if
/// Newton fails to converge.
[[nodiscard]] QuadratureRule gauss_rule(int order, RuleKind kind);

/// Memoized gauss_rule; thread-safe, returned rules are immutable.
[[nodiscard]] std::shared_ptr<const QuadratureRule> cached_rule(int order, RuleKind kind);

struct QuadratureOptions {
    int initial_order = 64; // per panel when a single panel covers the interval
    int max_order = 512;
    double tol = 1e-12;     // relative agreement between successive orders
    double abs_tol = 1e-15; // absolute floor for panels whose integral is ~0
};

/// Geometric panel refinement toward one end of the interval, used when the
/// integrand has a singularity at distance `scale` beyond that end.
struct Grading {
    enum class Side { None, Left, Right };
    Side side = Side::None;
    double scale = 0.0;
};

namespace detail {

std::vector<double> panel_edges(double lo, double hi, std::span<const double> breaks, const Grading& grading);

/// Splits interior panels that sit closer to a weighted endpoint than their
/// own width, geometrically toward that endpoint, so the folded endpoint
/// weight stays well resolved.
void refine_near_ends(std::vector<double>& edges, bool grade_lo, bool grade_hi);

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

} // namespace detail

/// Integral over [lo, hi] of f(t) (t-lo)^{w_lo} (hi-t)^{w_hi}.
///
/// The interval is split at `breaks` (points where f is not smooth) and at the
/// grading points; end panels absorb their endpoint power with a Jacobi rule,
/// interior panels use Gauss-Legendre with the weight folded into f.  Each
/// panel starts at opts.initial_order (a quarter of it when there are several
/// panels) and is doubled until two successive orders agree; beyond
/// opts.max_order an AccuracyError is thrown.  Panels outside
/// [active_lo, active_hi] are skipped (the caller asserts f vanishes there).
template <class F>
auto integrate_weighted(F&& f, double lo, double hi, double w_lo, double w_hi, std::span<const double> breaks,
                        const Grading& grading, const QuadratureOptions& opts,
                        double active_lo = -std::numeric_limits<double>::infinity(),
                        double active_hi = std::numeric_limits<double>::infinity())
{
    using Value = decltype(f(lo));
    std::vector<double> edges = detail::panel_edges(lo, hi, breaks, grading);
    detail::refine_near_ends(edges, w_lo != std::round(w_lo), w_hi != std::round(w_hi));
    const std::size_t panels = edges.size() - 1;
    const int start_order = panels == 1 ? opts.initial_order : std::max(8, opts.initial_order / 4);

    // Panel estimate at `order`; `mass` receives the sum of |terms|, the
    // scale of the roundoff in that estimate.
    auto apply = [&](std::size_t i, int order, double& mass) {
        const double p = edges[i];
        const double q = edges[i + 1];
        const bool at_lo = (i == 0) && w_lo != 0.0;
        const bool at_hi = (i + 1 == panels) && w_hi != 0.0;
        const RuleKind kind = (at_lo || at_hi) ? RuleKind::jacobi(at_hi ? w_hi : 0.0, at_lo ? w_lo : 0.0)
                                               : RuleKind::legendre();
        const double half = 0.5 * (q - p);
        double scale = half;
        if (at_lo) {
            scale *= std::pow(half, w_lo);
        }
        if (at_hi) {
            scale *= std::pow(half, w_hi);
        }
        const auto rule = cached_rule(order, kind);
        Value acc{};
        mass = 0.0;
        for (std::size_t k = 0; k < rule->nodes.size(); ++k) {
            const double s = rule->nodes[k];
            const double t = p + half * (s + 1.0);
            double w = rule->weights[k];
            // Distances to the ends from the panel edges, not from t: t
            // rounds to a few ulps of 1 on panels graded toward an end.
            if (!at_lo && w_lo != 0.0) {
                w *= std::pow((p - lo) + half * (s + 1.0), w_lo);
            }
            if (!at_hi && w_hi != 0.0) {
                w *= std::pow((hi - q) + half * (1.0 - s), w_hi);
            }
            const Value term = w * f(t);
            acc += term;
            mass += detail::magnitude(term);
        }
        mass *= std::abs(scale);
        return scale * acc;
    };

    // A coarse pass sizes the whole integral, so panels that are small only
    // because the integrand cancels there are not held to a relative
    // tolerance they cannot meet.
    std::vector<Value> coarse(panels);
    double overall = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        if (edges[i + 1] <= active_lo || edges[i] >= active_hi) {
            continue;
        }
        double mass = 0.0;
        coarse[i] = apply(i, start_order, mass);
        overall += detail::magnitude(coarse[i]);
    }

    Value total{};
    for (std::size_t i = 0; i < panels; ++i) {
        if (edges[i + 1] <= active_lo || edges[i] >= active_hi) {
            continue;
        }
        int order = start_order;
        Value estimate = coarse[i];
        double last_diff = std::numeric_limits<double>::infinity();
        int stalled = 0;
        for (;;) {
            if (2 * order > opts.max_order) {
                throw AccuracyError("integrate_weighted: no convergence on panel [" + std::to_string(edges[i]) + ", " +
                                    std::to_string(edges[i + 1]) + "] up to order " + std::to_string(order));
            }
            order *= 2;
            double mass = 0.0;
            const Value fine = apply(i, order, mass);
            const double diff = detail::magnitude(fine - estimate);
            estimate = fine;
            const double floor = 64.0 * std::numeric_limits<double>::epsilon() * mass;
            const double share = opts.tol * overall / static_cast<double>(panels);
            if (diff <= std::max({opts.tol * detail::magnitude(fine), opts.abs_tol, floor, share})) {
                break;
            }
            // A difference that stops shrinking over two doublings is noise in
            // the integrand itself; accept it once it is small.
            stalled = diff >= 0.5 * last_diff ? stalled + 1 : 0;
            last_diff = diff;
            if (stalled >= 2 && diff <= 1e4 * opts.tol * detail::magnitude(fine)) {
                break;
            }
        }
        total += estimate;
    }
    return total;
}

/// Integral over (-1, 1) of f(t) (1-t^2)^beta, the Gegenbauer weight.
template <class F>
auto integrate_gegenbauer_weight(F&& f, double beta, std::span<const double> breaks, const Grading& grading,
                                 const QuadratureOptions& opts,
                                 double active_lo = -std::numeric_limits<double>::infinity(),
                                 double active_hi = std::numeric_limits<double>::infinity())
{
    return integrate_weighted(std::forward<F>(f), -1.0, 1.0, beta, beta, breaks, grading, opts, active_lo,
                              active_hi);
}

} // namespace genhankel

#endif

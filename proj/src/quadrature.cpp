#include "genhankel/quadrature.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include <Eigen/Dense>

namespace genhankel {

namespace {

struct JacobiValue {
    double p;    // P_n^{(a,b)}(x)
    double prev; // P_{n-1}^{(a,b)}(x)
};

JacobiValue jacobi_eval(int n, double a, double b, double x)
{
    double prev = 1.0;
    double cur = 0.5 * ((a + b + 2.0) * x + (a - b));
    if (n == 0) {
        return {1.0, 0.0};
    }
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

// P_n' from (2n+a+b)(1-x^2) P_n' = n[(a-b) - (2n+a+b) x] P_n + 2(n+a)(n+b) P_{n-1}
double jacobi_derivative(int n, double a, double b, double x, const JacobiValue& v)
{
    const double s = 2.0 * n + a + b;
    return (n * ((a - b) - s * x) * v.p + 2.0 * (n + a) * (n + b) * v.prev) / (s * (1.0 - x * x));
}

std::vector<double> golub_welsch_nodes(int n, double a, double b)
{
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        diag(k) = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        if (k == 1) {
            // (k+a+b)/(s-1) cancels; the general form is 0/0 when a+b = -1
            sub(0) = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0)));
            continue;
        }
        const double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
        const double den = s * s * (s + 1.0) * (s - 1.0);
        sub(k - 1) = std::sqrt(num / den);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + n};
}

} // namespace

double zeroth_moment(const RuleKind& kind)
{
    const double a = kind.a;
    const double b = kind.b;
    return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                    std::lgamma(a + b + 2.0));
}

QuadratureRule gauss_rule(int order, RuleKind kind)
{
    if (order < 1) {
        throw DomainError("gauss_rule: order must be >= 1");
    }
    if (kind.family == RuleFamily::Legendre) {
        kind.a = 0.0;
        kind.b = 0.0;
    }
    const double a = kind.a;
    const double b = kind.b;
    if (!(a > -1.0) || !(b > -1.0)) {
        throw DomainError("gauss_rule: Jacobi exponents must exceed -1");
    }

    std::vector<double> nodes = golub_welsch_nodes(order, a, b);
    std::vector<double> weights(order);
    const double log_const = (a + b + 1.0) * std::log(2.0) + std::lgamma(order + a + 1.0) +
                             std::lgamma(order + b + 1.0) - std::lgamma(order + a + b + 1.0) -
                             std::lgamma(order + 1.0);
    for (int i = 0; i < order; ++i) {
        double x = nodes[i];
        // Stop at the roundoff floor: a tiny step, or a step that no longer
        // shrinks once it is already small.
        bool converged = false;
        double last = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 50; ++it) {
            const JacobiValue v = jacobi_eval(order, a, b, x);
            const double step = v.p / jacobi_derivative(order, a, b, x, v);
            if (std::abs(step) >= last && last < 1e-12) {
                converged = true;
                break;
            }
            x -= step;
            last = std::abs(step);
            if (last <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x), 1e-3)) {
                converged = true;
                break;
            }
        }
        if (!converged || !(x > -1.0 && x < 1.0)) {
            throw AccuracyError("gauss_rule: Newton polish failed for order " + std::to_string(order) +
                                ", exponents (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
        const JacobiValue v = jacobi_eval(order, a, b, x);
        const double dp = jacobi_derivative(order, a, b, x, v);
        nodes[i] = x;
        weights[i] = std::exp(log_const) / ((1.0 - x * x) * dp * dp);
    }

    // The closed-form constant loses ~1e-13 through lgamma at large orders;
    // it is common to all weights, so fix it against the zeroth moment.
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double fix = zeroth_moment(kind) / total;
    for (double& w : weights) {
        w *= fix;
    }

    std::vector<std::size_t> idx(order);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return nodes[l] < nodes[r]; });
    QuadratureRule rule;
    rule.kind = kind;
    rule.order = order;
    rule.nodes.reserve(order);
    rule.weights.reserve(order);
    for (std::size_t i : idx) {
        rule.nodes.push_back(nodes[i]);
        rule.weights.push_back(weights[i]);
    }
    for (int i = 1; i < order; ++i) {
        if (!(rule.nodes[i] > rule.nodes[i - 1])) {
            throw AccuracyError("gauss_rule: coincident nodes for order " + std::to_string(order));
        }
    }
    return rule;
}

std::shared_ptr<const QuadratureRule> cached_rule(int order, RuleKind kind)
{
    using Key = std::tuple<int, double, double, int>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;

    if (kind.family == RuleFamily::Legendre || (kind.a == 0.0 && kind.b == 0.0)) {
        kind = RuleKind::legendre();
    }
    const Key key{static_cast<int>(kind.family), kind.a, kind.b, order};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    auto rule = std::make_shared<const QuadratureRule>(gauss_rule(order, kind));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(rule)).first->second;
}

namespace detail {

std::vector<double> panel_edges(double lo, double hi, std::span<const double> breaks, const Grading& grading)
{
    const double width = hi - lo;
    std::vector<double> edges{lo, hi};
    for (double b : breaks) {
        if (b > lo && b < hi) {
            edges.push_back(b);
        }
    }
    if (grading.side != Grading::Side::None) {
        const double floor = grading.scale > 0.0 ? std::max(grading.scale, 1e-250 * width) : 1e-30 * width;
        for (double w = 0.25 * width; w >= floor; w *= 0.25) {
            edges.push_back(grading.side == Grading::Side::Right ? hi - w : lo + w);
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<double> out;
    out.reserve(edges.size());
    // Edges merge when closer than roundoff at their distance from the
    // nearer end, so graded edges and breaks near that end survive.
    for (double e : edges) {
        const double merge = 1e-14 * std::min(width, std::max(std::min(e - lo, hi - e), 1e-300));
        if (out.empty() || e - out.back() > merge) {
            out.push_back(e);
        }
    }
    if (out.back() != hi) {
        out.back() = hi;
    }
    return out;
}

void refine_near_ends(std::vector<double>& edges, bool grade_lo, bool grade_hi)
{
    if (edges.size() < 3 || (!grade_lo && !grade_hi)) {
        return;
    }
    const double lo = edges.front();
    const double hi = edges.back();
    // New edges can create new near-end panels, so repeat until stable.
    for (int pass = 0; pass < 8; ++pass) {
        std::vector<double> extra;
        for (std::size_t i = 1; i < edges.size(); ++i) {
            const double p = edges[i - 1];
            const double q = edges[i];
            if (grade_hi && q != hi && 2.0 * (hi - q) < q - p) {
                for (double gap = 2.0 * (hi - q); hi - gap > p; gap *= 2.0) {
                    extra.push_back(hi - gap);
                }
            }
            if (grade_lo && p != lo && 2.0 * (p - lo) < q - p) {
                for (double gap = 2.0 * (p - lo); lo + gap < q; gap *= 2.0) {
                    extra.push_back(lo + gap);
                }
            }
        }
        if (extra.empty()) {
            return;
        }
        edges.insert(edges.end(), extra.begin(), extra.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
}

} // namespace detail

} // namespace genhankel

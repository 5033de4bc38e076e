#include "genhankel/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "genhankel/error.hpp"
#include "genhankel/specfun.hpp"

namespace genhankel {

bool Params::strong_regime() const noexcept
{
    return kappa > static_cast<double>(n - 1) / n;
}

double sonine_constant(double alpha)
{
    if (!(alpha > -0.5)) {
        throw DomainError("sonine_constant: alpha must exceed -1/2");
    }
    // Gamma ratio through lgamma keeps large alpha finite.
    return std::exp(std::lgamma(alpha + 1.0) - std::lgamma(alpha + 0.5)) / std::sqrt(std::numbers::pi);
}

Params make_params(int n, double kappa)
{
    if (n < 1) {
        throw DomainError("make_params: n must be a positive integer");
    }
    const double bound = static_cast<double>(n - 1) / (2.0 * n);
    if (!(kappa > bound) || !std::isfinite(kappa)) {
        throw DomainError("make_params: kappa must exceed (n-1)/(2n) = " + std::to_string(bound));
    }
    Params p;
    p.n = n;
    p.kappa = kappa;
    p.alpha = kappa * n - 0.5 * n;
    p.M = 2.0 * std::pow(2.0 / n, p.alpha) * gamma_fn(p.alpha + 1.0);
    p.C_alpha = sonine_constant(p.alpha);
    return p;
}

} // namespace genhankel

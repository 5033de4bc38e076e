#ifndef GENHANKEL_HARMONIC_OPS_HPP
#define GENHANKEL_HARMONIC_OPS_HPP

#include <optional>

#include "genhankel/function.hpp"
#include "genhankel/params.hpp"
#include "genhankel/quadrature.hpp"

namespace genhankel {

/// Exponent p in [1, inf] with its conjugate p' (1/p + 1/p' = 1).
struct NormSpec {
    double p = 1.0;
    double conjugate = std::numeric_limits<double>::infinity();

    /// Throws DomainError unless p is in [1, inf].
    static NormSpec of(double p);
};

/// tau_x f(y) = int f d nu_{x,y}.
[[nodiscard]] Complex translate(const Params& p, const Function1D& f, double x, double y,
                                const QuadratureOptions& opts = {});

/// y -> tau_x f(y) as a Function1D.  For f supported in |.|^{1/n} <= rho the
/// result is supported in |.|^{1/n} <= rho + |x|^{1/n}.
[[nodiscard]] Function1D translated(const Params& p, const Function1D& f, double x,
                                    const QuadratureOptions& opts = {});

/// (f * g)(x) = int f(y) tau_x g((-1)^n y) d mu(y).  The inner translation runs
/// at a tenth of the outer tolerance.
[[nodiscard]] Complex convolve(const Params& p, const Function1D& f, const Function1D& g, double x,
                               const QuadratureOptions& opts = {});

/// x -> (f * g)(x) as a Function1D supported in |.|^{1/n} <= rho_f + rho_g.
[[nodiscard]] Function1D convolution(const Params& p, const Function1D& f, const Function1D& g,
                                     const QuadratureOptions& opts = {});

/// T f(x) = |x|^{2(1-1/n)} { f''(x) + (2 kappa/x) f'(x) - (kappa/x^2)(f(x) - f(-x)) }.
///
/// Uses f's analytic derivatives when present, otherwise central differences
/// with step `step` (default 1e-4 max(1, |x|)).  DomainError at x = 0.
[[nodiscard]] Complex operator_T(const Params& p, const Function1D& f, double x,
                                 std::optional<double> step = std::nullopt);

/// Always differentiates numerically, even when f carries derivatives.
[[nodiscard]] Complex operator_T_fd(const Params& p, const Function1D& f, double x, double step);

/// Piecewise Chebyshev interpolant of f in s = |x|^{1/n} on each half-line of
/// f's support: `pieces` equal s-panels per side with `degree`+1 first-kind
/// Chebyshev nodes each.  Used to reuse an expensive f (a convolution) across
/// many evaluations.
[[nodiscard]] Function1D radial_interpolant(const Params& p, const Function1D& f, int pieces = 4, int degree = 24);

/// (int |f|^p d mu)^{1/p}; for p = inf the maximum of |f| on a 4001-point grid
/// over the support plus the breakpoints.
[[nodiscard]] double lp_norm(const Params& p, const Function1D& f, const NormSpec& spec,
                             const QuadratureOptions& opts = {});

} // namespace genhankel

#endif

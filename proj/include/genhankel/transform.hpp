#ifndef GENHANKEL_TRANSFORM_HPP
#define GENHANKEL_TRANSFORM_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "genhankel/function.hpp"
#include "genhankel/params.hpp"
#include "genhankel/quadrature.hpp"

namespace genhankel {

/// Compactly supported function known on a grid, interpolated by local
/// four-point cubics.  Values vanish outside [support_lo, support_hi], which
/// always contains 0.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<Complex> values;
    double support_lo = 0.0;
    double support_hi = 0.0;

    /// Interpolated value; zero outside the grid and outside the support.
    [[nodiscard]] Complex operator()(double x) const;
};

/// Validates and packages samples.  Throws DomainError if the grid is not
/// strictly increasing, has fewer than 4 points, sizes differ, a value is not
/// finite, the support does not contain 0, or a nonzero value lies outside it.
[[nodiscard]] SampledFunction make_sampled(std::vector<double> grid, std::vector<Complex> values, double support_lo,
                                           double support_hi);

/// Samples f on `grid`, taking f's support clipped to the grid (widened to contain 0).
[[nodiscard]] SampledFunction sample(const Function1D& f, std::vector<double> grid);

/// The interpolant as a Function1D whose breakpoints are the grid nodes.
[[nodiscard]] Function1D as_function(const SampledFunction& f);

[[nodiscard]] Function1D even_part(const Function1D& f);
[[nodiscard]] Function1D odd_part(const Function1D& f);

struct SpectralSamples {
    std::vector<double> lambdas;
    std::vector<Complex> values;
};

/// Generalized Hankel kernel
///   B_lambda(x) = j_a(n|lambda x|^{1/n}) + (-i)^n (n/2)^n / (a+1)_n * lambda x * j_{a+n}(n|lambda x|^{1/n}),
/// a = kappa n - n/2.
[[nodiscard]] Complex b_kernel(const Params& p, double lambda, double x);

/// Density of mu_{kappa,n}: |x|^{2 kappa + 2/n - 2} / M.
[[nodiscard]] double mu_weight(const Params& p, double x);

/// int h d mu over h's (compact) support.  Each half-line is mapped by
/// x = +-s^n, turning the weight into n s^{2a+1}/M; `extra_breaks` are added
/// in the x variable.
[[nodiscard]] Complex integrate_mu(const Params& p, const Function1D& h, const QuadratureOptions& opts = {},
                                   std::vector<double> extra_breaks = {});

/// F f(lambda) = int f B_lambda d mu for a compactly supported f.
[[nodiscard]] Complex transform_F(const Params& p, const Function1D& f, double lambda,
                                  const QuadratureOptions& opts = {});
[[nodiscard]] SpectralSamples transform_F(const Params& p, const Function1D& f, const std::vector<double>& lambdas,
                                          const QuadratureOptions& opts = {});
[[nodiscard]] SpectralSamples transform_F(const Params& p, const SampledFunction& f,
                                          const std::vector<double>& lambdas, const QuadratureOptions& opts = {});

/// Inverse transform: F g((-1)^n x) at each x (reported in the `lambdas` slot).
[[nodiscard]] SpectralSamples inverse_F(const Params& p, const SampledFunction& g, const std::vector<double>& xs,
                                        const QuadratureOptions& opts = {});

/// Classical Hankel transform
///   H_a f(lambda) = [2^{a-1} Gamma(a+1)]^{-1} int_0^inf f(t) j_a(t lambda) t^{2a+1} dt
/// for f supported in [0, R]; lambda >= 0.
[[nodiscard]] double transform_H(double alpha, const Function1D& f, double lambda, const QuadratureOptions& opts = {});
[[nodiscard]] double transform_H(double alpha, const SampledFunction& f, double lambda,
                                 const QuadratureOptions& opts = {});

/// The two auxiliary functions of the even/odd decomposition:
///   g_n(t) = f_e((t/n)^n),
///   J_n(f_o)(s) = int_s^inf f_o((t/n)^n) (t^2 - s^2)^{n-1} t^{1-n} dt.
/// Both are supported in [0, n R^{1/n}] with R = max(|support_lo|, |support_hi|).
[[nodiscard]] Function1D decomposition_even(const Params& p, const Function1D& f);
[[nodiscard]] Function1D decomposition_odd(const Params& p, const Function1D& f, const QuadratureOptions& opts = {});

/// F f(lambda) through classical Hankel transforms:
///   H_a(g_n)(|lambda|^{1/n}) / (2 n^{a+1})
///   + (-i)^n lambda / ((n-1)! 2^n n^{a+1}) H_a(J_n f_o)(|lambda|^{1/n}).
[[nodiscard]] Complex decompose_F_via_H(const Params& p, const Function1D& f, double lambda,
                                        const QuadratureOptions& opts = {});

/// CSV with a header row and columns x,re[,im].
[[nodiscard]] SampledFunction read_sampled_csv(std::istream& in);
[[nodiscard]] SampledFunction read_sampled_csv(const std::string& path);
void write_spectral_csv(std::ostream& out, const SpectralSamples& s, const std::string& first_column = "lambda");

} // namespace genhankel

#endif

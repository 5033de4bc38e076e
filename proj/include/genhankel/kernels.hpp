#ifndef GENHANKEL_KERNELS_HPP
#define GENHANKEL_KERNELS_HPP

#include <utility>

#include "genhankel/function.hpp"
#include "genhankel/params.hpp"
#include "genhankel/quadrature.hpp"

namespace genhankel {

/// Bessel arguments u, v, angle phi and the output radius w = delta(u, v, phi).
struct GeomArgs {
    double u = 0.0;
    double v = 0.0;
    double phi = 0.0;
    double w = 0.0;
    double delta = 0.0;
};

[[nodiscard]] GeomArgs geom_args(double u, double v, double phi);

/// Point (x, y, z) of the product-formula kernel with spectral parameter lambda.
struct TriplePoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double lambda = 0.0;
};

/// delta(u, v, phi) = sqrt(u^2 + v^2 - 2 u v cos phi).
[[nodiscard]] double delta(double u, double v, double phi);

/// Bessel product kernel
///   K_B(u,v,w) = 2^{1-2a} C_a {[(u+v)^2-w^2][w^2-(u-v)^2]}^{a-1/2} / (uvw)^{2a}
/// for |u-v| <= w <= u+v, zero elsewhere.  Homogeneous of degree -2a-2.
[[nodiscard]] double k_bessel(double alpha, double u, double v, double w);

/// sigma^n_{x,y,z} = (|x|^{2/n} + |y|^{2/n} - |z|^{2/n}) / (2 |xy|^{1/n}).
[[nodiscard]] double sigma(double x, double y, double z, int n);

/// xi(x,y,z) = sgn(xy) n!/(2 alpha)_n C_n^alpha(sigma^n_{x,y,z}), |xi| <= 1.
/// sigma within 1e-12 of [-1, 1] is clamped; further out is a DomainError.
[[nodiscard]] double xi(const Params& p, double x, double y, double z);

/// psi_n(u,v,phi) = n!/(2a)_n delta^n C_n^a((u - v cos phi)/delta), evaluated as
/// the polynomial in (u - v cos phi) and delta^2 so delta = 0 is harmless.
[[nodiscard]] double psi(int n, double alpha, double u, double v, double phi);

/// True when |z|^{1/n} lies strictly between ||x|^{1/n} - |y|^{1/n}| and |x|^{1/n} + |y|^{1/n}.
[[nodiscard]] bool in_support(const Params& p, double x, double y, double z);

/// Product-formula kernel
///   K(x,y,z) = M/(2n) K_B^alpha(|x|^{1/n},|y|^{1/n},|z|^{1/n})
///              {1 + (-1)^n xi(x,y,z) + xi(z,x,y) + xi(y,z,x)},
/// zero for z = 0 and outside I_{x,y}.  x, y must be nonzero.
[[nodiscard]] double kernel_K(const Params& p, double x, double y, double z);

enum class MeasureCase { KernelDensity, PointMassAtX, PointMassAtY };

/// The signed measure nu_{x,y} with B_lambda(x) B_lambda(y) = int B_lambda d nu_{x,y}.
///
/// Integrals against the density use |z| = delta(|x|^{1/n}, |y|^{1/n}, phi)^n on
/// each sign branch and u = 1 - cos phi, which turns K d mu into
///   (C_alpha / 2) {1 + (-1)^n xi + xi + xi} (u (2 - u))^{alpha - 1/2} du.
class MeasureNu {
public:
    MeasureNu(const Params& p, double x, double y);

    [[nodiscard]] MeasureCase kind() const noexcept { return kind_; }
    [[nodiscard]] const Params& params() const noexcept { return p_; }
    [[nodiscard]] double x() const noexcept { return x_; }
    [[nodiscard]] double y() const noexcept { return y_; }

    /// Density against mu_{kappa,n}; zero in the point-mass cases.
    [[nodiscard]] double density(double z) const;

    /// (inner, outer) bounds of |z|^{1/n} on the support.
    [[nodiscard]] std::pair<double, double> support_radii() const;

    [[nodiscard]] Complex integrate(const Function1D& f, const QuadratureOptions& opts = {}) const;
    [[nodiscard]] double total_variation(const QuadratureOptions& opts = {}) const;

private:
    Params p_;
    double x_;
    double y_;
    MeasureCase kind_;
};

/// int f d nu_{x,y}: f(x) when y = 0, f(y) when x = 0, quadrature otherwise.
[[nodiscard]] Complex nu_integrate(const Params& p, double x, double y, const Function1D& f,
                                   const QuadratureOptions& opts = {});

/// int |d nu_{x,y}|; 1 for the point masses.
[[nodiscard]] double nu_total_variation(const Params& p, double x, double y, const QuadratureOptions& opts = {});

/// Both sides of an identity with absolute and relative discrepancy; the
/// relative error divides by max(|lhs|, |rhs|, 1e-300).
struct ResidualRecord {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

[[nodiscard]] ResidualRecord make_residual(double lhs, double rhs);

/// u^n j_{a+n}(u) j_a(v) against C_a int_0^pi j_{a+n}(delta) psi_n(u,v,phi) sin^{2a} phi dphi.
/// n = 0 is the Sonine product formula.
[[nodiscard]] ResidualRecord check_th0(double alpha, int n, double u, double v, const QuadratureOptions& opts = {});

/// (uv)^n/4^n j_{a+n}(u) j_{a+n}(v) against
/// n!((a+1)_n)^2/(2a)_n int_0^inf j_a(w) K_B^a(u,v,w) C_n^a((u^2+v^2-w^2)/(2uv)) w^{2a+1} dw,
/// the w-integral taken in the angle variable.
[[nodiscard]] ResidualRecord check_key1(double alpha, int n, double u, double v, const QuadratureOptions& opts = {});

/// Sonine's integral: j_a(x) against
///   2 Gamma(a+1)/(Gamma(b+1) Gamma(a-b)) int_0^1 j_b(xt) t^{2b+1} (1-t^2)^{a-b-1} dt,
/// -1/2 < b < a.  Evaluated after s = t^2 with a Gauss-Jacobi rule on [0, 1].
[[nodiscard]] ResidualRecord check_sonine_integral(double alpha, double beta, double x,
                                                   const QuadratureOptions& opts = {});

/// int_0^inf K_B^a(u,v,w) w^{2a+1} dw, which equals 1.  Evaluated from
/// k_bessel itself in t = cos(phi), where w dw = u v dt and the bracket is
/// 4u^2v^2(1-t^2).
[[nodiscard]] double bessel_kernel_mass(double alpha, double u, double v, const QuadratureOptions& opts = {});

} // namespace genhankel

#endif

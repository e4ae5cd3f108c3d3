#pragma once

#include <complex>

#include "fkac/rng.hpp"

namespace fkac {

/// Index and diffusion coefficient of a symmetric alpha-stable process.
/// The free kernel is K(x,t) = F^{-1}[ exp(-t c_alpha |p|^alpha) ].
struct StableParams {
    double alpha;   // 0 < alpha <= 2
    double c_alpha; // > 0, units x^alpha / t

    void validate() const;
};

/// Parameters of the general Levy skew alpha-stable characteristic function.
struct LevyCFParams {
    double alpha;      // 0 < alpha <= 2
    double beta = 0.0; // asymmetry, -1 <= beta <= 1
    double c = 1.0;    // scale, > 0
    double y = 0.0;    // shift

    void validate() const;
};

/// Characteristic function
///   U(p) = exp( i y p - |c p|^alpha [1 - i beta sign(p) Phi(alpha, p)] ),
/// with Phi = tan(pi alpha / 2) for alpha != 1 and -(2/pi) log|p| at alpha = 1.
/// U(0) = 1; the beta term at alpha = 1 is taken as 0 at p = 0 (the limit of
/// |cp| log|p| vanishes there).
std::complex<double> levy_cf(double p, const LevyCFParams& params);

/// Gaussian kernel (alpha = 2): (4 pi c2 t)^{-1/2} exp(-x^2 / (4 c2 t)).
double kernel_gauss(double x, double t, double c2);

/// Cauchy kernel, the alpha = 1 closed form: (c1 t) / (pi ((c1 t)^2 + x^2)).
double kernel_cauchy(double x, double t, double c1);

/// One increment of the symmetric alpha-stable process over time dt:
/// (c_alpha dt)^{1/alpha} * S with S standard symmetric alpha-stable
/// (CF exp(-|p|^alpha)). Chambers-Mallows-Stuck for alpha in (0,2)\{1},
/// tan(U) for alpha = 1, a variance-2 normal for alpha = 2.
double sample_stable_increment(const StableParams& sp, double dt, RngStream& rng);

/// Standard symmetric alpha-stable draw (scale 1). Exposed for hot loops
/// that hoist the (c_alpha dt)^{1/alpha} factor.
double sample_standard_stable(double alpha, RngStream& rng);

/// Leading-order bound on the kernel mass outside [-L, L]:
///   2 (c_alpha t) Gamma(1+alpha) sin(pi alpha / 2) / (pi alpha L^alpha).
/// Zero at alpha = 2 (no power tail).
double stable_tail_mass_outside(const StableParams& sp, double t, double half_width);

} // namespace fkac

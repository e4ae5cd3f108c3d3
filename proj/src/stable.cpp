#include "fkac/stable.hpp"

#include <cmath>
#include <stdexcept>

namespace fkac {

void StableParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::domain_error("StableParams: alpha must be in (0, 2]");
    if (!(c_alpha > 0.0))
        throw std::domain_error("StableParams: c_alpha must be positive");
}

void LevyCFParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::domain_error("LevyCFParams: alpha must be in (0, 2]");
    if (!(beta >= -1.0) || !(beta <= 1.0))
        throw std::domain_error("LevyCFParams: beta must be in [-1, 1]");
    if (!(c > 0.0))
        throw std::domain_error("LevyCFParams: c must be positive");
}

std::complex<double> levy_cf(double p, const LevyCFParams& params) {
    params.validate();
    if (p == 0.0) return {1.0, 0.0};

    const double mod = std::pow(std::abs(params.c * p), params.alpha);
    double phi;
    if (params.alpha == 1.0) {
        phi = -(2.0 / M_PI) * std::log(std::abs(p));
    } else {
        phi = std::tan(M_PI * params.alpha / 2.0);
    }
    const double sgn = (p > 0.0) ? 1.0 : -1.0;
    const std::complex<double> exponent(
        -mod, params.y * p + mod * params.beta * sgn * phi);
    return std::exp(exponent);
}

double kernel_gauss(double x, double t, double c2) {
    if (!(t > 0.0)) throw std::domain_error("kernel_gauss: t must be positive");
    if (!(c2 > 0.0)) throw std::domain_error("kernel_gauss: c2 must be positive");
    const double var4 = 4.0 * c2 * t;
    return std::exp(-x * x / var4) / std::sqrt(M_PI * var4);
}

double kernel_cauchy(double x, double t, double c1) {
    if (!(t > 0.0)) throw std::domain_error("kernel_cauchy: t must be positive");
    if (!(c1 > 0.0)) throw std::domain_error("kernel_cauchy: c1 must be positive");
    const double w = c1 * t;
    return w / (M_PI * (w * w + x * x));
}

double sample_standard_stable(double alpha, RngStream& rng) {
    if (alpha == 2.0) {
        // CF exp(-p^2) is N(0, 2).
        return std::sqrt(2.0) * rng.next_normal();
    }
    const double u = M_PI * (rng.next_uniform() - 0.5); // (-pi/2, pi/2)
    if (alpha == 1.0) {
        return std::tan(u);
    }
    const double w = -std::log(rng.next_uniform()); // Exp(1)
    // Chambers-Mallows-Stuck, symmetric case.
    const double cu = std::cos(u);
    const double a = std::sin(alpha * u) / std::pow(cu, 1.0 / alpha);
    const double b = std::pow(std::cos((1.0 - alpha) * u) / w, (1.0 - alpha) / alpha);
    return a * b;
}

double sample_stable_increment(const StableParams& sp, double dt, RngStream& rng) {
    sp.validate();
    if (!(dt > 0.0)) throw std::domain_error("sample_stable_increment: dt must be positive");
    const double scale = std::pow(sp.c_alpha * dt, 1.0 / sp.alpha);
    return scale * sample_standard_stable(sp.alpha, rng);
}

double stable_tail_mass_outside(const StableParams& sp, double t, double half_width) {
    sp.validate();
    if (!(t > 0.0)) throw std::domain_error("stable_tail_mass_outside: t must be positive");
    if (!(half_width > 0.0))
        throw std::domain_error("stable_tail_mass_outside: half_width must be positive");
    if (sp.alpha == 2.0) return 0.0;
    return 2.0 * sp.c_alpha * t * std::tgamma(1.0 + sp.alpha) *
           std::sin(M_PI * sp.alpha / 2.0) /
           (M_PI * sp.alpha * std::pow(half_width, sp.alpha));
}

} // namespace fkac

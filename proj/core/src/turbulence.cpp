#include "hapfso/turbulence.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hapfso::turbulence {

TurbulenceModel::TurbulenceModel(LogNormal ln) : v_(ln) {
    if (!(ln.sigma_bu_sq > 0.0))
        throw std::invalid_argument("TurbulenceModel: sigma_bu_sq must be > 0");
}

TurbulenceModel::TurbulenceModel(GammaGamma gg) : v_(gg) {
    if (!(gg.alpha > 0.0) || !(gg.beta > 0.0))
        throw std::invalid_argument("TurbulenceModel: alpha and beta must be > 0");
}

std::pair<double, double> gg_params_from_rytov(double sigma_bu_sq) {
    if (!(sigma_bu_sq > 0.0))
        throw std::domain_error("gg_params_from_rytov: sigma_bu_sq must be > 0 "
                                "(alpha and beta diverge at 0)");
    const double s2 = sigma_bu_sq;
    const double alpha =
        1.0 / std::expm1(0.49 * s2 / std::pow(1.0 + 0.56 * s2, 7.0 / 6.0));
    const double beta =
        1.0 / std::expm1(0.51 * s2 / std::pow(1.0 + 0.69 * s2, 5.0 / 6.0));
    return {alpha, beta};
}

double bessel_k_real_order(double nu, double x) {
    return std::cyl_bessel_k(std::abs(nu), x); // K_{-nu} = K_{nu}
}

double pdf(const TurbulenceModel& model, double h_at) {
    if (!(h_at > 0.0))
        throw std::domain_error("turbulence::pdf: h_at must be > 0");

    if (model.is_lognormal()) {
        const double s2 = model.lognormal().sigma_bu_sq;
        const double t = std::log(h_at) + 2.0 * s2;
        return 1.0 / (2.0 * h_at * std::sqrt(2.0 * std::numbers::pi * s2)) *
               std::exp(-t * t / (8.0 * s2));
    }

    const auto& gg = model.gamma_gamma();
    const double a = gg.alpha;
    const double b = gg.beta;
    // Log-space prefactor: 2 (ab)^((a+b)/2) / (Gamma(a) Gamma(b)).
    const double ln_pref = std::numbers::ln2 + 0.5 * (a + b) * std::log(a * b) -
                           std::lgamma(a) - std::lgamma(b);
    const double kv = bessel_k_real_order(a - b, 2.0 * std::sqrt(a * b * h_at));
    if (kv <= 0.0) return 0.0; // K underflowed for large argument
    return std::exp(ln_pref + (0.5 * (a + b) - 1.0) * std::log(h_at) + std::log(kv));
}

double sample(const TurbulenceModel& model, rng::Stream& stream) {
    if (model.is_lognormal()) {
        const double s2 = model.lognormal().sigma_bu_sq;
        return std::exp(-2.0 * s2 + 2.0 * std::sqrt(s2) * stream.next_normal());
    }
    const auto& gg = model.gamma_gamma();
    const double x = stream.next_gamma(gg.alpha) / gg.alpha;
    const double y = stream.next_gamma(gg.beta) / gg.beta;
    return x * y;
}

} // namespace hapfso::turbulence

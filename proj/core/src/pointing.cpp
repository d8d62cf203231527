#include "hapfso/pointing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hapfso/quadrature.hpp"

namespace hapfso::pointing {

BeamParams::BeamParams(double w0, double wavelength, double eps)
    : waist_at_tx_m(w0), wavelength_m(wavelength), epsilon(eps) {
    if (!(w0 > 0.0))
        throw std::invalid_argument("BeamParams: waist_at_tx_m must be > 0");
    if (!(wavelength > 0.0))
        throw std::invalid_argument("BeamParams: wavelength_m must be > 0");
    if (!(eps >= 1.0))
        throw std::invalid_argument("BeamParams: epsilon must be >= 1");
}

JitterParams::JitterParams(double sigma_d, double sigma_b, double sigma_o)
    : sigma_d_m(sigma_d), sigma_b_m(sigma_b), sigma_o_rad(sigma_o) {
    if (!(sigma_d >= 0.0) || !(sigma_b >= 0.0) || !(sigma_o >= 0.0))
        throw std::invalid_argument("JitterParams: deviations must be >= 0");
}

double JitterParams::sigma_r_sq() const {
    return sigma_d_m * sigma_d_m + sigma_b_m * sigma_b_m;
}

double beam_waist_at(const BeamParams& beam, double distance_m) {
    if (!(distance_m >= 0.0))
        throw std::domain_error("beam_waist_at: distance_m must be >= 0");
    const double w0 = beam.waist_at_tx_m;
    const double q = beam.wavelength_m * distance_m / (std::numbers::pi * w0 * w0);
    return w0 * std::sqrt(1.0 + beam.epsilon * q * q);
}

double waist_at_tx_from_rx(double w_z, double distance_m, double wavelength_m,
                           double epsilon) {
    if (!(w_z > 0.0) || !(distance_m > 0.0))
        throw std::domain_error("waist_at_tx_from_rx: w_z and distance must be > 0");
    const double g = wavelength_m * distance_m / std::numbers::pi;
    const double disc = w_z * w_z * w_z * w_z - 4.0 * epsilon * g * g;
    if (disc < 0.0)
        throw std::domain_error("waist_at_tx_from_rx: requested w_z is below the "
                                "minimum beam radius attainable at this distance");
    return std::sqrt(0.5 * (w_z * w_z - std::sqrt(disc)));
}

PointingConstants pointing_constants(double w_z, double aperture_radius_m,
                                     const JitterParams& jitter) {
    if (!(w_z > 0.0) || !(aperture_radius_m > 0.0))
        throw std::domain_error("pointing_constants: w_z and aperture radius must be > 0");
    const double sr2 = jitter.sigma_r_sq();
    if (!(sr2 > 0.0))
        throw std::domain_error("pointing_constants: degenerate jitter (sigma_r = 0)");
    PointingConstants pc;
    pc.c1 = 2.0 * aperture_radius_m * aperture_radius_m / (w_z * w_z);
    pc.c2 = 2.0 / (w_z * w_z);
    pc.c3 = w_z * w_z / (4.0 * sr2);
    pc.far_field = (w_z / aperture_radius_m >= 5.0);
    return pc;
}

double displacement_pdf(const JitterParams& jitter, double r_d) {
    if (!(r_d >= 0.0))
        throw std::domain_error("displacement_pdf: r_d must be >= 0");
    const double sr2 = jitter.sigma_r_sq();
    if (!(sr2 > 0.0))
        throw std::domain_error("displacement_pdf: degenerate jitter (sigma_r = 0)");
    return r_d / sr2 * std::exp(-r_d * r_d / (2.0 * sr2));
}

double pointing_loss(double w_z, double aperture_radius_m, double r_d, double theta_d) {
    if (!(w_z > 0.0) || !(aperture_radius_m >= 0.0) || !(r_d >= 0.0))
        throw std::domain_error("pointing_loss: inputs must be nonnegative, w_z > 0");
    if (!(theta_d >= 0.0) || !(theta_d < std::numbers::pi / 2.0))
        throw std::domain_error("pointing_loss: theta_d must be in [0, pi/2)");
    const double v = 2.0 * aperture_radius_m * aperture_radius_m / (w_z * w_z) *
                     std::exp(-2.0 * r_d * r_d / (w_z * w_z)) * std::cos(theta_d);
    return std::clamp(v, 0.0, 1.0);
}

double conditional_pl_pdf(const PointingConstants& pc, double theta_d, double h_pl) {
    const double cos_t = std::cos(theta_d);
    if (!(h_pl > 0.0) || h_pl > pc.c1 * cos_t) return 0.0; // outside support
    return std::pow(pc.c1, -pc.c3) * pc.c3 * std::pow(h_pl, pc.c3 - 1.0) * cos_t;
}

double pointing_loss_exact_disc(double w_z, double aperture_radius_m, double r_d,
                                double theta_d, int radial_panels) {
    const double a = aperture_radius_m;
    const double w2 = w_z * w_z;
    // Angular integral done analytically: the disc integral of the displaced
    // Gaussian reduces to a 1-D radial integral against I_0.
    auto radial = [&](double r) {
        return r * std::exp(-2.0 * r * r / w2) *
               std::cyl_bessel_i(0.0, 4.0 * r * r_d / w2);
    };
    const double I = integrate_composite(radial, 0.0, a,
                                         static_cast<std::size_t>(radial_panels), 8);
    return 4.0 / w2 * std::exp(-2.0 * r_d * r_d / w2) * I * std::cos(theta_d);
}

} // namespace hapfso::pointing

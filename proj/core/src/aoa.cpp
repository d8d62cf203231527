#include "hapfso/aoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hapfso::aoa {

namespace {

void check_theta_fov(double theta_fov) {
    if (!(theta_fov > 0.0) || !(theta_fov < std::numbers::pi))
        throw std::invalid_argument("ReceiverFov: theta_fov must be in (0, pi)");
}

} // namespace

ReceiverFov::ReceiverFov(double detector_radius, double focal_length)
    : detector_radius_m(detector_radius), focal_length_m(focal_length),
      theta_fov_rad(2.0 * std::atan(detector_radius / focal_length)) {
    if (!(detector_radius > 0.0) || !(focal_length > 0.0))
        throw std::invalid_argument("ReceiverFov: r_p and f_c must be > 0");
    check_theta_fov(theta_fov_rad);
}

ReceiverFov::ReceiverFov(double detector_radius, double focal_length, double theta_fov)
    : detector_radius_m(detector_radius), focal_length_m(focal_length),
      theta_fov_rad(theta_fov) {
    if (!(detector_radius > 0.0) || !(focal_length > 0.0))
        throw std::invalid_argument("ReceiverFov: r_p and f_c must be > 0");
    check_theta_fov(theta_fov);
}

ReceiverFov ReceiverFov::from_theta(double detector_radius, double theta_fov) {
    check_theta_fov(theta_fov);
    const double fc = detector_radius / std::tan(theta_fov / 2.0);
    return ReceiverFov(detector_radius, fc, theta_fov);
}

double ReceiverFov::solid_angle_sr() const {
    return 2.0 * std::numbers::pi * (1.0 - std::cos(theta_fov_rad / 2.0));
}

double theta_d_pdf(double sigma_o_rad, double theta_d) {
    if (!(sigma_o_rad > 0.0))
        throw std::domain_error("theta_d_pdf: degenerate orientation deviation (sigma_o = 0)");
    if (!(theta_d >= 0.0))
        throw std::domain_error("theta_d_pdf: theta_d must be >= 0");
    const double s2 = sigma_o_rad * sigma_o_rad;
    return theta_d / s2 * std::exp(-theta_d * theta_d / (2.0 * s2));
}

double airy_fraction(double psi_over_lambda) {
    if (!(psi_over_lambda >= 0.0))
        throw std::domain_error("airy_fraction: psi/lambda must be >= 0");
    const double x = std::numbers::pi * psi_over_lambda;
    const double j0 = std::cyl_bessel_j(0.0, x);
    const double j1 = std::cyl_bessel_j(1.0, x);
    return std::clamp(1.0 - j0 * j0 - j1 * j1, 0.0, 1.0);
}

double aoa_loss_exact(const ReceiverFov& fov, double theta_d, double wavelength_m) {
    if (!(theta_d >= 0.0))
        throw std::domain_error("aoa_loss_exact: theta_d must be >= 0");
    if (!(wavelength_m > 0.0))
        throw std::domain_error("aoa_loss_exact: wavelength must be > 0");
    const double rp = fov.detector_radius_m;
    if (theta_d <= fov.theta_fov_rad)
        return airy_fraction(rp / wavelength_m);
    // Focal-plane displacement of the diffraction pattern.
    const double rd = fov.focal_length_m * std::tan(theta_d);
    if (rd <= rp) return airy_fraction(rp / wavelength_m); // pattern still on the detector
    const double v = rp / (4.0 * rd) *
                     (airy_fraction((rd + rp) / wavelength_m) -
                      airy_fraction((rd - rp) / wavelength_m));
    return std::clamp(v, 0.0, 1.0);
}

double aoa_loss_gate(const ReceiverFov& fov, double theta_d) {
    if (!(theta_d >= 0.0))
        throw std::domain_error("aoa_loss_gate: theta_d must be >= 0");
    return theta_d < fov.theta_fov_rad ? 1.0 : 0.0;
}

} // namespace hapfso::aoa

#ifndef HAPFSO_POINTING_HPP
#define HAPFSO_POINTING_HPP

namespace hapfso::pointing {

// Gaussian-beam parameters at the transmitter. epsilon >= 1 folds the
// turbulence-induced extra divergence into the diffraction law.
struct BeamParams {
    double waist_at_tx_m; // w_0
    double wavelength_m;
    double epsilon; // 1 + 2 w_0^2 / rho_0^2

    BeamParams(double w0, double wavelength, double eps);
};

// Receiver-plane random displacement scales. sigma_r^2 = sigma_d^2 + sigma_b^2
// combines platform position jitter with turbulence beam wander.
struct JitterParams {
    double sigma_d_m;   // position deviation per axis
    double sigma_b_m;   // beam-wander deviation per axis
    double sigma_o_rad; // orientation deviation per axis

    JitterParams(double sigma_d, double sigma_b, double sigma_o);

    double sigma_r_sq() const;
};

// Constants of the conditional pointing-loss law:
//   C1 = 2 r_a^2 / w_Z^2   peak collected fraction
//   C2 = 2 / w_Z^2
//   C3 = w_Z^2 / (4 sigma_r^2)  power-law exponent
// far_field is false when w_Z / r_a < 5, where the constant-intensity
// approximation behind C1 starts to degrade.
struct PointingConstants {
    double c1;
    double c2;
    double c3;
    bool far_field;
};

// Beam radius after propagating a distance Z.
double beam_waist_at(const BeamParams& beam, double distance_m);

// Inverse of beam_waist_at in w_0 for fixed (Z, lambda, epsilon), taking the
// diverging-beam branch (the smaller w_0 root). Throws std::domain_error when
// w_Z is below the minimum waist attainable at that distance.
double waist_at_tx_from_rx(double w_z, double distance_m, double wavelength_m,
                           double epsilon);

PointingConstants pointing_constants(double w_z, double aperture_radius_m,
                                     const JitterParams& jitter);

// Rayleigh density of the radial displacement r_d = |d + b|.
double displacement_pdf(const JitterParams& jitter, double r_d);

// Collected power fraction for displacement r_d and incidence tilt theta_d,
// in the constant-intensity (far-field) approximation, clamped to [0, 1].
double pointing_loss(double w_z, double aperture_radius_m, double r_d, double theta_d);

// Conditional density of the pointing loss given theta_d, supported on
// (0, C1 cos(theta_d)]. As written the law integrates to cos(theta_d)^(C3+1)
// over that support; it is exactly normalized at theta_d = 0, which is the
// only form the small-angle closed forms consume.
double conditional_pl_pdf(const PointingConstants& pc, double theta_d, double h_pl);

// Exact collected fraction: the beam intensity profile integrated over the
// displaced aperture disc (used as the reference the far-field form is
// checked against, and exposed for diagnostics).
double pointing_loss_exact_disc(double w_z, double aperture_radius_m, double r_d,
                                double theta_d, int radial_panels = 256);

} // namespace hapfso::pointing

#endif

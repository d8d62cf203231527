#ifndef HAPFSO_AOA_HPP
#define HAPFSO_AOA_HPP

namespace hapfso::aoa {

// Receiver field-of-view geometry. theta_fov may be set directly (it is a
// free design variable in the sweeps) or derived from the detector radius
// and focal length as 2 atan(r_p / f_c).
struct ReceiverFov {
    double detector_radius_m; // r_p
    double focal_length_m;    // f_c
    double theta_fov_rad;

    // theta_fov derived from r_p and f_c.
    ReceiverFov(double detector_radius, double focal_length);

    // theta_fov set directly; the focal length is back-derived from r_p so
    // the exact focal-plane model stays consistent with the chosen FOV.
    ReceiverFov(double detector_radius, double focal_length, double theta_fov);

    static ReceiverFov from_theta(double detector_radius, double theta_fov);

    double solid_angle_sr() const; // 2 pi (1 - cos(theta_fov / 2))
};

// Rayleigh density of the arrival-angle deviation theta_d.
double theta_d_pdf(double sigma_o_rad, double theta_d);

// Fraction of the Airy pattern's total power inside a focal-plane circle of
// radius psi, parameterized by psi / lambda:
//   L = 1 - J0^2(pi psi / lambda) - J1^2(pi psi / lambda).
// Monotone nondecreasing, in [0, 1).
double airy_fraction(double psi_over_lambda);

// Power fraction reaching the detector for arrival deviation theta_d,
// including side-lobe capture. Outside the FOV the diffraction pattern is
// displaced in the focal plane by r_d = f_c tan(theta_d) and the detector
// collects the annulus-averaged ring energy.
double aoa_loss_exact(const ReceiverFov& fov, double theta_d, double wavelength_m);

// Gate approximation: full capture inside the FOV, nothing outside.
// The boundary theta_d == theta_fov maps to 0, making the capture
// probability exactly the Rayleigh CDF used by the closed forms.
double aoa_loss_gate(const ReceiverFov& fov, double theta_d);

} // namespace hapfso::aoa

#endif

#ifndef HAPFSO_CHANNEL_HPP
#define HAPFSO_CHANNEL_HPP

#include "hapfso/aoa.hpp"
#include "hapfso/pointing.hpp"
#include "hapfso/turbulence.hpp"

namespace hapfso::channel {

struct ReceiverElectronics {
    double responsivity_a_per_w;     // eta
    double electrical_bandwidth_hz;  // B_e
    double optical_bandwidth_m;      // B_o (wavelength band)
    double background_radiance_si;   // N_b in W m^-2 m^-1 sr^-1 (converted at
                                     // the configuration boundary from the
                                     // conventional W cm^-2 m^-1 sr^-1)
    double electron_charge_c;        // e

    ReceiverElectronics(double responsivity, double electrical_bw_hz,
                        double optical_bw_m, double background_radiance_si_units,
                        double electron_charge);
};

// One realization of the multiplicative channel decomposition
// h = h_al * h_at * h_pl * h_af.
struct LinkState {
    double h_al = 1.0;
    double h_at = 1.0;
    double h_pl = 1.0;
    double h_af = 1.0;

    double h() const { return h_al * h_at * h_pl * h_af; }
};

// Outage query: the channel-gain threshold equivalent to the SNR threshold,
// h_th = sqrt(gamma_th sigma_n^2) / (eta P_t).
struct OutageQuery {
    double transmit_power_w; // P_t
    double snr_threshold;    // gamma_th, linear

    OutageQuery(double power_w, double gamma_th);

    double h_threshold(double responsivity, double sigma_n_sq) const;
};

// Background optical power collected through the FOV cone: N_b B_o Omega A_r.
double background_power(const aoa::ReceiverFov& fov, const ReceiverElectronics& rx,
                        double aperture_area_m2);

// Shot-noise variance of the background-limited receiver: 2 e B_e eta P_b.
double noise_variance(const ReceiverElectronics& rx, double background_power_w);

// Instantaneous electrical SNR, gamma = eta^2 P_t^2 h^2 / sigma_n^2.
double snr(double h, const OutageQuery& query, const ReceiverElectronics& rx,
           double sigma_n_sq);

// Density of h_ag = h_al h_at h_pl conditioned on theta_d, in the small-gain
// power-law regime: the turbulence mixing integral collapses to
// coeff * h_ag^(C3-1) * cos(theta_d). Throws parameter_region_error when the
// underlying inverse moment diverges (gamma-gamma with min(alpha, beta) <= C3).
double conditional_composite_pdf(const turbulence::TurbulenceModel& model,
                                 const pointing::PointingConstants& pc,
                                 double h_al, double theta_d, double h_ag);

// Continuous part and point mass of the channel density under the FOV gate.
struct SmoothPdf {
    double density;    // f'_h at the queried h
    double point_mass; // P(h = 0) = exp(-theta_fov^2 / (2 sigma_o^2))
};

SmoothPdf channel_pdf_smooth(const turbulence::TurbulenceModel& model,
                             const pointing::PointingConstants& pc, double h_al,
                             double theta_fov, double sigma_o, double h);

struct OutageResult {
    double p_out;          // clamped to [0, 1]
    double unclamped;      // raw closed-form value
    double floor;          // exp(-theta_fov^2 / (2 sigma_o^2))
    double h_validity;     // h at which the smooth CDF reaches 0.5
    bool clamped;          // unclamped exceeded 1
    bool validity_breach;  // h_th above h_validity: small-gain law unreliable
};

// Closed-form outage probability:
//   P_out = floor + [smooth CDF at h_th] * (1 - floor).
OutageResult outage_closed_form(const turbulence::TurbulenceModel& model,
                                const pointing::PointingConstants& pc, double h_al,
                                double theta_fov, double sigma_o, double h_th);

// Inverse moment E[h_at^(-c3)] of the fading distribution; the bracket
// constant all closed forms share. Exposed for cross-checks and the
// second-moment machinery.
double fading_inverse_moment(const turbulence::TurbulenceModel& model, double c3);

// E[h_at^2]; exact for both models (used by the semi-analytic mean SNR).
double fading_second_moment(const turbulence::TurbulenceModel& model);

} // namespace hapfso::channel

#endif

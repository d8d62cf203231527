#ifndef HAPFSO_ATMOSPHERE_HPP
#define HAPFSO_ATMOSPHERE_HPP

#include <functional>

#include "hapfso/quadrature.hpp"

namespace hapfso::atmosphere {

// Ground-to-platform slant-path geometry. The path length is
// Z = (H - h0) * sec(zeta).
struct LinkGeometry {
    double hap_altitude_m;  // H
    double tx_altitude_m;   // h0
    double zenith_angle_rad; // zeta

    LinkGeometry(double hap_altitude, double tx_altitude, double zenith_rad);

    double path_length_m() const; // Z
    double sec_zenith() const;

    // Along-path distance reached at altitude l, s(l) = (l - h0) * sec(zeta).
    double slant_distance_at(double altitude_m) const;
};

struct AtmosphereProfile {
    double rms_wind_speed_mps;     // V_w
    double ground_cn2;             // C_n^2(0), m^(-2/3)
    double attenuation_coeff_per_m; // xi, Beers-Lambert

    AtmosphereProfile(double wind_mps, double ground_cn2_val, double atten_per_m);
};

// Which coherence-length expression to evaluate; see coherence_length().
enum class CoherenceForm {
    IntegrandPower,  // exponent -3/5 applied inside the integral
    IntegralPower,   // spherical-wave form: whole integral raised to -3/5
};

// Hufnagel-Valley refractive-index structure parameter at altitude l [m].
double cn2_at(double altitude_m, const AtmosphereProfile& profile);

// Rytov variance for a slant path (spherical-wave weighting between the
// endpoint altitudes). Dimensionless.
double rytov_variance(const LinkGeometry& geom, const AtmosphereProfile& profile,
                      double wavelength_m, const QuadratureSpec& quad = {});

// Beam-wander displacement variance [m^2] at the receiver plane.
// beam_waist_fn maps altitude l to the beam radius at the slant distance
// s(l) reached at that altitude; the path factor is (Z - s(l))^2 so the
// expression is dimensionally consistent on a slant path and reduces to
// the vertical-path form at zeta = 0, h0 = 0.
double beam_wander_variance(const LinkGeometry& geom, const AtmosphereProfile& profile,
                            const std::function<double(double)>& beam_waist_fn,
                            const QuadratureSpec& quad = {});

// Transverse coherence length [m]. The IntegrandPower form evaluates
//   rho_0 = int (0.55 Cn2(l) k^2 l)^(-3/5) dl
// with the lower limit clamped to max(h0, 1 m) because the integrand
// diverges like l^(-3/5) at l = 0. The IntegralPower form evaluates the
// spherical-wave expression
//   rho_0 = [1.46 k^2 int Cn2(l) ((l-h0)/(H-h0))^(5/3) dl]^(-3/5).
double coherence_length(const LinkGeometry& geom, const AtmosphereProfile& profile,
                        double wavelength_m, const QuadratureSpec& quad = {},
                        CoherenceForm form = CoherenceForm::IntegrandPower);

// Beers-Lambert attenuation over the full path, in (0, 1].
double attenuation_loss(const LinkGeometry& geom, const AtmosphereProfile& profile);

// Transmit beam waist from the transmitter aperture diameter, w0 = D/(sqrt(2) pi).
double waist_from_aperture_diameter(double diameter_m);

} // namespace hapfso::atmosphere

#endif

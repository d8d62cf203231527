#include "hapfso/atmosphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hapfso::atmosphere {

LinkGeometry::LinkGeometry(double hap_altitude, double tx_altitude, double zenith_rad)
    : hap_altitude_m(hap_altitude), tx_altitude_m(tx_altitude), zenith_angle_rad(zenith_rad) {
    if (!(tx_altitude >= 0.0))
        throw std::invalid_argument("LinkGeometry: tx_altitude_m must be >= 0");
    if (!(hap_altitude > tx_altitude))
        throw std::invalid_argument("LinkGeometry: hap_altitude_m must exceed tx_altitude_m");
    if (!(zenith_rad >= 0.0) || !(zenith_rad < std::numbers::pi / 2.0))
        throw std::invalid_argument("LinkGeometry: zenith_angle_rad must be in [0, pi/2)");
    if (!std::isfinite(path_length_m()) || !(path_length_m() > 0.0))
        throw std::invalid_argument("LinkGeometry: derived path length is not finite and positive");
}

double LinkGeometry::sec_zenith() const {
    return 1.0 / std::cos(zenith_angle_rad);
}

double LinkGeometry::path_length_m() const {
    return (hap_altitude_m - tx_altitude_m) * sec_zenith();
}

double LinkGeometry::slant_distance_at(double altitude_m) const {
    return (altitude_m - tx_altitude_m) * sec_zenith();
}

AtmosphereProfile::AtmosphereProfile(double wind_mps, double ground_cn2_val, double atten_per_m)
    : rms_wind_speed_mps(wind_mps), ground_cn2(ground_cn2_val),
      attenuation_coeff_per_m(atten_per_m) {
    if (!(wind_mps > 0.0))
        throw std::invalid_argument("AtmosphereProfile: rms_wind_speed_mps must be > 0");
    if (!(ground_cn2_val > 0.0))
        throw std::invalid_argument("AtmosphereProfile: ground_cn2 must be > 0");
    if (!(atten_per_m >= 0.0))
        throw std::invalid_argument("AtmosphereProfile: attenuation_coeff_per_m must be >= 0");
}

double cn2_at(double altitude_m, const AtmosphereProfile& profile) {
    if (!(altitude_m >= 0.0))
        throw std::domain_error("cn2_at: altitude_m must be >= 0");
    const double l = altitude_m;
    const double wind_term = 0.00594 * std::pow(profile.rms_wind_speed_mps / 27.0, 2.0) *
                             std::pow(1e-5 * l, 10.0) * std::exp(-l / 1000.0);
    const double tropopause_term = 2.7e-16 * std::exp(-l / 1500.0);
    const double ground_term = profile.ground_cn2 * std::exp(-l / 100.0);
    return wind_term + tropopause_term + ground_term;
}

double rytov_variance(const LinkGeometry& geom, const AtmosphereProfile& profile,
                      double wavelength_m, const QuadratureSpec& quad) {
    if (!(wavelength_m > 0.0))
        throw std::domain_error("rytov_variance: wavelength_m must be > 0");
    const double h0 = geom.tx_altitude_m;
    const double H = geom.hap_altitude_m;
    const double dh = H - h0;
    if (dh <= 0.0) return 0.0;

    auto integrand = [&](double l) {
        const double xi = (l - h0) / dh;
        return cn2_at(l, profile) * std::pow(1.0 - xi, 5.0 / 6.0) * std::pow(xi, 5.0 / 6.0);
    };
    const double I = integrate_adaptive(integrand, h0, H, quad).value;

    const double k = 2.0 * std::numbers::pi / wavelength_m;
    return 2.25 * std::pow(k, 7.0 / 6.0) * std::pow(dh, 5.0 / 6.0) *
           std::pow(geom.sec_zenith(), 11.0 / 6.0) * I;
}

double beam_wander_variance(const LinkGeometry& geom, const AtmosphereProfile& profile,
                            const std::function<double(double)>& beam_waist_fn,
                            const QuadratureSpec& quad) {
    const double h0 = geom.tx_altitude_m;
    const double H = geom.hap_altitude_m;
    if (H - h0 <= 0.0) return 0.0;
    const double Z = geom.path_length_m();

    auto integrand = [&](double l) {
        const double s = geom.slant_distance_at(l);
        const double w = beam_waist_fn(l);
        return cn2_at(l, profile) * (Z - s) * (Z - s) * std::pow(w, -1.0 / 3.0);
    };
    return 2.07 * integrate_adaptive(integrand, h0, H, quad).value;
}

double coherence_length(const LinkGeometry& geom, const AtmosphereProfile& profile,
                        double wavelength_m, const QuadratureSpec& quad,
                        CoherenceForm form) {
    if (!(wavelength_m > 0.0))
        throw std::domain_error("coherence_length: wavelength_m must be > 0");
    const double k = 2.0 * std::numbers::pi / wavelength_m;
    const double h0 = geom.tx_altitude_m;
    const double H = geom.hap_altitude_m;

    if (form == CoherenceForm::IntegrandPower) {
        const double lo = std::max(h0, 1.0);
        auto integrand = [&](double l) {
            return std::pow(0.55 * cn2_at(l, profile) * k * k * l, -3.0 / 5.0);
        };
        return integrate_adaptive(integrand, lo, H, quad).value;
    }

    const double dh = H - h0;
    auto integrand = [&](double l) {
        return cn2_at(l, profile) * std::pow((l - h0) / dh, 5.0 / 3.0);
    };
    const double I = integrate_adaptive(integrand, h0, H, quad).value;
    return std::pow(1.46 * k * k * I, -3.0 / 5.0);
}

double attenuation_loss(const LinkGeometry& geom, const AtmosphereProfile& profile) {
    return std::exp(-geom.path_length_m() * profile.attenuation_coeff_per_m);
}

double waist_from_aperture_diameter(double diameter_m) {
    if (!(diameter_m > 0.0))
        throw std::domain_error("waist_from_aperture_diameter: diameter must be > 0");
    return diameter_m / (std::numbers::sqrt2 * std::numbers::pi);
}

} // namespace hapfso::atmosphere

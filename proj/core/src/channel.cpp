#include "hapfso/channel.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hapfso/errors.hpp"

namespace hapfso::channel {

ReceiverElectronics::ReceiverElectronics(double responsivity, double electrical_bw_hz,
                                         double optical_bw_m,
                                         double background_radiance_si_units,
                                         double electron_charge)
    : responsivity_a_per_w(responsivity), electrical_bandwidth_hz(electrical_bw_hz),
      optical_bandwidth_m(optical_bw_m), background_radiance_si(background_radiance_si_units),
      electron_charge_c(electron_charge) {
    if (!(responsivity > 0.0) || !(electrical_bw_hz > 0.0) || !(optical_bw_m > 0.0) ||
        !(background_radiance_si_units > 0.0) || !(electron_charge > 0.0))
        throw std::invalid_argument("ReceiverElectronics: all fields must be > 0");
}

OutageQuery::OutageQuery(double power_w, double gamma_th)
    : transmit_power_w(power_w), snr_threshold(gamma_th) {
    if (!(power_w > 0.0))
        throw std::invalid_argument("OutageQuery: transmit_power_w must be > 0");
    if (!(gamma_th > 0.0))
        throw std::invalid_argument("OutageQuery: snr_threshold must be > 0");
}

double OutageQuery::h_threshold(double responsivity, double sigma_n_sq) const {
    if (!(sigma_n_sq > 0.0))
        throw std::domain_error("h_threshold: degenerate noise (sigma_n^2 = 0)");
    return std::sqrt(snr_threshold * sigma_n_sq) / (responsivity * transmit_power_w);
}

double background_power(const aoa::ReceiverFov& fov, const ReceiverElectronics& rx,
                        double aperture_area_m2) {
    if (!(aperture_area_m2 > 0.0))
        throw std::domain_error("background_power: aperture area must be > 0");
    return rx.background_radiance_si * rx.optical_bandwidth_m * fov.solid_angle_sr() *
           aperture_area_m2;
}

double noise_variance(const ReceiverElectronics& rx, double background_power_w) {
    if (!(background_power_w >= 0.0))
        throw std::domain_error("noise_variance: background power must be >= 0");
    return 2.0 * rx.electron_charge_c * rx.electrical_bandwidth_hz *
           rx.responsivity_a_per_w * background_power_w;
}

double snr(double h, const OutageQuery& query, const ReceiverElectronics& rx,
           double sigma_n_sq) {
    if (!(h >= 0.0))
        throw std::domain_error("snr: h must be >= 0");
    if (!(sigma_n_sq > 0.0))
        throw std::domain_error("snr: degenerate noise (sigma_n^2 = 0)");
    const double s = rx.responsivity_a_per_w * query.transmit_power_w * h;
    return s * s / sigma_n_sq;
}

namespace {

// Log of the h-independent coefficient of the small-gain conditional density
// f(h_ag) = exp(ln_coeff) * h_ag^(c3 - 1) * cos(theta_d).
// The gamma-gamma branch applies the pole guard: arguments within 1e-9 of a
// nonpositive integer get C3 perturbed by 1e-9 relative (logged), and a
// divergent inverse moment (min(alpha, beta) <= C3) is a parameter-region
// error rather than a silent wrong number.
double ln_smooth_coeff(const turbulence::TurbulenceModel& model,
                       const pointing::PointingConstants& pc, double h_al) {
    if (!(h_al > 0.0) || h_al > 1.0)
        throw std::domain_error("channel: h_al must be in (0, 1]");
    double c3 = pc.c3;

    if (model.is_lognormal()) {
        const double s2 = model.lognormal().sigma_bu_sq;
        const double q = (2.0 * c3 + 1.0) / 4.0;
        return std::log(c3) - c3 * std::log(pc.c1) - std::log(2.0) -
               c3 * std::log(h_al) - 0.5 * std::log(2.0 * std::numbers::pi * s2) +
               0.5 * std::log(8.0 * std::numbers::pi * s2) +
               8.0 * s2 * (q * q - 1.0 / 16.0);
    }

    const auto& gg = model.gamma_gamma();
    const double a = gg.alpha;
    const double b = gg.beta;

    auto near_nonpositive_integer = [](double x) {
        if (x > 0.5) return false;
        return std::abs(x - std::round(x)) < 1e-9;
    };
    if (near_nonpositive_integer(a - c3) || near_nonpositive_integer(b - c3)) {
        c3 *= 1.0 + 1e-9;
        std::clog << "hapfso: gamma-pole guard perturbed C3 to " << c3 << "\n";
    }
    if (a - c3 <= 0.0 || b - c3 <= 0.0) {
        std::ostringstream msg;
        msg << "conditional_composite_pdf: inverse fading moment diverges "
               "(alpha - C3 = " << (a - c3) << ", beta - C3 = " << (b - c3)
            << "); the small-gain law requires min(alpha, beta) > C3";
        throw parameter_region_error(msg.str());
    }

    const double c5 = 0.5 * (a + b - 2.0 * c3 - 2.0);
    const double ln_c4 = std::numbers::ln2 + std::log(c3) +
                         0.5 * (a + b) * std::log(a * b) - c3 * std::log(h_al) -
                         std::lgamma(a) - std::lgamma(b);
    return (2.0 * c5 + 1.0) * std::numbers::ln2 - c3 * std::log(pc.c1) + ln_c4 -
           (c5 + 1.0) * std::log(4.0 * a * b) +
           std::lgamma(0.5 * (2.0 * c5 + 2.0 + a - b)) +
           std::lgamma(0.5 * (2.0 * c5 + 2.0 + b - a));
}

} // namespace

double conditional_composite_pdf(const turbulence::TurbulenceModel& model,
                                 const pointing::PointingConstants& pc,
                                 double h_al, double theta_d, double h_ag) {
    if (!(h_ag > 0.0))
        throw std::domain_error("conditional_composite_pdf: h_ag must be > 0");
    if (!(theta_d >= 0.0) || !(theta_d < std::numbers::pi / 2.0))
        throw std::domain_error("conditional_composite_pdf: theta_d must be in [0, pi/2)");
    const double ln_coeff = ln_smooth_coeff(model, pc, h_al);
    return std::exp(ln_coeff + (pc.c3 - 1.0) * std::log(h_ag)) * std::cos(theta_d);
}

SmoothPdf channel_pdf_smooth(const turbulence::TurbulenceModel& model,
                             const pointing::PointingConstants& pc, double h_al,
                             double theta_fov, double sigma_o, double h) {
    if (!(sigma_o > 0.0))
        throw std::domain_error("channel_pdf_smooth: sigma_o must be > 0");
    const double floor = std::exp(-theta_fov * theta_fov / (2.0 * sigma_o * sigma_o));
    SmoothPdf out;
    out.point_mass = floor;
    out.density = conditional_composite_pdf(model, pc, h_al, 0.0, h) * (1.0 - floor);
    return out;
}

double fading_inverse_moment(const turbulence::TurbulenceModel& model, double c3) {
    if (model.is_lognormal()) {
        const double s2 = model.lognormal().sigma_bu_sq;
        return std::exp(2.0 * s2 * c3 * (c3 + 1.0));
    }
    const auto& gg = model.gamma_gamma();
    const double a = gg.alpha;
    const double b = gg.beta;
    if (a - c3 <= 0.0 || b - c3 <= 0.0)
        throw parameter_region_error("fading_inverse_moment: diverges for min(alpha, beta) <= c3");
    return std::exp(c3 * std::log(a * b) + std::lgamma(a - c3) + std::lgamma(b - c3) -
                    std::lgamma(a) - std::lgamma(b));
}

double fading_second_moment(const turbulence::TurbulenceModel& model) {
    if (model.is_lognormal())
        return std::exp(4.0 * model.lognormal().sigma_bu_sq);
    const auto& gg = model.gamma_gamma();
    return (1.0 + 1.0 / gg.alpha) * (1.0 + 1.0 / gg.beta);
}

OutageResult outage_closed_form(const turbulence::TurbulenceModel& model,
                                const pointing::PointingConstants& pc, double h_al,
                                double theta_fov, double sigma_o, double h_th) {
    if (!(h_th > 0.0))
        throw std::domain_error("outage_closed_form: h_th must be > 0");
    if (!(sigma_o > 0.0))
        throw std::domain_error("outage_closed_form: sigma_o must be > 0");

    const double floor = std::exp(-theta_fov * theta_fov / (2.0 * sigma_o * sigma_o));
    // Smooth CDF at h_th: the density coefficient integrated over (0, h_th],
    // i.e. exp(ln_coeff) * h_th^C3 / C3.
    const double ln_coeff = ln_smooth_coeff(model, pc, h_al);
    const double smooth_cdf =
        std::exp(ln_coeff + pc.c3 * std::log(h_th) - std::log(pc.c3));

    OutageResult r;
    r.floor = floor;
    r.unclamped = floor + smooth_cdf * (1.0 - floor);
    r.clamped = r.unclamped > 1.0;
    r.p_out = std::min(r.unclamped, 1.0);

    const double inv_moment = fading_inverse_moment(model, pc.c3);
    r.h_validity = pc.c1 * h_al * std::pow(0.5 / inv_moment, 1.0 / pc.c3);
    r.validity_breach = h_th > r.h_validity;
    if (r.clamped)
        std::clog << "hapfso: closed-form outage exceeded 1 (" << r.unclamped
                  << "); small-gain validity breached at h_th = " << h_th << "\n";
    return r;
}

} // namespace hapfso::channel

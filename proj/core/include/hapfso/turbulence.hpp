#ifndef HAPFSO_TURBULENCE_HPP
#define HAPFSO_TURBULENCE_HPP

#include <utility>
#include <variant>

#include "hapfso/rng.hpp"

namespace hapfso::turbulence {

// Unit-mean fading models. Log-normal for weak turbulence, gamma-gamma
// for moderate to strong.
struct LogNormal {
    double sigma_bu_sq; // Rytov variance, > 0
};

struct GammaGamma {
    double alpha; // large-scale eddies, > 0
    double beta;  // small-scale eddies, > 0
};

class TurbulenceModel {
public:
    explicit TurbulenceModel(LogNormal ln);
    explicit TurbulenceModel(GammaGamma gg);

    bool is_lognormal() const noexcept { return std::holds_alternative<LogNormal>(v_); }
    const LogNormal& lognormal() const { return std::get<LogNormal>(v_); }
    const GammaGamma& gamma_gamma() const { return std::get<GammaGamma>(v_); }

private:
    std::variant<LogNormal, GammaGamma> v_;
};

// Effective large/small-scale eddy counts from the Rytov variance.
std::pair<double, double> gg_params_from_rytov(double sigma_bu_sq);

// Fading density at h_at > 0.
//   LN: ln(h_at) is Gaussian with mean -2 sigma^2 and variance 4 sigma^2,
//       which makes E[h_at] = 1.
//   GG: 2 (ab)^((a+b)/2) / (Gamma(a) Gamma(b)) h^((a+b)/2 - 1)
//       K_(a-b)(2 sqrt(ab h)).
double pdf(const TurbulenceModel& model, double h_at);

// Exact sampler matching pdf(): LN via exp of a Gaussian, GG via the
// product of two independent unit-mean gamma variates. The gamma-product
// route is independent of the pdf implementation, so sampler and pdf
// cross-validate each other.
double sample(const TurbulenceModel& model, rng::Stream& stream);

// Modified Bessel function of the second kind for real order. Single choke
// point for the GG density; accuracy across real and near-integer orders is
// pinned by tests against an integral-representation reference.
double bessel_k_real_order(double nu, double x);

} // namespace hapfso::turbulence

#endif

#ifndef HAPFSO_QUADRATURE_HPP
#define HAPFSO_QUADRATURE_HPP

#include <cstddef>
#include <functional>

#include "hapfso/errors.hpp"

namespace hapfso {

// Accuracy request for the adaptive integrator. The refractive-index
// profile spans ~10 orders of magnitude over a slant path, so fixed
// uniform grids are not an option for the path integrals.
struct QuadratureSpec {
    double relative_tolerance = 1e-8;   // in (0, 1e-3]
    std::size_t max_subdivisions = 200; // >= 16

    QuadratureSpec() = default;
    QuadratureSpec(double rel_tol, std::size_t max_subdiv);
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // absolute
    std::size_t intervals = 0;
};

// Globally adaptive Gauss-Kronrod 15(7) on a finite interval.
// Splits the interval with the largest local error estimate until the
// summed estimate meets spec.relative_tolerance, and throws
// quadrature_error (carrying the achieved tolerance) if the subdivision
// budget runs out first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec = {});

// Fixed composite Gauss-Legendre rule (points_per_panel in {4, 8}),
// used as an independent brute-force cross-check of the adaptive engine.
double integrate_composite(const std::function<double(double)>& f,
                           double a, double b,
                           std::size_t panels,
                           int points_per_panel = 8);

} // namespace hapfso

#endif

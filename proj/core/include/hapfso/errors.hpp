#ifndef HAPFSO_ERRORS_HPP
#define HAPFSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hapfso {

// Adaptive quadrature failed to reach the requested tolerance within the
// subdivision budget. Carries the tolerance that was actually achieved so
// callers can decide whether the result is still usable.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double achieved_rel_tol)
        : std::runtime_error(what), achieved_rel_tol_(achieved_rel_tol) {}

    double achieved_rel_tol() const noexcept { return achieved_rel_tol_; }

private:
    double achieved_rel_tol_;
};

// A closed-form expression was evaluated outside its parameter region
// (e.g. a gamma-function argument at a pole, or a divergent moment).
class parameter_region_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Configuration file or key-level validation failure. CLI exit code 2.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hapfso

#endif

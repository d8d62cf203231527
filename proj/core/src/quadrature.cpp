#include "hapfso/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace hapfso {

QuadratureSpec::QuadratureSpec(double rel_tol, std::size_t max_subdiv)
    : relative_tolerance(rel_tol), max_subdivisions(max_subdiv) {
    if (!(rel_tol > 0.0) || rel_tol > 1e-3)
        throw std::invalid_argument("QuadratureSpec: relative_tolerance must be in (0, 1e-3]");
    if (max_subdiv < 16)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 16");
}

namespace {

// Gauss-Kronrod 15(7) nodes and weights (positive half, QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral;
    double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double res_k = kWgk[7] * fc;
    double res_g = kWg[3] * fc;

    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        res_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) // nodes 1, 3, 5 are the embedded Gauss-7 points
            res_g += kWg[j / 2] * (f1 + f2);
    }
    res_k *= h;
    res_g *= h;
    return {res_k, std::abs(res_k - res_g)};
}

struct Interval {
    double a, b, integral, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureSpec& spec) {
    if (a == b) return {0.0, 0.0, 0};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Interval> q;
    auto first = gk15(f, a, b);
    q.push({a, b, first.integral, first.error});
    double total = first.integral;
    double total_err = first.error;

    std::size_t splits = 0;
    while (total_err > spec.relative_tolerance * std::max(std::abs(total), 1e-300)) {
        if (splits >= spec.max_subdivisions) {
            const double achieved = total_err / std::max(std::abs(total), 1e-300);
            std::ostringstream msg;
            msg << "adaptive quadrature did not converge within " << spec.max_subdivisions
                << " subdivisions (achieved relative tolerance " << achieved << ")";
            throw quadrature_error(msg.str(), achieved);
        }
        Interval worst = q.top();
        q.pop();
        total -= worst.integral;
        total_err -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        auto left = gk15(f, worst.a, mid);
        auto right = gk15(f, mid, worst.b);
        q.push({worst.a, mid, left.integral, left.error});
        q.push({mid, worst.b, right.integral, right.error});
        total += left.integral + right.integral;
        total_err += left.error + right.error;
        ++splits;
    }

    return {sign * total, total_err, q.size()};
}

double integrate_composite(const std::function<double(double)>& f,
                           double a, double b,
                           std::size_t panels,
                           int points_per_panel) {
    // Gauss-Legendre nodes/weights on [-1, 1].
    static const double x4[2] = {0.339981043584856264802665759103,
                                 0.861136311594052575223946488893};
    static const double w4[2] = {0.652145154862546142626936050778,
                                 0.347854845137453857373063949222};
    static const double x8[4] = {0.183434642495649804939476142360,
                                 0.525532409916328985817739049189,
                                 0.796666477413626739591553936476,
                                 0.960289856497536231683560868569};
    static const double w8[4] = {0.362683783378361982965150449277,
                                 0.313706645877887287337962201987,
                                 0.222381034453374470544355994426,
                                 0.101228536290376259152531354310};

    if (points_per_panel != 4 && points_per_panel != 8)
        throw std::invalid_argument("integrate_composite: points_per_panel must be 4 or 8");
    if (panels == 0)
        throw std::invalid_argument("integrate_composite: panels must be positive");
    if (a == b) return 0.0;

    const double* xs = points_per_panel == 4 ? x4 : x8;
    const double* ws = points_per_panel == 4 ? w4 : w8;
    const int half = points_per_panel / 2;

    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        const double c = lo + 0.5 * h;
        double s = 0.0;
        for (int j = 0; j < half; ++j) {
            const double dx = 0.5 * h * xs[j];
            s += ws[j] * (f(c - dx) + f(c + dx));
        }
        sum += 0.5 * h * s;
    }
    return sum;
}

} // namespace hapfso

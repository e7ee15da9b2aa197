#pragma once

// Adaptive Dormand-Prince 5(4) integration for the two-component linear
// radial systems used by the shooting oracles. The state is renormalized
// whenever it grows past 1e150: the systems are linear, so rescaling leaves
// log-derivatives, matching Wronskians and node counts unchanged while
// keeping solutions that span hundreds of decades inside double range.

#include <algorithm>
#include <array>
#include <cmath>

#include "sdfdirac/errors.hpp"

namespace sdfdirac {

struct IntegrationResult {
    std::array<double, 2> y;
    int steps = 0;
    int sign_changes = 0; ///< sign changes of y[0] at accepted steps
};

namespace detail {

inline constexpr double dp_c[7] = {0.0,    1.0 / 5, 3.0 / 10, 4.0 / 5,
                                   8.0 / 9, 1.0,    1.0};
inline constexpr double dp_a[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
inline constexpr double dp_b5[7] = {35.0 / 384,    0.0,          500.0 / 1113, 125.0 / 192,
                                    -2187.0 / 6784, 11.0 / 84,   0.0};
inline constexpr double dp_b4[7] = {5179.0 / 57600,   0.0,         7571.0 / 16695, 393.0 / 640,
                                    -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

} // namespace detail

/// Integrates y' = rhs(t, y) from t0 to t1 (either direction).
template <class Rhs>
IntegrationResult integrate_renormalized(Rhs&& rhs, double t0, double t1,
                                         std::array<double, 2> y, double rtol = 1e-12,
                                         int max_steps = 400000) {
    using detail::dp_a;
    using detail::dp_b4;
    using detail::dp_b5;
    using detail::dp_c;

    const double dir = t1 > t0 ? 1.0 : -1.0;
    double t = t0;
    double h = (t1 - t0) * 1e-4;
    IntegrationResult out;
    double last_sign = y[0] > 0 ? 1.0 : (y[0] < 0 ? -1.0 : 0.0);

    while ((t1 - t) * dir > 0.0) {
        if ((t + h - t1) * dir > 0.0)
            h = t1 - t;
        if (std::abs(h) < 1e-15 * (std::abs(t) + 1.0))
            throw StiffnessFailure("integration step size underflow");

        std::array<std::array<double, 2>, 7> k;
        k[0] = rhs(t, y);
        for (int i = 1; i < 7; ++i) {
            std::array<double, 2> yi = y;
            for (int j = 0; j < i; ++j) {
                yi[0] += h * dp_a[i][j] * k[j][0];
                yi[1] += h * dp_a[i][j] * k[j][1];
            }
            k[i] = rhs(t + dp_c[i] * h, yi);
        }
        std::array<double, 2> y5 = y, y4 = y;
        for (int j = 0; j < 7; ++j) {
            y5[0] += h * dp_b5[j] * k[j][0];
            y5[1] += h * dp_b5[j] * k[j][1];
            y4[0] += h * dp_b4[j] * k[j][0];
            y4[1] += h * dp_b4[j] * k[j][1];
        }

        double err = 0.0;
        for (int c = 0; c < 2; ++c) {
            const double sc = rtol * std::max(std::abs(y[c]), std::abs(y5[c])) + 1e-300;
            const double e = (y5[c] - y4[c]) / sc;
            err += e * e;
        }
        err = std::sqrt(0.5 * err);

        if (err <= 1.0) {
            t += h;
            y = y5;
            const double s = y[0] > 0 ? 1.0 : (y[0] < 0 ? -1.0 : 0.0);
            if (s != 0.0 && last_sign != 0.0 && s != last_sign)
                ++out.sign_changes;
            if (s != 0.0)
                last_sign = s;
            const double m = std::max(std::abs(y[0]), std::abs(y[1]));
            if (m > 1e150) {
                y[0] /= m;
                y[1] /= m;
            }
        }
        const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.2, 5.0);

        if (++out.steps > max_steps)
            throw StiffnessFailure("integration exceeded the step budget");
    }
    out.y = y;
    return out;
}

} // namespace sdfdirac

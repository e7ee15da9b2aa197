#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "sdfdirac/errors.hpp"

namespace sdfdirac {

struct QuadratureRule {
    std::vector<double> x; ///< nodes on [-1, 1]
    std::vector<double> w;
};

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence.
inline QuadratureRule gauss_legendre(int n) {
    if (n < 1)
        throw ParameterOutOfRange("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15)
                break;
        }
        rule.x[i - 1] = -z;
        rule.x[n - i] = z;
        rule.w[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - i] = rule.w[i - 1];
    }
    return rule;
}

/// Composite Gauss-Legendre integral of f over [a, b]: `panels` equal
/// subintervals, `order` points each.
inline double integrate_gl(const std::function<double(double)>& f, double a, double b,
                           int panels = 64, int order = 32) {
    const QuadratureRule rule = gauss_legendre(order);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < order; ++i)
            s += rule.w[i] * f(mid + 0.5 * h * rule.x[i]);
        total += 0.5 * h * s;
    }
    return total;
}

} // namespace sdfdirac

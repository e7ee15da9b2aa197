#pragma once

#include <cmath>

#include "sdfdirac/errors.hpp"

namespace sdfdirac {

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the standard three-term
/// recurrence. Valid for alpha, beta > -1; x is unrestricted but the
/// orthogonality interval is [-1, 1].
inline double jacobi(int n, double alpha, double beta, double x) {
    if (n < 0)
        throw ParameterOutOfRange("jacobi: degree must be >= 0");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw ParameterOutOfRange("jacobi: need alpha > -1 and beta > -1");
    if (n == 0)
        return 1.0;
    double pm = 1.0;
    double pc = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    for (int m = 2; m <= n; ++m) {
        const double c = 2.0 * m + alpha + beta;
        const double a1 = 2.0 * m * (m + alpha + beta) * (c - 2.0);
        const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        const double a3 = (c - 2.0) * (c - 1.0) * c;
        const double a4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * c;
        const double pn = ((a2 + a3 * x) * pc - a4 * pm) / a1;
        pm = pc;
        pc = pn;
    }
    return pc;
}

} // namespace sdfdirac

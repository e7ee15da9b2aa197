#pragma once

// Diagnostics for the centrifugal-term replacement
//   f1(r) = 1/r^2   ~   f2(r) = a^2 / (1 - e^{-a r})^2
// and the per-state eigenvalue error it introduces.

#include <cmath>
#include <vector>

#include "sdfdirac/errors.hpp"
#include "sdfdirac/shooting.hpp"
#include "sdfdirac/spectrum.hpp"

namespace sdfdirac {

struct ApproxCurvePoint {
    double r;
    double f1; ///< 1/r^2
    double f2; ///< a^2/(1 - e^{-a r})^2, >= f1 for every r > 0
};

inline std::vector<ApproxCurvePoint> approx_curves(double a, const std::vector<double>& r_grid) {
    if (!(a > 0.0))
        throw DomainError("approx_curves requires a > 0");
    std::vector<ApproxCurvePoint> out;
    out.reserve(r_grid.size());
    for (const double r : r_grid) {
        if (!(r > 0.0))
            throw DomainError("approx_curves requires r > 0");
        const double om = -std::expm1(-a * r); // 1 - e^{-ar}
        out.push_back(ApproxCurvePoint{r, 1.0 / (r * r), a * a / (om * om)});
    }
    return out;
}

/// Eigenvalue of one state solved twice: with the replaced terms (the
/// analytic route) and with the exact 1/r^2 and 1/r terms. delta_E isolates
/// the replacement error; it grows with the range parameter a.
struct ApproximationErrorReport {
    double a;
    double E_pekeris;
    double E_exact;
    double delta_E; ///< E_exact - E_pekeris
    int nodes_pekeris;
    int nodes_exact;
};

inline ApproximationErrorReport approximation_error_report(const ProblemSpec& spec) {
    const ProblemSpec s = validate_problem(spec);

    // analytic root seeds the z-space bracket
    const auto roots = solve_energy(s);
    double seed = roots.front().E;
    for (const auto& r : roots)
        if (r.admissible) {
            seed = r.E;
            break;
        }
    const auto pk = shoot_eigenvalue(s, Interval{seed - 1e-6, seed + 1e-6});

    // Walk outward from the replaced-term eigenvalue, converging every
    // mismatch sign change met on the way, until the exact eigenvalue with
    // the same node count as the state appears. Nearby exact levels belong
    // to neighbouring n and must not be mistaken for it.
    auto exact_mismatch = [&](double E) { return detail::r_match(s, E, 1e-10); };
    const auto m0 = exact_mismatch(pk.E);
    if (!m0)
        throw EmptyWindow("exact-term oracle: seed energy is inadmissible");

    double step = 1e-4;
    double prev_up_E = pk.E, prev_dn_E = pk.E;
    double prev_up_m = m0->mismatch, prev_dn_m = m0->mismatch;
    for (int i = 0; i < 80; ++i) {
        for (const double dir : {+1.0, -1.0}) {
            double& prev_E = dir > 0 ? prev_up_E : prev_dn_E;
            double& prev_m = dir > 0 ? prev_up_m : prev_dn_m;
            const double E1 = pk.E + dir * step;
            const auto m1 = exact_mismatch(E1);
            if (!m1)
                continue;
            if (std::signbit(m1->mismatch) != std::signbit(prev_m)) {
                const Interval bracket{std::min(prev_E, E1), std::max(prev_E, E1)};
                const auto ex = shoot_eigenvalue_exact(s, bracket);
                if (ex.nodes == s.state.n)
                    return ApproximationErrorReport{s.potential.a, pk.E,     ex.E,
                                                    ex.E - pk.E,   pk.nodes, ex.nodes};
            }
            prev_E = E1;
            prev_m = m1->mismatch;
        }
        step *= 1.3;
    }
    throw NoSignChange("exact-term oracle: no matching-node eigenvalue near " +
                       std::to_string(pk.E));
}

} // namespace sdfdirac

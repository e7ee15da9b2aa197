#pragma once

// Shooting-method verification of the analytic levels.
//
// The z-space equation F'' + F'/z - N(z)/(z^2(1-z)^2) F = 0 is integrated in
// logarithmic variables, which regularizes both singular endpoints:
//   t = ln z:      F_tt = [N(z)/(1-z)^2] F
//   s = ln(1-z):   F_ss = F_s/(1-w) + [N(1-w)/(1-w)^2] F,  w = 1-z
// Series starts carry the leading power plus its first correction. The two
// branches meet at z = 1/2 and the eigenvalue condition is a vanishing
// scale-invariant Wronskian.
//
// The r-space oracle integrates the radial equation with the exact 1/r^2 and
// 1/r terms (no Pekeris-type replacement), the route used to quantify the
// replacement error.

#include <cmath>
#include <optional>

#include "sdfdirac/errors.hpp"
#include "sdfdirac/model.hpp"
#include "sdfdirac/ode.hpp"
#include "sdfdirac/spectrum.hpp"

namespace sdfdirac {

struct ShootingResult {
    double E;
    double mismatch;       ///< matching Wronskian at the converged energy
    int integration_steps; ///< total over both branches, final iteration
    int nodes;             ///< interior sign changes of the solution
};

namespace detail {

struct MatchState {
    double mismatch;
    int steps;
    int nodes;
};

/// Both-sided integration of the z-space equation at trial energy E.
inline std::optional<MatchState> z_match(const ProblemSpec& s, double E, double rtol) {
    const auto poly = ode_polynomial(s, E);
    const double q = poly.P0 + poly.P1 + poly.P2 + 0.25;
    if (poly.P0 < 0.0 || q < 0.0)
        return std::nullopt;
    const double delta = std::sqrt(poly.P0);
    const double sq = std::sqrt(q);

    constexpr double eps = 1e-8; // endpoint offsets in z and 1-z
    const double t0 = std::log(eps), tm = std::log(0.5);

    auto left_rhs = [&](double t, const std::array<double, 2>& y) {
        const double z = std::exp(t);
        const double om = 1.0 - z;
        return std::array<double, 2>{y[1], poly.eval(z) / (om * om) * y[0]};
    };
    // F ~ z^delta (1 + c1 z); integrate the ratio F/z^delta's log-form
    const double c1 = (poly.P1 + 2.0 * poly.P0) / (2.0 * delta + 1.0);
    const std::array<double, 2> yl0{1.0 + c1 * eps, delta * (1.0 + c1 * eps) + c1 * eps};
    const auto left = integrate_renormalized(left_rhs, t0, tm, yl0, rtol);

    auto right_rhs = [&](double sv, const std::array<double, 2>& y) {
        const double w = std::exp(sv);
        const double z = 1.0 - w;
        return std::array<double, 2>{y[1],
                                     y[1] / (1.0 - w) + poly.eval(z) / (z * z) * y[0]};
    };
    // F ~ w^(sq+1/2) (1 + d1 w)
    const double sx = 0.5 + sq;
    const double d1 = (sx + 2.0 * q - 0.5 - poly.P1 - 2.0 * poly.P2) / (2.0 * sx);
    const std::array<double, 2> yr0{1.0 + d1 * eps, sx * (1.0 + d1 * eps) + d1 * eps};
    const auto right = integrate_renormalized(right_rhs, t0, tm, yr0, rtol);

    // log-variable slopes to z-derivatives at z = w = 1/2
    const double FL = left.y[0], dFL = left.y[1] / 0.5;
    const double FR = right.y[0], dFR = -right.y[1] / 0.5;
    const double mism = (dFL * FR - dFR * FL) /
                        (std::hypot(FL, dFL) * std::hypot(FR, dFR));
    return MatchState{mism, left.steps + right.steps,
                      left.sign_changes + right.sign_changes};
}

template <class Match>
ShootingResult bisect_on_match(Match&& match, Interval bracket, double E_tol) {
    auto lo = match(bracket.lo);
    auto hi = match(bracket.hi);
    if (!lo || !hi)
        throw EmptyWindow("shooting bracket extends outside the admissible window");
    if (std::signbit(lo->mismatch) == std::signbit(hi->mismatch))
        throw NoSignChange("matching mismatch has the same sign at both bracket ends");
    double a = bracket.lo, b = bracket.hi;
    bool lo_neg = lo->mismatch < 0.0;
    MatchState last = *hi;
    while (b - a > E_tol) {
        const double m = 0.5 * (a + b);
        const auto mm = match(m);
        if (!mm)
            throw EmptyWindow("trial energy left the admissible window");
        if ((mm->mismatch < 0.0) == lo_neg)
            a = m;
        else
            b = m;
        last = *mm;
    }
    const double E = 0.5 * (a + b);
    return ShootingResult{E, last.mismatch, last.steps, last.nodes};
}

} // namespace detail

/// Eigenvalue of the z-space (Pekeris-form) equation inside `bracket`,
/// bisected until the bracket width is below `E_tol`.
inline ShootingResult shoot_eigenvalue(const ProblemSpec& spec, Interval bracket,
                                       double E_tol = 1e-10, double rtol = 1e-12) {
    const ProblemSpec s = validate_problem(spec);
    return detail::bisect_on_match(
        [&](double E) { return detail::z_match(s, E, rtol); }, bracket, E_tol);
}

namespace detail {

/// r-space matching with the exact 1/r^2 and 1/r terms. The pseudospin limit
/// is the kappa -> kappa - 1 image of the spin system (matching the level
/// equations), so a single form covers both:
///   F'' = [ (kk + (2 k_eff+1) A z + A^2 z^2)/r^2 + A a z / r + u (m2 +- W(r)) ] F
/// with z = e^{-a r}, W the well built on the level shape constant, and
///   spin:        k_eff = kappa,     u = M+E-C,  m2 = M-E,  well sign +
///   pseudospin:  k_eff = kappa - 1, u = M-E+C,  m2 = M+E,  well sign -
inline std::optional<MatchState> r_match(const ProblemSpec& s, double E, double rtol) {
    const bool spin = s.limit.kind == Symmetry::spin;
    const double keff = spin ? s.state.kappa : s.state.kappa - 1.0;
    const double u = spin ? s.M + E - s.limit.C : s.M - E + s.limit.C;
    const double m2 = spin ? s.M - E : s.M + E;
    const double well_sign = spin ? +1.0 : -1.0;
    const double A = s.tensor.A;
    const double a = s.potential.a;
    const double D = s.potential.D;
    const double b = level_shape_b(s.potential);
    const double kk = keff * (keff + 1.0);

    const double asym = u * m2; // V -> 0, 1/r^2 -> 0
    if (asym <= 0.0)
        return std::nullopt; // outside the exact equation's bound spectrum

    auto rhs_factor = [&](double r) {
        const double z = std::exp(-a * r);
        const double em = std::expm1(a * r);
        const double well = D * b * (b / (em * em) - 2.0 / em);
        const double cent = (kk + (2.0 * keff + 1.0) * A * z + A * A * z * z) / (r * r);
        return cent + A * a * z / r + u * (m2 + well_sign * well);
    };
    auto log_rhs = [&](double t, const std::array<double, 2>& y) {
        const double r = std::exp(t);
        return std::array<double, 2>{y[1], y[1] + r * r * rhs_factor(r) * y[0]};
    };

    const double r0 = 1e-6;
    const double r_max = 200.0 / a;
    const double r_m = std::log(1.0 + b) / a; // well minimum
    // indicial exponent at r -> 0. The well itself diverges like
    // D b^2/(a r)^2 there, so gamma(gamma-1) collects the centrifugal,
    // tensor-squared and well cores; the combination equals the z-side
    // exponent (eta+1)/2.
    const double core =
        (A + keff) * (A + keff + 1.0) + well_sign * u * D * b * b / (a * a);
    if (core < -0.25)
        return std::nullopt;
    const double g = 0.5 + std::sqrt(0.25 + core);
    // first-order series correction F ~ r^g (1 + c1 r)
    const double v1 = well_sign * u * (-D * b * (b + 2.0) / a) + A * a -
                      a * ((2.0 * keff + 1.0) * A + 2.0 * A * A);
    const double c1 = v1 / (2.0 * g);
    const std::array<double, 2> y0{1.0 + c1 * r0, g * (1.0 + c1 * r0) + c1 * r0};
    const auto left =
        integrate_renormalized(log_rhs, std::log(r0), std::log(r_m), y0, rtol);
    const double kinf = std::sqrt(asym);
    const auto right = integrate_renormalized(log_rhs, std::log(r_max), std::log(r_m),
                                              {1.0, -kinf * r_max}, rtol);

    const double FL = left.y[0], dFL = left.y[1] / r_m;
    const double FR = right.y[0], dFR = right.y[1] / r_m;
    const double mism = (dFL * FR - dFR * FL) /
                        (std::hypot(FL, dFL) * std::hypot(FR, dFR));
    return MatchState{mism, left.steps + right.steps,
                      left.sign_changes + right.sign_changes};
}

} // namespace detail

/// Eigenvalue of the radial equation with the exact centrifugal and tensor
/// 1/r terms (no Pekeris-type replacement), on [1e-6, 200/a] with matching
/// at the well minimum.
inline ShootingResult shoot_eigenvalue_exact(const ProblemSpec& spec, Interval bracket,
                                             double E_tol = 1e-10, double rtol = 1e-10) {
    const ProblemSpec s = validate_problem(spec);
    return detail::bisect_on_match(
        [&](double E) { return detail::r_match(s, E, rtol); }, bracket, E_tol);
}

} // namespace sdfdirac

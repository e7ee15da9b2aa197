#pragma once

// Transcendental level equations for both symmetry limits, admissible
// energy windows, and the bracketing root finder.
//
// Everything here works off the level-equation shape constant
// level_shape_b(p) (see model.hpp) and, in the pseudospin limit, off the
// kappa -> kappa - 1 image of the spin system, which is the form the
// reference tables follow.

#include <cmath>
#include <optional>
#include <vector>

#include "sdfdirac/errors.hpp"
#include "sdfdirac/model.hpp"

namespace sdfdirac {

/// Dimensionless coefficients of the hypergeometric-form radial equation:
/// spin limit      xi = (M+E-C_s)  D b / a^2,  zeta = (M+E-C_s)(M-E) / a^2
/// pseudospin      xi = (E-M-C_ps) D b / a^2,  zeta = (M-E+C_ps)(M+E) / a^2
/// with b = level_shape_b.
struct CoefficientSet {
    double xi;
    double zeta;
    Symmetry kind;
};

inline CoefficientSet spin_coefficients(double E, double M, double C_s,
                                        const PotentialParams& p) {
    const double b = level_shape_b(p);
    const double a2 = p.a * p.a;
    return CoefficientSet{(M + E - C_s) * p.D * b / a2, (M + E - C_s) * (M - E) / a2,
                          Symmetry::spin};
}

inline CoefficientSet pseudospin_coefficients(double E, double M, double C_ps,
                                              const PotentialParams& p) {
    const double b = level_shape_b(p);
    const double a2 = p.a * p.a;
    return CoefficientSet{(E - M - C_ps) * p.D * b / a2, (M - E + C_ps) * (M + E) / a2,
                          Symmetry::pseudospin};
}

inline CoefficientSet coefficients(double E, const ProblemSpec& s) {
    return s.limit.kind == Symmetry::spin
               ? spin_coefficients(E, s.M, s.limit.C, s.potential)
               : pseudospin_coefficients(E, s.M, s.limit.C, s.potential);
}

/// kappa(kappa+1) in the spin limit, kappa(kappa-1) in the pseudospin limit.
inline double centrifugal_product(const ProblemSpec& s) {
    const double k = s.state.kappa;
    return s.limit.kind == Symmetry::spin ? k * (k + 1.0) : k * (k - 1.0);
}

/// A + kappa + 1/2 (spin) or A + kappa - 1/2 (pseudospin).
inline double half_shifted_kappa(const ProblemSpec& s) {
    const double k = s.state.kappa;
    return s.limit.kind == Symmetry::spin ? s.tensor.A + k + 0.5 : s.tensor.A + k - 0.5;
}

/// Numerator polynomial N(z) = P2 z^2 + P1 z + P0 of the z-space equation
///   F'' + F'/z - N(z) / (z^2 (1-z)^2) F = 0,  z = e^{-a r}.
/// The pseudospin P1 carries 2 A kappa, the kappa -> kappa-1 image of the
/// spin coefficient 2 A (kappa+1); that is the form consistent with the
/// pseudospin level equation and the reference tables.
struct OdePolynomial {
    double P0, P1, P2;

    double eval(double z) const { return (P2 * z + P1) * z + P0; }
};

inline OdePolynomial ode_polynomial(const ProblemSpec& s, double E) {
    const auto [xi, zeta, kind] = coefficients(E, s);
    const double A = s.tensor.A;
    const double b = level_shape_b(s.potential);
    const double kk = centrifugal_product(s);
    const double tensor_linear =
        kind == Symmetry::spin ? 2.0 * A * (s.state.kappa + 1.0) : 2.0 * A * s.state.kappa;
    return OdePolynomial{kk + zeta, tensor_linear - 2.0 * xi - 2.0 * zeta,
                         A * A - A + xi * (b + 2.0) + zeta};
}

namespace detail {

inline std::optional<double> level_residual(double E, const ProblemSpec& s) {
    if (!std::isfinite(E))
        throw DomainError("energy residual: E must be finite");
    const auto [xi, zeta, kind] = coefficients(E, s);
    const double b = level_shape_b(s.potential);
    const double half = half_shifted_kappa(s);
    const double q1 = half * half + xi * b;
    const double q2 = centrifugal_product(s) + zeta;
    if (q1 < 0.0 || q2 < 0.0)
        return std::nullopt; // outside the admissible window
    const double A = s.tensor.A;
    const double w = s.state.n + 0.5 + std::sqrt(q1) + std::sqrt(q2);
    return w * w - A * A + A - xi * (b + 2.0) - zeta;
}

} // namespace detail

/// Spin-limit level residual; a bound state satisfies R_s(E) = 0.
/// Undefined (nullopt) where a radicand is negative.
inline std::optional<double> spin_residual(double E, const ProblemSpec& s) {
    if (s.limit.kind != Symmetry::spin)
        throw DomainError("spin_residual requires a spin-limit spec");
    return detail::level_residual(E, s);
}

/// Pseudospin-limit level residual, same contract as spin_residual.
inline std::optional<double> pseudospin_residual(double E, const ProblemSpec& s) {
    if (s.limit.kind != Symmetry::pseudospin)
        throw DomainError("pseudospin_residual requires a pseudospin-limit spec");
    return detail::level_residual(E, s);
}

inline std::optional<double> energy_residual(double E, const ProblemSpec& s) {
    return detail::level_residual(E, s);
}

struct Interval {
    double lo, hi;

    double width() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Maximal subintervals of [E_min, E_max] on which the level residual is
/// defined (both radicands nonnegative). The zeta radicand is a concave
/// parabola in E and the xi radicand is increasing linear, so the window is
/// a single interval computed in closed form.
inline std::vector<Interval> admissible_windows(const ProblemSpec& s, double E_min,
                                                double E_max) {
    if (E_min > E_max)
        throw DomainError("admissible_windows: E_min must be <= E_max");
    const double a2 = s.potential.a * s.potential.a;
    const double b = level_shape_b(s.potential);
    const double kk = centrifugal_product(s);
    const double half = half_shifted_kappa(s);
    const double M = s.M;
    const double C = s.limit.C;

    // q2(E) = kk + zeta(E) = (-E^2 + beta E + gamma) / a2 + kk
    // spin:       zeta a2 = (M+E-C)(M-E) -> beta = C, gamma = M^2 - C M
    // pseudospin: zeta a2 = (M-E+C)(M+E) -> beta = C, gamma = M^2 + C M
    const double beta = C;
    const double gamma =
        s.limit.kind == Symmetry::spin ? M * M - C * M : M * M + C * M;
    const double disc = beta * beta + 4.0 * (gamma + kk * a2);
    if (disc < 0.0)
        throw EmptyWindow("zeta radicand is negative for every E");
    const double root = std::sqrt(disc);
    double lo = 0.5 * (beta - root);
    double hi = 0.5 * (beta + root);

    // q1(E) >= 0: increasing linear in E with slope D b^2 / a2
    const double slope = s.potential.D * b * b / a2;
    const double E_q1 = s.limit.kind == Symmetry::spin
                            ? C - M - half * half / slope
                            : M + C - half * half / slope;
    lo = std::max(lo, E_q1);

    lo = std::max(lo, E_min);
    hi = std::min(hi, E_max);
    if (lo > hi)
        throw EmptyWindow("no admissible energy in the requested range");
    return {Interval{lo, hi}};
}

struct SearchConfig {
    int grid_points = 2000;         ///< scan resolution per admissible window
    double bracket_width = 1e-12;   ///< bisection stops at this bracket width
    std::optional<double> E_min;    ///< default -(M + |C| + 2D)
    std::optional<double> E_max;    ///< default +(M + |C| + 2D)
};

/// A solved eigenvalue. `admissible` records delta > 0, i.e. the state decays
/// at large r and is normalizable.
struct EnergyRoot {
    double E;
    double residual_at_root;
    Interval bracket;
    bool admissible;
    int iterations;
};

/// Scans every admissible window on a uniform grid, brackets each sign change
/// between consecutive defined residual values, and refines by bisection.
/// Returns all roots sorted by energy.
inline std::vector<EnergyRoot> solve_energy(const ProblemSpec& spec,
                                            const SearchConfig& cfg = {}) {
    const ProblemSpec s = validate_problem(spec);
    const double span = s.M + std::abs(s.limit.C) + 2.0 * s.potential.D;
    const double E_min = cfg.E_min.value_or(-span);
    const double E_max = cfg.E_max.value_or(span);
    if (cfg.grid_points < 2)
        throw ParameterOutOfRange("solve_energy: grid_points must be >= 2");

    const auto windows = admissible_windows(s, E_min, E_max);
    std::vector<EnergyRoot> roots;
    for (const auto& win : windows) {
        // stay a hair inside the window edges, where the radicands vanish
        const double pad = 1e-13 * std::max(1.0, std::abs(win.lo) + std::abs(win.hi));
        const double lo = win.lo + pad;
        const double hi = win.hi - pad;
        if (!(hi > lo))
            continue;
        const int n = cfg.grid_points;
        auto at = [&](int i) { return lo + (hi - lo) * i / (n - 1); };

        std::optional<double> prev = energy_residual(at(0), s);
        for (int i = 1; i < n; ++i) {
            const double E1 = at(i);
            const std::optional<double> cur = energy_residual(E1, s);
            if (prev && cur && *prev != 0.0 && std::signbit(*prev) != std::signbit(*cur)) {
                double a_ = at(i - 1), b_ = E1;
                double fa = *prev;
                int it = 0;
                while (b_ - a_ > cfg.bracket_width && it < 200) {
                    const double m = 0.5 * (a_ + b_);
                    const auto fm = energy_residual(m, s);
                    if (!fm)
                        break; // can't refine past an undefined patch
                    if (std::signbit(*fm) == std::signbit(fa)) {
                        a_ = m;
                        fa = *fm;
                    } else {
                        b_ = m;
                    }
                    ++it;
                }
                const double E = 0.5 * (a_ + b_);
                const auto rres = energy_residual(E, s);
                const auto poly = ode_polynomial(s, E);
                roots.push_back(EnergyRoot{E, rres ? *rres : 0.0, Interval{a_, b_},
                                           poly.P0 > 0.0, it});
            }
            prev = cur;
        }
    }
    if (roots.empty())
        throw NoRootFound("no residual sign change in " + std::to_string(windows.size()) +
                          " admissible window(s) over [" + std::to_string(E_min) + ", " +
                          std::to_string(E_max) + "]");
    return roots;
}

/// Degenerate doublet partner of kappa: -kappa-1 (spin), 1-kappa (pseudospin).
/// Returns nullopt when the partner would be kappa = 0 (no partner exists).
inline std::optional<int> doublet_partner(int kappa, const SymmetryLimit& limit) {
    if (kappa == 0)
        throw InvalidKappa("kappa must be nonzero");
    const int partner = limit.kind == Symmetry::spin ? -kappa - 1 : 1 - kappa;
    if (partner == 0)
        return std::nullopt;
    return partner;
}

} // namespace sdfdirac

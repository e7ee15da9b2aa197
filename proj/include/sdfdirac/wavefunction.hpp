#pragma once

// Analytic spinor radial components, the coupled-equation partner component,
// and numerical normalization.

#include <cmath>
#include <functional>
#include <vector>

#include "sdfdirac/errors.hpp"
#include "sdfdirac/jacobi.hpp"
#include "sdfdirac/model.hpp"
#include "sdfdirac/quadrature.hpp"
#include "sdfdirac/spectrum.hpp"

namespace sdfdirac {

/// Boundary exponents of the solved component:
/// value ~ z^delta at z -> 0 (r -> infinity, decay e^{-a delta r}) and
/// ~ (1-z)^{eta/2 + 1/2} at z -> 1 (r -> 0).
struct ShapeExponents {
    double delta;
    double eta;
};

/// Throws NonNormalizable when delta would not be real and positive.
inline ShapeExponents shape_exponents(const ProblemSpec& s, double E) {
    const auto poly = ode_polynomial(s, E);
    if (!(poly.P0 > 0.0))
        throw NonNormalizable("state is not normalizable: delta^2 = " +
                              std::to_string(poly.P0) + " <= 0");
    const double q = poly.P0 + poly.P1 + poly.P2 + 0.25;
    if (q < 0.0)
        throw NonNormalizable("state is not normalizable: eta radicand < 0");
    return ShapeExponents{std::sqrt(poly.P0), 2.0 * std::sqrt(q)};
}

/// One sample of a radial amplitude, carrying both r and z = e^{-a r}.
struct RadialSample {
    double r;
    double z;
    double value;
};

namespace detail {

inline double component_value(double r, const ProblemSpec& s, double E,
                              const ShapeExponents& se) {
    if (!(r > 0.0))
        throw DomainError("radial component requires r > 0");
    const double z = std::exp(-s.potential.a * r);
    return std::pow(z, se.delta) * std::pow(1.0 - z, 0.5 * se.eta + 0.5) *
           jacobi(s.state.n, 2.0 * se.delta, se.eta, 1.0 - 2.0 * z);
}

} // namespace detail

/// Unnormalized upper spinor component F(r) in the spin limit:
/// z^delta (1-z)^{eta/2+1/2} P_n^{(2 delta, eta)}(1-2z).
inline double upper_component_spin(double r, const EnergyRoot& root, const ProblemSpec& s) {
    if (s.limit.kind != Symmetry::spin)
        throw DomainError("upper_component_spin requires a spin-limit spec");
    return detail::component_value(r, s, root.E, shape_exponents(s, root.E));
}

/// Unnormalized lower spinor component G(r) in the pseudospin limit.
inline double lower_component_pseudospin(double r, const EnergyRoot& root,
                                         const ProblemSpec& s) {
    if (s.limit.kind != Symmetry::pseudospin)
        throw DomainError("lower_component_pseudospin requires a pseudospin-limit spec");
    return detail::component_value(r, s, root.E, shape_exponents(s, root.E));
}

/// Solved component for either limit.
inline double radial_component(double r, const EnergyRoot& root, const ProblemSpec& s) {
    return detail::component_value(r, s, root.E, shape_exponents(s, root.E));
}

/// Logarithmically spaced grid, the default sampling for exports:
/// 2000 points on [1e-4/a, 200/a] unless overridden.
inline std::vector<double> log_grid(double r_min, double r_max, int points) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw DomainError("log_grid requires 0 < r_min < r_max");
    if (points < 2)
        throw ParameterOutOfRange("log_grid requires at least 2 points");
    std::vector<double> r(points);
    const double l0 = std::log(r_min), l1 = std::log(r_max);
    for (int i = 0; i < points; ++i)
        r[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    return r;
}

inline std::vector<RadialSample> sample_component(const std::vector<double>& grid,
                                                  const EnergyRoot& root,
                                                  const ProblemSpec& s) {
    std::vector<RadialSample> out;
    out.reserve(grid.size());
    const auto se = shape_exponents(s, root.E);
    for (const double r : grid)
        out.push_back(RadialSample{r, std::exp(-s.potential.a * r),
                                   detail::component_value(r, s, root.E, se)});
    return out;
}

/// Partner spinor component through the first-order coupled equations, with
/// derivatives by central differences on the sample grid (one-sided at the
/// ends). Spin limit, primary F:
///   G(r) = [F' + (kappa/r) F - U(r) F] / (M + E - C_s)
/// pseudospin limit, primary G:
///   F(r) = [G' - (kappa/r) G + U(r) G] / (M - E + C_ps)
inline std::vector<RadialSample> partner_component(const std::vector<RadialSample>& primary,
                                                   const EnergyRoot& root,
                                                   const ProblemSpec& s) {
    const std::size_t n = primary.size();
    if (n < 3)
        throw ParameterOutOfRange("partner_component needs at least 3 samples");
    const double den = s.limit.kind == Symmetry::spin ? s.M + root.E - s.limit.C
                                                      : s.M - root.E + s.limit.C;
    if (std::abs(den) < 1e-12)
        throw EnergyDegenerateDenominator(
            "coupling denominator vanishes: |M -+ (E - C)| < 1e-12");

    const double kap_sign = s.limit.kind == Symmetry::spin ? +1.0 : -1.0;
    std::vector<RadialSample> out(primary);
    auto deriv = [&](std::size_t i) {
        if (i == 0)
            return (primary[1].value - primary[0].value) / (primary[1].r - primary[0].r);
        if (i == n - 1)
            return (primary[n - 1].value - primary[n - 2].value) /
                   (primary[n - 1].r - primary[n - 2].r);
        // three-point formula on a nonuniform grid
        const double hl = primary[i].r - primary[i - 1].r;
        const double hr = primary[i + 1].r - primary[i].r;
        return (primary[i + 1].value * hl * hl - primary[i - 1].value * hr * hr +
                primary[i].value * (hr * hr - hl * hl)) /
               (hl * hr * (hl + hr));
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double r = primary[i].r;
        const double U = tensor_potential(r, s.tensor, s.potential.a);
        const double coupling = kap_sign * (s.state.kappa / r - U);
        out[i].value = (deriv(i) + coupling * primary[i].value) / den;
    }
    return out;
}

struct Normalization {
    double constant; ///< multiply samples by this to get unit L2 norm
    double r_max;    ///< outer integration limit actually used
};

/// Normalization constant N with integral of (N f)^2 over [0, r_max] equal
/// to 1, by composite Gauss-Legendre quadrature. r_max is the first grid
/// point past the peak where f^2 drops below 1e-14 of its maximum; failing
/// that within r_max_cap the tail is declared non-convergent.
inline Normalization normalization_constant(const std::function<double(double)>& f,
                                            double r_max_cap) {
    if (!(r_max_cap > 0.0))
        throw DomainError("normalization: r_max_cap must be > 0");
    constexpr int scan_points = 4000;
    constexpr double tail_fraction = 1e-14;

    const auto scan = log_grid(1e-9 * r_max_cap, r_max_cap, scan_points);
    double peak = 0.0;
    std::size_t peak_idx = 0;
    std::vector<double> f2(scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
        f2[i] = f(scan[i]) * f(scan[i]);
        if (f2[i] > peak) {
            peak = f2[i];
            peak_idx = i;
        }
    }
    if (peak == 0.0)
        throw ZeroNorm("normalization: function vanishes on the whole grid");

    double r_max = -1.0;
    for (std::size_t i = peak_idx; i < scan.size(); ++i) {
        if (f2[i] < tail_fraction * peak) {
            r_max = scan[i];
            break;
        }
    }
    if (r_max < 0.0)
        throw NonConvergentTail("normalization: integrand tail stays above 1e-14 of peak up to r_max = " +
                                std::to_string(r_max_cap));

    const double integral =
        integrate_gl([&](double r) { return f(r) * f(r); }, 0.0, r_max, 128, 32);
    if (!(integral > 0.0))
        throw ZeroNorm("normalization: vanishing norm integral");
    return Normalization{1.0 / std::sqrt(integral), r_max};
}

/// Rescales sampled values to unit norm; `f` must be the continuous function
/// the samples were drawn from.
inline std::pair<std::vector<RadialSample>, Normalization>
normalize(std::vector<RadialSample> samples, const std::function<double(double)>& f,
          double r_max_cap) {
    const Normalization norm = normalization_constant(f, r_max_cap);
    for (auto& s : samples)
        s.value *= norm.constant;
    return {std::move(samples), norm};
}

} // namespace sdfdirac

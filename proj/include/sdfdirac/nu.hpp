#pragma once

// Independent reconstruction of the quantization condition for
// hypergeometric-type equations
//
//   psi'' + (tau~(z)/sigma(z)) psi' + (sigma~(z)/sigma(z)^2) psi = 0
//
// One determines a linear pi(z) such that the radicand of
//   pi = (sigma' - tau~)/2 +- sqrt( ((sigma'-tau~)/2)^2 - sigma~ + k sigma )
// is a perfect square, then tau = tau~ + 2 pi must have tau' < 0, and the
// eigenvalue condition is lambda = k + pi' equal to
// lambda_n = -n tau' - n(n-1)/2 sigma''.
//
// This path never touches the closed-form level residuals in spectrum.hpp;
// it is used as a second, independent route to the same quantization.

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "sdfdirac/errors.hpp"
#include "sdfdirac/spectrum.hpp"

namespace sdfdirac {

/// Coefficients {c0, c1, c2} of c0 + c1 z + c2 z^2.
using Quadratic = std::array<double, 3>;
/// Coefficients {c0, c1} of c0 + c1 z.
using Linear = std::array<double, 2>;

struct NUProblem {
    Quadratic sigma;       ///< at most second degree
    Linear tau_tilde;      ///< first degree
    Quadratic sigma_tilde; ///< at most second degree
};

struct NUSolution {
    Linear pi;
    double k;
    Linear tau;
    double lambda; ///< k + pi'

    /// lambda_n = -n tau' - n(n-1)/2 sigma''
    double lambda_n(int n, const NUProblem& p) const {
        const double sigma_dd = 2.0 * p.sigma[2];
        return -n * tau[1] - 0.5 * n * (n - 1.0) * sigma_dd;
    }
};

/// The z-space instance of the problem at energy E:
/// sigma = z(1-z), tau~ = 1-z, sigma~ = -(P2 z^2 + P1 z + P0).
inline NUProblem nu_problem(const ProblemSpec& s, double E) {
    const auto [P0, P1, P2] = ode_polynomial(s, E);
    return NUProblem{{0.0, 1.0, -1.0}, {1.0, -1.0}, {-P0, -P1, -P2}};
}

/// Builds pi, k, tau and lambda for the hypergeometric-type problem.
///
/// Both k candidates that make the radicand a perfect square are formed from
/// the discriminant condition; a candidate is kept if tau' < 0. If both
/// candidates qualify, the branch describing a bound state wins: phi must
/// decay at z -> 0+ and z -> 1-, i.e. pi(0) > 0 and pi(1) < 0.
inline NUSolution nu_construct(const NUProblem& p) {
    const double s1 = p.sigma[1], s2 = p.sigma[2];
    // h(z) = (sigma' - tau~)/2, linear
    const double h0 = 0.5 * (s1 - p.tau_tilde[0]);
    const double h1 = 0.5 * (2.0 * s2 - p.tau_tilde[1]);

    // radicand(z; k) = h(z)^2 - sigma~(z) + k sigma(z) = q2 z^2 + q1 z + q0
    // with   q2 = h1^2 - st2 + k s2,  q1 = 2 h0 h1 - st1 + k s1,
    //        q0 = h0^2 - st0 + k s0   (all linear in k)
    const double st0 = p.sigma_tilde[0], st1 = p.sigma_tilde[1], st2 = p.sigma_tilde[2];
    const double s0 = p.sigma[0];

    // perfect square <=> q1^2 - 4 q2 q0 = 0, a quadratic alpha k^2 + beta k + gamma
    const double alpha = s1 * s1 - 4.0 * s2 * s0;
    const double beta = 2.0 * s1 * (2.0 * h0 * h1 - st1) -
                        4.0 * (s2 * (h0 * h0 - st0) + s0 * (h1 * h1 - st2));
    const double gamma = (2.0 * h0 * h1 - st1) * (2.0 * h0 * h1 - st1) -
                         4.0 * (h1 * h1 - st2) * (h0 * h0 - st0);

    std::vector<double> k_candidates;
    if (std::abs(alpha) < 1e-300) {
        if (std::abs(beta) < 1e-300)
            throw NoValidBranch("nu_construct: degenerate discriminant condition");
        k_candidates.push_back(-gamma / beta);
    } else {
        const double disc = beta * beta - 4.0 * alpha * gamma;
        if (disc < 0.0)
            throw NoValidBranch("nu_construct: no real k makes the radicand a square");
        const double r = std::sqrt(disc);
        k_candidates.push_back((-beta - r) / (2.0 * alpha));
        k_candidates.push_back((-beta + r) / (2.0 * alpha));
    }

    std::vector<NUSolution> valid;
    for (const double k : k_candidates) {
        const double q2 = h1 * h1 - st2 + k * s2;
        const double q1 = 2.0 * h0 * h1 - st1 + k * s1;
        const double q0 = h0 * h0 - st0 + k * s0;
        if (q2 < -1e-9 || q0 < -1e-9)
            continue; // square root of a negative leading/trailing coefficient
        // radicand = (m1 z + m0)^2 with 2 m1 m0 = q1
        const double m1_abs = std::sqrt(std::max(q2, 0.0));
        const double m0_abs = std::sqrt(std::max(q0, 0.0));
        double m1 = m1_abs, m0 = m0_abs;
        if (q1 < 0.0)
            m0 = -m0_abs; // pick the sign pairing that reproduces q1
        for (const double sign : {+1.0, -1.0}) {
            const Linear pi{h0 + sign * m0, h1 + sign * m1};
            const Linear tau{p.tau_tilde[0] + 2.0 * pi[0], p.tau_tilde[1] + 2.0 * pi[1]};
            if (!(tau[1] < 0.0))
                continue;
            valid.push_back(NUSolution{pi, k, tau, k + pi[1]});
        }
    }
    if (valid.empty())
        throw NoValidBranch("nu_construct: no branch has tau' < 0");
    if (valid.size() == 1)
        return valid.front();
    // tie-break: bound-state behavior needs pi(0) > 0 and pi(1) < 0, the
    // signs that make phi decay toward both endpoints
    for (const auto& cand : valid) {
        const double at0 = cand.pi[0];
        const double at1 = cand.pi[0] + cand.pi[1];
        if (at0 > 0.0 && at1 < 0.0)
            return cand;
    }
    return valid.front();
}

/// lambda - lambda_n at energy E: vanishes exactly at the level-equation
/// roots, through a derivation path independent of spin/pseudospin_residual.
inline double nu_quantization_residual(double E, const ProblemSpec& s) {
    const NUProblem p = nu_problem(s, E);
    const NUSolution sol = nu_construct(p);
    return sol.lambda - sol.lambda_n(s.state.n, p);
}

} // namespace sdfdirac

#include "cvm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvm/errors.hpp"
#include "cvm/thermo.hpp"

namespace cvm {

namespace {

constexpr double kDivergenceTol = 1e-9;

// Completes the equiprobable-symmetry slice from the two free coordinates:
// z2 = 0.25 - (z1+z3)/2, mirror pairs equal, pairs rebuilt from triplets.
ConfigFractions symmetric_fractions(double z1, double z3) {
    const double z2 = 0.25 - 0.5 * (z1 + z3);
    ConfigFractions fr;
    fr.x1 = 0.5;
    fr.x2 = 0.5;
    fr.z1 = z1;
    fr.z6 = z1;
    fr.z3 = z3;
    fr.z4 = z3;
    fr.z2 = z2;
    fr.z5 = z2;
    fr.y1 = z1 + z2;
    fr.y3 = z1 + z2;
    fr.y2 = z2 + z3;
    fr.w1 = z1 + z3;
    fr.w3 = z1 + z3;
    fr.w2 = 2.0 * z2;
    return fr;
}

// Keeps (z1, z3) where every derived fraction stays positive enough to log.
// Strictly inside the box where every derived fraction stays positive to log.
bool slice_interior(double z1, double z3) {
    constexpr double lo = 1e-12;
    return z1 > lo && z3 > lo && z1 + z3 < 0.5 - 2.0 * lo;
}

} // namespace

double delta_denom(double h) { return -h * h + 6.0 * h - 1.0; }

DivergenceInfo divergence_points() {
    const double s = 2.0 * std::sqrt(2.0);
    return {3.0 - s, 3.0 + s};
}

EquilibriumSolution equilibrium(double h) {
    const double d = delta_denom(h);
    if (std::fabs(d) < kDivergenceTol)
        throw domain_error("equilibrium: denominator vanishes at h = " + std::to_string(h) +
                           " (divergence root)");
    if (d < 0.0)
        throw domain_error("equilibrium: h = " + std::to_string(h) +
                           " is beyond the divergence roots; no solution in [0,1]");

    EquilibriumSolution sol;
    sol.h = h;
    sol.delta_denom = d;
    ConfigFractions& fr = sol.fractions;
    fr.x1 = 0.5;
    fr.x2 = 0.5;
    fr.y1 = (3.0 * h - 1.0) / (2.0 * d);
    fr.y3 = fr.y1;
    fr.y2 = h * (3.0 - h) / (2.0 * d);
    fr.w1 = (h + 1.0) * (h + 1.0) / (4.0 * d);
    fr.w3 = fr.w1;
    fr.w2 = (3.0 * h - 1.0) * (3.0 - h) / (4.0 * d);
    fr.z1 = (3.0 * h - 1.0) * (h + 1.0) / (8.0 * d);
    fr.z6 = fr.z1;
    fr.z2 = (3.0 * h - 1.0) * (3.0 - h) / (8.0 * d);
    fr.z5 = fr.z2;
    fr.z3 = (3.0 - h) * (h + 1.0) / (8.0 * d);
    fr.z4 = fr.z3;

    const double probe[7] = {fr.y1, fr.y2, fr.w1, fr.w2, fr.z1, fr.z2, fr.z3};
    for (double v : probe) {
        if (v < -1e-12 || v > 1.0 + 1e-12) sol.physical = false;
        if (std::fabs(v) <= 1e-12) sol.log_zero_hazard = true;
    }
    return sol;
}

double estimate_h(const ConfigFractions& fr) {
    if (!(fr.z3 > 0.0))
        throw domain_error("estimate_h: z3 is 0, estimator undefined");
    if (!(fr.y1 > 0.0))
        throw domain_error("estimate_h: y1 is 0, estimator undefined");
    return std::sqrt((fr.z1 * fr.y2) / (fr.z3 * fr.y1));
}

ConfigFractions continuous_minimize(double h, double x1) {
    if (std::fabs(x1 - 0.5) > 1e-12)
        throw domain_error("continuous_minimize: only x1 = 0.5 has a symmetric slice, got x1 = " +
                           std::to_string(x1));
    if (!(h > 1.0 / 3.0) || !(h < 3.0))
        throw domain_error("continuous_minimize: h must lie strictly inside (1/3, 3), got h = " +
                           std::to_string(h));

    const double eps1 = 0.5 * std::log(h);
    const EnthalpyParams params{0.0, eps1};

    auto value = [&](double z1, double z3) {
        return free_energy(symmetric_fractions(z1, z3), params).free_energy;
    };
    // Analytic gradient on the slice; the enthalpy reduces to 4*eps1*(z3-z1).
    auto gradient = [&](double z1, double z3, double& g1, double& g3) {
        const double z2 = 0.25 - 0.5 * (z1 + z3);
        const double ly1 = std::log(z1 + z2);
        const double ly2 = std::log(z2 + z3);
        const double lw1 = std::log(z1 + z3);
        const double lw2 = std::log(2.0 * z2);
        const double lz2 = std::log(z2);
        const double ds1 = 2.0 * ly1 - 2.0 * ly2 + 2.0 * lw1 - 2.0 * lw2 -
                           4.0 * std::log(z1) + 4.0 * lz2;
        const double ds3 = -2.0 * ly1 + 2.0 * ly2 + 2.0 * lw1 - 2.0 * lw2 -
                           4.0 * std::log(z3) + 4.0 * lz2;
        g1 = -4.0 * eps1 - ds1;
        g3 = 4.0 * eps1 - ds3;
    };

    double z1 = 0.125, z3 = 0.125;
    double f = value(z1, z3);
    double g1, g3;
    gradient(z1, z3, g1, g3);
    double residual = std::max(std::fabs(g1), std::fabs(g3));

    for (int iter = 0; iter < 100000; ++iter) {
        if (residual < 1e-10) return symmetric_fractions(z1, z3);

        // Damped Newton on the slice; the negative-entropy part is strictly
        // convex there, so the analytic 2x2 Hessian is positive definite.
        const double z2 = 0.25 - 0.5 * (z1 + z3);
        const double ry = 1.0 / (z1 + z2) + 1.0 / (z2 + z3);
        const double rw = 2.0 / (z1 + z3) + 1.0 / z2;  // 2/w1 + 2/w2, w2 = 2*z2
        const double h11 = 4.0 / z1 + 2.0 / z2 - ry - rw;
        const double h33 = 4.0 / z3 + 2.0 / z2 - ry - rw;
        const double h13 = ry - rw + 2.0 / z2;
        const double det = h11 * h33 - h13 * h13;

        double d1, d3;
        if (std::isfinite(det) && det > 0.0 && h11 > 0.0) {
            d1 = (g3 * h13 - g1 * h33) / det;
            d3 = (g1 * h13 - g3 * h11) / det;
        } else {
            d1 = -0.05 * g1;
            d3 = -0.05 * g3;
        }

        double t = 1.0;
        while (t > 1e-18 && !slice_interior(z1 + t * d1, z3 + t * d3)) t *= 0.5;
        double c1 = z1 + t * d1, c3 = z3 + t * d3;
        double fc = value(c1, c3);
        // Far from the optimum insist on descent; near it the free energy is
        // flat to double resolution, so the Newton point is taken as is.
        while (residual > 1e-8 && fc > f + 1e-12 && t > 1e-12) {
            t *= 0.5;
            c1 = z1 + t * d1;
            c3 = z3 + t * d3;
            fc = value(c1, c3);
        }

        z1 = c1;
        z3 = c3;
        f = fc;
        gradient(z1, z3, g1, g3);
        residual = std::max(std::fabs(g1), std::fabs(g3));
    }
    throw domain_error("continuous_minimize: no convergence within 100000 iterations; "
                       "gradient sup-norm = " + std::to_string(residual));
}

} // namespace cvm

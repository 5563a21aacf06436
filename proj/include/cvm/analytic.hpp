#ifndef CVM_ANALYTIC_HPP
#define CVM_ANALYTIC_HPP

#include "cvm/configvars.hpp"

namespace cvm {

// Shared denominator of the closed-form equilibrium fractions.
// Vanishes at h = 3 -+ 2*sqrt(2); the solution diverges there.
double delta_denom(double h);

struct DivergenceInfo {
    double lower = 0.0;  // 3 - 2*sqrt(2)
    double upper = 0.0;  // 3 + 2*sqrt(2)
};

DivergenceInfo divergence_points();

// Closed-form equilibrium at the equiprobable composition x1 = x2 = 0.5.
// Symmetric pairs are exactly equal: y1 = y3, w1 = w3, z1 = z6, z2 = z5,
// z3 = z4. physical is false when h lies outside [1/3, 3], where some
// fractions leave [0,1] (the curve is still returned for plotting).
// log_zero_hazard marks fractions at the edge of the log domain (a fraction
// is 0 within 1e-12, as at h = 1/3 or h = 3).
struct EquilibriumSolution {
    double h = 0.0;
    double delta_denom = 0.0;
    ConfigFractions fractions;
    bool physical = true;
    bool log_zero_hazard = false;
};

// Throws domain_error near the divergence roots (|delta| < 1e-9) and beyond
// them (delta < 0), where no solution exists.
EquilibriumSolution equilibrium(double h);

// h read back from counted fractions: sqrt((z1*y2)/(z3*y1)).
// Throws domain_error when z3 or y1 is 0, naming the offending variable.
double estimate_h(const ConfigFractions& fr);

// Independent numeric check of the closed form: minimizes the free energy at
// (eps0 = 0, eps1 = ln(h)/2) over the symmetric slice, parameterized by
// (z1, z3) with z2 = 0.25 - (z1+z3)/2 and everything else completed by
// symmetry and the equivalence identities. Starts from the uniform point;
// converges when the gradient sup-norm drops below 1e-10.
// Throws domain_error on h outside (1/3, 3), x1 != 0.5, or non-convergence
// within 1e5 iterations (reporting the final gradient norm).
ConfigFractions continuous_minimize(double h, double x1 = 0.5);

} // namespace cvm

#endif

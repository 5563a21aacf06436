#ifndef CVM_THERMO_HPP
#define CVM_THERMO_HPP

#include <cmath>

#include "cvm/configvars.hpp"

namespace cvm {

// Reduced-unit enthalpy parameters (k_BT = 1). eps0 is the per-unit cost of
// state A; eps1 the unlike-diagonal-pair interaction. h = e^{2 eps1} > 1
// favors like-near-like, h < 1 favors alternation.
struct EnthalpyParams {
    double eps0 = 0.0;
    double eps1 = 0.0;

    double h() const { return std::exp(2.0 * eps1); }
};

double h_from_eps1(double eps1);
// Throws domain_error for h <= 0.
double eps1_from_h(double h);

// eps0 * x1 + 2 * eps1 * (2*y2 - y1 - y3).
double enthalpy(const ConfigFractions& fr, const EnthalpyParams& p);

// Cluster-entropy functional with Lf(v) = v ln v - v and 0 ln 0 := 0:
//   2*sum_i beta_i Lf(y_i) + sum_i beta_i Lf(w_i)
//   - sum_i Lf(x_i) - 2*sum_i gamma_i Lf(z_i).
double entropy(const ConfigFractions& fr);

struct ThermoReport {
    double enthalpy = 0.0;
    double entropy = 0.0;
    double free_energy = 0.0;  // enthalpy - entropy
    double delta_term = 0.0;   // 2*y2 - y1 - y3
};

ThermoReport free_energy(const ConfigFractions& fr, const EnthalpyParams& p);

// eps0 = ln((1-x1)/x1): positive eps0 depresses x1 below 0.5.
// Throws domain_error unless 0 < x1 < 1.
double eps0_from_x1(double x1);
// Inverse: x1 = 1/(1 + e^{eps0}).
double x1_from_eps0(double eps0);

// Independent-placement expectations at composition x1: every bucket gets
// its pattern probability (y1 = x1^2, z3 = x1^2 x2, ...). Throws
// domain_error unless 0 <= x1 <= 1.
ConfigFractions random_fractions(double x1);

} // namespace cvm

#endif

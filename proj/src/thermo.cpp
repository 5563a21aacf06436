#include "cvm/thermo.hpp"

#include <string>

#include "cvm/errors.hpp"

namespace cvm {

namespace {

// Lf(v) = v ln v - v, extended by the 0 ln 0 := 0 convention so degenerate
// fractions evaluate.
inline double lf(double v) {
    return v > 0.0 ? v * std::log(v) - v : 0.0;
}

} // namespace

double h_from_eps1(double eps1) { return std::exp(2.0 * eps1); }

double eps1_from_h(double h) {
    if (!(h > 0.0))
        throw domain_error("eps1_from_h: h must be positive, got " + std::to_string(h));
    return 0.5 * std::log(h);
}

double enthalpy(const ConfigFractions& fr, const EnthalpyParams& p) {
    return p.eps0 * fr.x1 + 2.0 * p.eps1 * (2.0 * fr.y2 - fr.y1 - fr.y3);
}

double entropy(const ConfigFractions& fr) {
    const double y = lf(fr.y1) + 2.0 * lf(fr.y2) + lf(fr.y3);
    const double w = lf(fr.w1) + 2.0 * lf(fr.w2) + lf(fr.w3);
    const double x = lf(fr.x1) + lf(fr.x2);
    const double z = lf(fr.z1) + 2.0 * lf(fr.z2) + lf(fr.z3) +
                     lf(fr.z4) + 2.0 * lf(fr.z5) + lf(fr.z6);
    return 2.0 * y + w - x - 2.0 * z;
}

ThermoReport free_energy(const ConfigFractions& fr, const EnthalpyParams& p) {
    ThermoReport r;
    r.enthalpy = enthalpy(fr, p);
    r.entropy = entropy(fr);
    r.free_energy = r.enthalpy - r.entropy;
    r.delta_term = 2.0 * fr.y2 - fr.y1 - fr.y3;
    return r;
}

double eps0_from_x1(double x1) {
    if (!(x1 > 0.0) || !(x1 < 1.0))
        throw domain_error("eps0_from_x1: x1 must be strictly inside (0,1), got " +
                           std::to_string(x1));
    return std::log((1.0 - x1) / x1);
}

double x1_from_eps0(double eps0) { return 1.0 / (1.0 + std::exp(eps0)); }

ConfigFractions random_fractions(double x1) {
    if (!(x1 >= 0.0) || !(x1 <= 1.0))
        throw domain_error("random_fractions: x1 must be in [0,1], got " + std::to_string(x1));
    const double x2 = 1.0 - x1;
    ConfigFractions fr;
    fr.x1 = x1;
    fr.x2 = x2;
    fr.y1 = x1 * x1;
    fr.y2 = x1 * x2;
    fr.y3 = x2 * x2;
    fr.w1 = x1 * x1;
    fr.w2 = x1 * x2;
    fr.w3 = x2 * x2;
    fr.z1 = x1 * x1 * x1;
    fr.z2 = x1 * x1 * x2;
    fr.z3 = x1 * x1 * x2;
    fr.z4 = x1 * x2 * x2;
    fr.z5 = x1 * x2 * x2;
    fr.z6 = x2 * x2 * x2;
    return fr;
}

} // namespace cvm

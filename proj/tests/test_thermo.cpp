#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "cvm/configvars.hpp"
#include "cvm/errors.hpp"
#include "cvm/lattice.hpp"
#include "cvm/thermo.hpp"

using namespace cvm;

TEST_CASE("h and eps1 are inverse parametrizations") {
    CHECK(h_from_eps1(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eps1_from_h(1.0) == 0.0);
    CHECK(h_from_eps1(eps1_from_h(1.2)) == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(eps1_from_h(h_from_eps1(-0.3)) == doctest::Approx(-0.3).epsilon(1e-14));
    CHECK(EnthalpyParams{0.0, eps1_from_h(1.2)}.h() == doctest::Approx(1.2).epsilon(1e-14));
    CHECK_THROWS_AS(eps1_from_h(0.0), domain_error);
    CHECK_THROWS_AS(eps1_from_h(-1.0), domain_error);
}

TEST_CASE("entropy landmarks") {
    CHECK(entropy(random_fractions(0.5)) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    const ConfigFractions allA = fractions(count(new_uniform(4, 4, UnitState::A)), 16);
    CHECK(entropy(allA) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("entropy is symmetric under state exchange") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Grid g = new_random(8, 8, 20 + static_cast<int>(seed) * 7, seed);
        Grid swapped = g;
        for (int r = 0; r < g.rows; ++r)
            for (int c = 0; c < g.cols; ++c) flip(swapped, {r, c});
        const double a = entropy(fractions(count(g), g.size()));
        const double b = entropy(fractions(count(swapped), swapped.size()));
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("independent placement maximizes entropy at the equiprobable point") {
    const double peak = entropy(random_fractions(0.5));
    for (int i = 1; i <= 19; ++i) {
        const double x1 = 0.05 * i;
        const double s = entropy(random_fractions(x1));
        CHECK(s <= peak + 1e-12);
        if (std::fabs(x1 - 0.5) > 1e-9) CHECK(s < peak);
    }
}

TEST_CASE("pair and triplet forms of the interaction term agree") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Grid g = new_random(10, 10, static_cast<int>((seed * 17) % 101), seed);
        const ConfigFractions fr = fractions(count(g), g.size());
        const double y_form = 2 * fr.y2 - fr.y1 - fr.y3;
        const double z_form = fr.z3 + fr.z4 - fr.z1 - fr.z6;
        CHECK(y_form == doctest::Approx(z_form).epsilon(1e-12));
    }
}

TEST_CASE("enthalpy evaluates the frozen form") {
    const ConfigFractions fr = random_fractions(0.35);
    const EnthalpyParams p{0.7, 0.1};
    const double expect = 0.7 * 0.35 + 2 * 0.1 * (2 * fr.y2 - fr.y1 - fr.y3);
    CHECK(enthalpy(fr, p) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(enthalpy(fr, EnthalpyParams{}) == 0.0);
}

TEST_CASE("activation term translates free energy by eps0 x1") {
    const Grid g = new_random(8, 8, 22, 3);
    const ConfigFractions fr = fractions(count(g), g.size());
    const double delta = 1.7;
    const ThermoReport base = free_energy(fr, EnthalpyParams{0.0, 0.05});
    const ThermoReport moved = free_energy(fr, EnthalpyParams{delta, 0.05});
    CHECK(moved.free_energy ==
          doctest::Approx(base.free_energy + delta * fr.x1).epsilon(1e-12));
    CHECK(moved.entropy == base.entropy);
    CHECK(moved.delta_term == base.delta_term);
}

TEST_CASE("report wires enthalpy minus entropy") {
    const ConfigFractions fr = random_fractions(0.5);
    const ThermoReport r = free_energy(fr, EnthalpyParams{0.0, 0.0});
    CHECK(r.enthalpy == 0.0);
    CHECK(r.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(r.free_energy == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(r.delta_term == doctest::Approx(2 * fr.y2 - fr.y1 - fr.y3).epsilon(1e-14));
}

TEST_CASE("eps0 and x1 conversions invert each other") {
    CHECK(eps0_from_x1(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(x1_from_eps0(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (int i = 1; i <= 98; ++i) {
        const double x1 = 0.01 * i;
        CHECK(x1_from_eps0(eps0_from_x1(x1)) == doctest::Approx(x1).epsilon(1e-12));
    }
    CHECK(std::fabs(eps0_from_x1(0.269) - 1.0) <= 0.005);
    CHECK(std::fabs(eps0_from_x1(0.119) - 2.002) <= 0.005);
    CHECK(std::fabs(eps0_from_x1(0.047) - 3.0) <= 0.02);
    CHECK_THROWS_AS(eps0_from_x1(0.0), domain_error);
    CHECK_THROWS_AS(eps0_from_x1(1.0), domain_error);
}

TEST_CASE("independent placement fills every bucket with its pattern probability") {
    const double x1 = 0.3, x2 = 0.7;
    const ConfigFractions fr = random_fractions(x1);
    CHECK(fr.x1 == doctest::Approx(x1).epsilon(1e-15));
    CHECK(fr.y1 == doctest::Approx(x1 * x1).epsilon(1e-15));
    CHECK(fr.y2 == doctest::Approx(x1 * x2).epsilon(1e-15));
    CHECK(fr.y3 == doctest::Approx(x2 * x2).epsilon(1e-15));
    CHECK(fr.w2 == doctest::Approx(x1 * x2).epsilon(1e-15));
    CHECK(fr.z1 == doctest::Approx(x1 * x1 * x1).epsilon(1e-15));
    CHECK(fr.z2 == doctest::Approx(x1 * x1 * x2).epsilon(1e-15));
    CHECK(fr.z3 == doctest::Approx(x1 * x1 * x2).epsilon(1e-15));
    CHECK(fr.z4 == doctest::Approx(x1 * x2 * x2).epsilon(1e-15));
    CHECK(fr.z5 == doctest::Approx(x1 * x2 * x2).epsilon(1e-15));
    CHECK(fr.z6 == doctest::Approx(x2 * x2 * x2).epsilon(1e-15));
    CHECK_THROWS_AS(random_fractions(-0.1), domain_error);
    CHECK_THROWS_AS(random_fractions(1.1), domain_error);

    // Product-measure fractions satisfy every equivalence identity.
    for (double r : equivalence_residuals(fr)) CHECK(std::fabs(r) <= 1e-15);
}

TEST_CASE("expected mixed-pair fraction at the off-center composition") {
    const ConfigFractions fr = random_fractions(0.35);
    CHECK(fr.y2 == doctest::Approx(0.2275).epsilon(1e-12));
    CHECK(2 * fr.y2 - fr.y1 - fr.y3 == doctest::Approx(-0.09).epsilon(1e-12));
}

#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <string>

#include "brute_oracle.hpp"
#include "cvm/analytic.hpp"
#include "cvm/configvars.hpp"
#include "cvm/errors.hpp"
#include "cvm/lattice.hpp"
#include "cvm/thermo.hpp"

using namespace cvm;

namespace {

void check_against_oracle(const Grid& g, TripletCount mode) {
    const ConfigCounts k = count(g, mode);
    const cvm_tests::BruteTallies t =
        cvm_tests::brute_tally(g, mode == TripletCount::down_only);
    CHECK(k.x1 == t.x[0]);
    CHECK(k.x2 == t.x[1]);
    CHECK(k.y1 == t.y[0]);
    CHECK(k.y2 == t.y[1]);
    CHECK(k.y3 == t.y[2]);
    CHECK(k.w1 == t.w[0]);
    CHECK(k.w2 == t.w[1]);
    CHECK(k.w3 == t.w[2]);
    CHECK(k.z1 == t.z[0]);
    CHECK(k.z2 == t.z[1]);
    CHECK(k.z3 == t.z[2]);
    CHECK(k.z4 == t.z[3]);
    CHECK(k.z5 == t.z[4]);
    CHECK(k.z6 == t.z[5]);
}

double max_abs_residual(const ConfigFractions& fr) {
    double worst = 0.0;
    for (double r : equivalence_residuals(fr)) worst = std::max(worst, std::fabs(r));
    return worst;
}

} // namespace

TEST_CASE("all-A grid tallies") {
    const ConfigCounts k = count(new_uniform(4, 4, UnitState::A));
    CHECK(k.x1 == 16);
    CHECK(k.x2 == 0);
    CHECK(k.y1 == 32);
    CHECK(k.y2 == 0);
    CHECK(k.y3 == 0);
    CHECK(k.w1 == 16);
    CHECK(k.w2 == 0);
    CHECK(k.w3 == 0);
    CHECK(k.z1 == 32);
    CHECK(k.z2 + k.z3 + k.z4 + k.z5 + k.z6 == 0);
    CHECK(k.triplet_orientations == 2);
}

TEST_CASE("2x2 half-and-half rows tally by hand") {
    const ConfigCounts k = count(from_text("AA\nBB\n"));
    CHECK(k.y1 == 0);
    CHECK(k.y2 == 8);
    CHECK(k.y3 == 0);
    CHECK(k.z3 == 4);
    CHECK(k.z4 == 4);
    CHECK(k.z1 + k.z2 + k.z5 + k.z6 == 0);
}

TEST_CASE("row-striped grid puts half the weight on each alternating bucket") {
    const Grid g = from_text("AAAA\nBBBB\nAAAA\nBBBB\n");
    const ConfigFractions fr = fractions(count(g), g.size());
    CHECK(fr.y2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.w1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.w3 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.z3 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.z4 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.y1 == 0.0);
    CHECK(fr.z1 == 0.0);
}

TEST_CASE("fraction normalization identities hold on random grids") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        const int rows = 4 + 2 * static_cast<int>(seed % 7);
        const int cols = 4 + static_cast<int>(seed % 13);
        const int n = static_cast<int>((seed * 37) % (rows * cols + 1));
        const Grid g = new_random(rows, cols, n, seed);
        const ConfigFractions fr = fractions(count(g), g.size());
        CHECK(fr.x1 + fr.x2 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fr.y1 + 2 * fr.y2 + fr.y3 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fr.w1 + 2 * fr.w2 + fr.w3 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fr.z1 + 2 * fr.z2 + fr.z3 + fr.z4 + 2 * fr.z5 + fr.z6 ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(max_abs_residual(fr) <= 1e-12);
    }
}

TEST_CASE("fractions reject inconsistent unit totals") {
    const ConfigCounts k = count(new_uniform(4, 4, UnitState::A));
    CHECK_THROWS_AS(fractions(k, 17), domain_error);
    ConfigCounts broken = k;
    broken.y1 -= 1;
    CHECK_THROWS_AS(fractions(broken, 16), domain_error);
}

TEST_CASE("equivalence residuals flag a hand-perturbed y1") {
    const Grid g = new_random(8, 8, 32, 5);
    ConfigFractions fr = fractions(count(g), g.size());
    fr.y1 += 0.01;
    const auto res = equivalence_residuals(fr);
    CHECK(res[0] == doctest::Approx(0.01).epsilon(1e-12));   // y1 - (z1+z2)
    CHECK(res[7] == doctest::Approx(-0.01).epsilon(1e-12));  // x1 - (y1+y2)
}

TEST_CASE("closed-form equilibrium fractions satisfy every equivalence") {
    const EquilibriumSolution sol = equilibrium(1.2);
    CHECK(max_abs_residual(sol.fractions) <= 1e-9);
}

TEST_CASE("counts match the list oracle on every 2x4 grid") {
    Grid g = new_uniform(2, 4, UnitState::B);
    for (int bits = 0; bits < 256; ++bits) {
        for (int i = 0; i < 8; ++i)
            g.cells[i] = (bits >> i) & 1 ? UnitState::A : UnitState::B;
        check_against_oracle(g, TripletCount::up_and_down);
        check_against_oracle(g, TripletCount::down_only);
    }
}

TEST_CASE("counts match the list oracle on random larger grids") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        const int rows = 4 + 2 * static_cast<int>(seed % 5);
        const int cols = 3 + static_cast<int>(seed % 9);
        const int n = static_cast<int>((seed * 29) % (rows * cols + 1));
        const Grid g = new_random(rows, cols, n, seed);
        check_against_oracle(g, TripletCount::up_and_down);
        check_against_oracle(g, TripletCount::down_only);
    }
}

TEST_CASE("single-orientation counting halves the triplet family only") {
    const Grid g = new_random(16, 16, 128, 11);
    const ConfigCounts both = count(g, TripletCount::up_and_down);
    const ConfigCounts down = count(g, TripletCount::down_only);
    CHECK(both.triplet_total() == 2LL * g.size());
    CHECK(down.triplet_total() == g.size());
    CHECK(down.triplet_orientations == 1);
    CHECK(both.y2 == down.y2);
    CHECK(both.w1 == down.w1);

    // Vertically homogeneous grids make the two orientations identical.
    const Grid striped = from_text("AAAA\nBBBB\nAAAA\nBBBB\n");
    const ConfigFractions fb = fractions(count(striped), striped.size());
    const ConfigFractions fd =
        fractions(count(striped, TripletCount::down_only), striped.size());
    CHECK(fb.z3 == fd.z3);
    CHECK(fb.z4 == fd.z4);

    // On random grids the approximation stays close in fractions.
    const ConfigFractions rb = fractions(both, g.size());
    const ConfigFractions rd = fractions(down, g.size());
    CHECK(std::fabs(rb.z1 - rd.z1) < 0.1);
    CHECK(rd.z1 + 2 * rd.z2 + rd.z3 + rd.z4 + 2 * rd.z5 + rd.z6 ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("symmetric-count grids satisfy the equiprobable z2 reduction") {
    // Row stripes at x1 = 0.5 are z-symmetric: z2 = 0.25 - (z1+z3)/2.
    const Grid g = from_text("AAAA\nBBBB\nAAAA\nBBBB\n");
    const ConfigFractions fr = fractions(count(g), g.size());
    CHECK(fr.z2 == doctest::Approx(0.25 - (fr.z1 + fr.z3) / 2).epsilon(1e-12));
}

TEST_CASE("topography tags against random baselines") {
    const TopographySummary allA =
        summarize_topography(fractions(count(new_uniform(4, 4, UnitState::A)), 16));
    CHECK(allA.y2 == 0.0);
    CHECK(allA.z1 == 1.0);
    CHECK(allA.z3 == 0.0);
    CHECK(allA.clustered);
    CHECK_FALSE(allA.dispersed);
    CHECK_FALSE(allA.channeled);

    const Grid striped = from_text("AAAA\nBBBB\nAAAA\nBBBB\n");
    const TopographySummary s = summarize_topography(fractions(count(striped), 16));
    CHECK(s.dispersed);
    CHECK(s.channeled);
    CHECK_FALSE(s.clustered);

    int tagged = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Grid g = new_random(16, 16, 128, seed);
        const TopographySummary r = summarize_topography(fractions(count(g), g.size()));
        tagged += (r.clustered || r.dispersed || r.channeled) ? 1 : 0;
        CHECK(std::fabs(r.y2 - r.baseline_y2) < 0.05);
        CHECK(std::fabs(r.z1 - r.baseline_z1) < 0.05);
    }
    CHECK(tagged == 0);
}

TEST_CASE("fraction rows serialize to fixed six-decimal CSV") {
    CHECK(fractions_csv_header() ==
          "x1,x2,y1,y2,y3,w1,w2,w3,z1,z2,z3,z4,z5,z6");
    const ConfigFractions fr = fractions(count(new_uniform(2, 2, UnitState::A)), 4);
    CHECK(fractions_csv_row(fr) ==
          "1.000000,0.000000,1.000000,0.000000,0.000000,1.000000,0.000000,"
          "0.000000,1.000000,0.000000,0.000000,0.000000,0.000000,0.000000");
}

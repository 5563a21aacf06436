#ifndef CVM_CONFIGVARS_HPP
#define CVM_CONFIGVARS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "cvm/lattice.hpp"

namespace cvm {

// Degeneracy factors for the pair and triplet variable families.
inline constexpr std::array<int, 3> kPairDegeneracy = {1, 2, 1};
inline constexpr std::array<int, 6> kTripletDegeneracy = {1, 2, 1, 1, 2, 1};

// Which triplet orientations enter the Z tallies. Every vertex owns an
// up-winged and a down-winged triplet; counting one orientation per vertex
// reproduces a historical approximation and exists for fidelity comparisons.
enum class TripletCount { up_and_down, down_only };

// Pair bucket: 0 = AA, 1 = mixed, 2 = BB.
inline int pair_bucket(UnitState a, UnitState b) {
    if (a == b) return a == UnitState::A ? 0 : 2;
    return 1;
}

// Triplet bucket in the order AAA, {AAB,BAA}, ABA, BAB, {ABB,BBA}, BBB.
inline int triplet_bucket(UnitState left, UnitState vertex, UnitState right) {
    const int wings = (left == UnitState::A) + (right == UnitState::A);
    if (vertex == UnitState::A) {
        if (wings == 2) return 0;
        return wings == 1 ? 1 : 3;
    }
    if (wings == 2) return 2;
    return wings == 1 ? 4 : 5;
}

// Raw configuration-variable tallies over one grid.
//
// Buckets: X1/X2 = units in A/B. Y1/Y2/Y3 = diagonal nearest-neighbor pairs
// AA/mixed/BB, tallied once per link from its upper endpoint (2N entries).
// W1/W2/W3 = within-row next-nearest pairs AA/mixed/BB, tallied once per unit
// toward its right neighbor (N entries). Z1..Z6 = wing-vertex-wing triplets
// AAA / {AAB,BAA} / ABA / BAB / {ABB,BBA} / BBB, two per vertex (2N entries),
// or one per vertex under down_only (N entries).
struct ConfigCounts {
    long long x1 = 0, x2 = 0;
    long long y1 = 0, y2 = 0, y3 = 0;
    long long w1 = 0, w2 = 0, w3 = 0;
    long long z1 = 0, z2 = 0, z3 = 0, z4 = 0, z5 = 0, z6 = 0;
    int triplet_orientations = 2;

    long long unit_total() const { return x1 + x2; }
    long long pair_total() const { return y1 + y2 + y3; }
    long long row_pair_total() const { return w1 + w2 + w3; }
    long long triplet_total() const { return z1 + z2 + z3 + z4 + z5 + z6; }
};

ConfigCounts count(const Grid& g, TripletCount mode = TripletCount::up_and_down);

// Normalized fractional variables. Within each family the degeneracy-weighted
// sum is 1: x1+x2, y1+2y2+y3, w1+2w2+w3, z1+2z2+z3+z4+2z5+z6.
struct ConfigFractions {
    double x1 = 0, x2 = 0;
    double y1 = 0, y2 = 0, y3 = 0;
    double w1 = 0, w2 = 0, w3 = 0;
    double z1 = 0, z2 = 0, z3 = 0, z4 = 0, z5 = 0, z6 = 0;
};

// Converts tallies to fractions for a grid of n_units cells. Mixed buckets
// absorb their degeneracy (Y2 spans 4N slots, W2 2N, Z2/Z5 4N each). Throws
// domain_error if the tallies are inconsistent with n_units.
ConfigFractions fractions(const ConfigCounts& counts, long long n_units);

// The ten linear identities tying the families together, returned as
// residuals (all exactly zero for fractions produced by count):
//   y1-(z1+z2), y2-(z2+z4), y2-(z3+z5), y3-(z5+z6),
//   w1-(z1+z3), w2-(z2+z5), w3-(z4+z6),
//   x1-(y1+y2), x1-(w1+w2), x1-(z1+z2+z3+z5).
std::array<double, 10> equivalence_residuals(const ConfigFractions& fr);

// Comparison of a grid's fractions against the independent-placement
// baseline at the same x1. Tags fire when the excess over baseline clears a
// small margin: clustered = like-triplet excess (z1), dispersed = mixed-pair
// excess (y2), channeled = alternating-triplet excess (z3). A baseline
// already at saturation tags on equality instead.
struct TopographySummary {
    double y2 = 0, z1 = 0, z3 = 0;
    double baseline_y2 = 0, baseline_z1 = 0, baseline_z3 = 0;
    bool clustered = false;
    bool dispersed = false;
    bool channeled = false;
};

TopographySummary summarize_topography(const ConfigFractions& fr);

// One CSV row in column order x1,x2,y1,y2,y3,w1,w2,w3,z1..z6, six decimals,
// no trailing newline.
std::string fractions_csv_row(const ConfigFractions& fr);

// Matching CSV header.
std::string fractions_csv_header();

} // namespace cvm

#endif

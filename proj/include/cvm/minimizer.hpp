#ifndef CVM_MINIMIZER_HPP
#define CVM_MINIMIZER_HPP

#include <cstdint>
#include <vector>

#include "cvm/configvars.hpp"
#include "cvm/lattice.hpp"
#include "cvm/thermo.hpp"

namespace cvm {

struct MinimizeConfig {
    EnthalpyParams params;
    double target_x1 = 0.5;
    int max_sweeps = 200;           // proposal cap = max_sweeps * N
    int patience = 2000;            // consecutive rejections before stopping
    std::uint64_t seed = 0;
    long long record_every = 1;     // trajectory stride in proposals
    bool incremental_eval = false;  // local-delta evaluation instead of full recount
};

struct TrajectoryStep {
    long long proposal = 0;  // 0 is the starting state
    bool accepted = false;
    double free_energy = 0.0;
    double y2 = 0.0, z1 = 0.0, z3 = 0.0;
};

// Accepted entries are strictly decreasing in free_energy.
struct Trajectory {
    std::vector<TrajectoryStep> steps;
};

struct MinimizeResult {
    Grid final_grid;
    ConfigFractions final_fractions;
    ThermoReport final_report;
    Trajectory trajectory;
    long long proposals = 0;
    long long accepted = 0;
};

// Flips seed-chosen cells of the surplus state until exactly
// round(target_x1 * N) cells are A. A grid already on target comes back
// unchanged. Throws domain_error for target_x1 outside [0, 1].
Grid adjust_x1(const Grid& g, double target_x1, std::uint64_t seed);

// Zero-temperature find-and-flip descent. Each proposal swaps one random
// A-cell with one random B-cell and keeps the swap iff it lowers the free
// energy by at least 1e-12 (ties rejected, so termination needs no luck).
// Stops after `patience` consecutive rejections or max_sweeps * N proposals.
// X1 is conserved exactly; the run is bit-reproducible per seed.
MinimizeResult minimize(const Grid& g, const MinimizeConfig& cfg);

// Swaps round(fraction * N / 2) random A-cells with as many random B-cells,
// conserving X1. Throws domain_error for fraction outside [0, 1].
Grid perturb(const Grid& g, double fraction, std::uint64_t seed);

// Free-energy change of swapping the states of cell_a and cell_b, computed
// from only the links and triplets touching the two cells. Matches the full
// recount difference to 1e-10 (in exact counts, identically). Throws
// domain_error when the cells share a state.
double delta_free_energy(const Grid& g, Coord cell_a, Coord cell_b, const EnthalpyParams& p);

} // namespace cvm

#endif

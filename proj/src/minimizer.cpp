#include "cvm/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvm/errors.hpp"
#include "cvm/rng.hpp"

namespace cvm {

namespace {

// Object ids for incremental recounting. A diagonal link is 2*upper_cell + k
// (k indexes the upper cell's two down links); a row link is its left cell;
// a triplet is 2*vertex + orientation (0 = wings above, 1 = wings below).

struct Affected {
    long long diag[8];
    int wl[4];
    long long trip[12];
    int nd = 0, nw = 0, nt = 0;
};

void collect_touching(const Grid& g, int cell, Affected& a) {
    const Coord p{cell / g.cols, cell % g.cols};
    const auto nn = diagonal_neighbors(g, p);

    a.diag[a.nd++] = 2LL * cell;
    a.diag[a.nd++] = 2LL * cell + 1;
    for (int e = 0; e < 2; ++e) {
        // Exactly one down link of each upward neighbor lands on this cell.
        const int u = g.index(nn[e]);
        const auto un = diagonal_neighbors(g, nn[e]);
        if (g.index(un[2]) == cell) a.diag[a.nd++] = 2LL * u;
        else a.diag[a.nd++] = 2LL * u + 1;
    }

    const auto rn = row_neighbors(g, p);
    a.wl[a.nw++] = cell;
    a.wl[a.nw++] = g.index(rn[0]);

    a.trip[a.nt++] = 2LL * cell;
    a.trip[a.nt++] = 2LL * cell + 1;
    for (int e = 0; e < 2; ++e) a.trip[a.nt++] = 2LL * g.index(nn[e]) + 1;
    for (int e = 2; e < 4; ++e) a.trip[a.nt++] = 2LL * g.index(nn[e]);
}

template <class T>
int dedupe(T* first, int n) {
    std::sort(first, first + n);
    return static_cast<int>(std::unique(first, first + n) - first);
}

int diag_bucket_of(const Grid& g, long long id) {
    const int j = static_cast<int>(id >> 1);
    const int k = static_cast<int>(id & 1);
    const Coord p{j / g.cols, j % g.cols};
    return pair_bucket(g.at(p), g.at(diagonal_neighbors(g, p)[2 + k]));
}

int w_bucket_of(const Grid& g, int j) {
    const Coord p{j / g.cols, j % g.cols};
    return pair_bucket(g.at(p), g.at(row_neighbors(g, p)[1]));
}

int trip_bucket_of(const Grid& g, long long id) {
    const int j = static_cast<int>(id >> 1);
    const int o = static_cast<int>(id & 1);
    const Coord p{j / g.cols, j % g.cols};
    const Triplet t = triplets_at(g, p)[o];
    return triplet_bucket(g.at(t.left), g.at(t.vertex), g.at(t.right));
}

inline void toggle(Grid& g, int cell) {
    UnitState& s = g.cells[static_cast<std::size_t>(cell)];
    s = (s == UnitState::A) ? UnitState::B : UnitState::A;
}

// Tallies after swapping the states of cells ia and ib, derived from the
// pre-swap tallies by rebucketing only the touching objects. g must hold the
// pre-swap states on entry and holds the post-swap states on return.
ConfigCounts swapped_counts(Grid& g, const ConfigCounts& before, int ia, int ib) {
    Affected a;
    collect_touching(g, ia, a);
    collect_touching(g, ib, a);
    a.nd = dedupe(a.diag, a.nd);
    a.nw = dedupe(a.wl, a.nw);
    a.nt = dedupe(a.trip, a.nt);

    int old_diag[8], old_w[4], old_trip[12];
    for (int i = 0; i < a.nd; ++i) old_diag[i] = diag_bucket_of(g, a.diag[i]);
    for (int i = 0; i < a.nw; ++i) old_w[i] = w_bucket_of(g, a.wl[i]);
    for (int i = 0; i < a.nt; ++i) old_trip[i] = trip_bucket_of(g, a.trip[i]);

    toggle(g, ia);
    toggle(g, ib);

    ConfigCounts k = before;
    long long* ybin[3] = {&k.y1, &k.y2, &k.y3};
    long long* wbin[3] = {&k.w1, &k.w2, &k.w3};
    long long* zbin[6] = {&k.z1, &k.z2, &k.z3, &k.z4, &k.z5, &k.z6};
    for (int i = 0; i < a.nd; ++i) {
        const int nb = diag_bucket_of(g, a.diag[i]);
        --*ybin[old_diag[i]];
        ++*ybin[nb];
    }
    for (int i = 0; i < a.nw; ++i) {
        const int nb = w_bucket_of(g, a.wl[i]);
        --*wbin[old_w[i]];
        ++*wbin[nb];
    }
    for (int i = 0; i < a.nt; ++i) {
        const int nb = trip_bucket_of(g, a.trip[i]);
        --*zbin[old_trip[i]];
        ++*zbin[nb];
    }
    return k;
}

Grid adjust_with(const Grid& g0, double target_x1, Rng& rng) {
    if (!(target_x1 >= 0.0) || !(target_x1 <= 1.0))
        throw domain_error("adjust_x1: target_x1 must be in [0,1], got " +
                           std::to_string(target_x1));
    Grid g = g0;
    const long long n = g.size();
    const long long want = std::llround(target_x1 * static_cast<double>(n));
    const long long have = g.active_count();
    if (have == want) return g;

    const UnitState surplus = have > want ? UnitState::A : UnitState::B;
    const std::size_t flips = static_cast<std::size_t>(std::llabs(have - want));
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (g.cells[static_cast<std::size_t>(i)] == surplus) pool.push_back(i);
    rng.partial_shuffle(pool, flips);
    for (std::size_t i = 0; i < flips; ++i) toggle(g, pool[i]);
    return g;
}

} // namespace

Grid adjust_x1(const Grid& g, double target_x1, std::uint64_t seed) {
    Rng rng(seed);
    return adjust_with(g, target_x1, rng);
}

MinimizeResult minimize(const Grid& start, const MinimizeConfig& cfg) {
    if (cfg.patience < 1)
        throw domain_error("minimize: patience must be >= 1");
    if (cfg.max_sweeps < 1)
        throw domain_error("minimize: max_sweeps must be >= 1");
    if (cfg.record_every < 1)
        throw domain_error("minimize: record_every must be >= 1");
    if (!(cfg.target_x1 > 0.0) || !(cfg.target_x1 < 1.0))
        throw domain_error("minimize: target_x1 must be strictly inside (0,1), got " +
                           std::to_string(cfg.target_x1));

    Rng rng(cfg.seed);
    Grid g = adjust_with(start, cfg.target_x1, rng);
    const long long n = g.size();

    std::vector<int> a_cells, b_cells;
    for (int i = 0; i < n; ++i)
        (g.cells[static_cast<std::size_t>(i)] == UnitState::A ? a_cells : b_cells).push_back(i);

    ConfigCounts counts = count(g);
    ConfigFractions fr = fractions(counts, n);
    ThermoReport rep = free_energy(fr, cfg.params);

    MinimizeResult res;
    auto record = [&](long long proposal, bool acc) {
        res.trajectory.steps.push_back({proposal, acc, rep.free_energy, fr.y2, fr.z1, fr.z3});
    };
    record(0, true);

    const long long cap = static_cast<long long>(cfg.max_sweeps) * n;
    long long rejections_in_row = 0;

    while (res.proposals < cap && rejections_in_row < cfg.patience) {
        if (a_cells.empty() || b_cells.empty()) break;
        ++res.proposals;
        const std::size_t ia = static_cast<std::size_t>(rng.below(a_cells.size()));
        const std::size_t ib = static_cast<std::size_t>(rng.below(b_cells.size()));
        const int ca = a_cells[ia];
        const int cb = b_cells[ib];

        ConfigCounts next_counts;
        if (cfg.incremental_eval) {
            next_counts = swapped_counts(g, counts, ca, cb);
        } else {
            toggle(g, ca);
            toggle(g, cb);
            next_counts = count(g);
        }
        const ConfigFractions next_fr = fractions(next_counts, n);
        const ThermoReport next_rep = free_energy(next_fr, cfg.params);

        const bool accept = next_rep.free_energy - rep.free_energy <= -1e-12;
        if (accept) {
            counts = next_counts;
            fr = next_fr;
            rep = next_rep;
            a_cells[ia] = cb;
            b_cells[ib] = ca;
            ++res.accepted;
            rejections_in_row = 0;
        } else {
            toggle(g, ca);
            toggle(g, cb);
            ++rejections_in_row;
        }
        if (accept || res.proposals % cfg.record_every == 0) record(res.proposals, accept);
    }

    res.final_grid = std::move(g);
    res.final_fractions = fr;
    res.final_report = rep;
    return res;
}

Grid perturb(const Grid& g0, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0) || !(fraction <= 1.0))
        throw domain_error("perturb: fraction must be in [0,1], got " + std::to_string(fraction));
    Grid g = g0;
    std::vector<int> a_cells, b_cells;
    for (int i = 0; i < g.size(); ++i)
        (g.cells[static_cast<std::size_t>(i)] == UnitState::A ? a_cells : b_cells).push_back(i);

    std::size_t k = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(g.size()) / 2.0));
    k = std::min({k, a_cells.size(), b_cells.size()});
    if (k == 0) return g;

    Rng rng(seed);
    rng.partial_shuffle(a_cells, k);
    rng.partial_shuffle(b_cells, k);
    for (std::size_t i = 0; i < k; ++i) {
        toggle(g, a_cells[i]);
        toggle(g, b_cells[i]);
    }
    return g;
}

double delta_free_energy(const Grid& g, Coord cell_a, Coord cell_b, const EnthalpyParams& p) {
    if (g.at(cell_a) == g.at(cell_b))
        throw domain_error("delta_free_energy: cells share a state, swap undefined");
    const long long n = g.size();
    const ConfigCounts before = count(g);
    Grid scratch = g;
    const ConfigCounts after = swapped_counts(scratch, before, g.index(cell_a), g.index(cell_b));
    const double f0 = free_energy(fractions(before, n), p).free_energy;
    const double f1 = free_energy(fractions(after, n), p).free_energy;
    return f1 - f0;
}

} // namespace cvm

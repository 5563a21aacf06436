#include "cvm/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "cvm/errors.hpp"
#include "cvm/rng.hpp"

namespace cvm {

namespace {

inline int wrap(int v, int n) {
    v %= n;
    return v < 0 ? v + n : v;
}

// True when no A-cell outside `mine` sits within Chebyshev distance 1.
// A null `mine` means any A-cell blocks.
bool gap_clear(const Grid& g, int cell, const std::vector<char>* mine) {
    const int r = cell / g.cols, c = cell % g.cols;
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            const int nb = wrap(r + dr, g.rows) * g.cols + wrap(c + dc, g.cols);
            if (g.cells[static_cast<std::size_t>(nb)] == UnitState::A &&
                (!mine || !(*mine)[static_cast<std::size_t>(nb)]))
                return false;
        }
    }
    return true;
}

// Accretion score of a candidate site. Inter-row contact outweighs in-row
// contact so blobs grow tall rather than round, which keeps background cells
// bridging two same-row A-cells rare and like-vertex triplets common.
int lattice_contact(const Grid& g, int cell, const std::vector<char>& mine) {
    const Coord p{cell / g.cols, cell % g.cols};
    int contact = 0;
    for (Coord nb : diagonal_neighbors(g, p))
        contact += 3 * mine[static_cast<std::size_t>(g.index(nb))];
    for (Coord nb : row_neighbors(g, p))
        contact += mine[static_cast<std::size_t>(g.index(nb))];
    return contact;
}

// Grows one blob of `size` A-cells by random accretion, preferring sites
// with the most in-blob lattice neighbors. side 0/1 restricts the seed and
// growth to the left/right column half; -1 allows anywhere. With
// respect_gap, the blob keeps one background cell between itself and every
// earlier blob. Rolls back and reports failure when growth stalls.
bool try_island(Grid& g, Rng& rng, int size, int side, bool respect_gap) {
    const int col_lo = side == 1 ? g.cols / 2 : 0;
    const int col_hi = side == 0 ? g.cols / 2 : g.cols;

    std::vector<int> seeds;
    for (int r = 0; r < g.rows; ++r) {
        for (int c = col_lo; c < col_hi; ++c) {
            const int cell = r * g.cols + c;
            if (g.cells[static_cast<std::size_t>(cell)] != UnitState::B) continue;
            if (respect_gap && !gap_clear(g, cell, nullptr)) continue;
            seeds.push_back(cell);
        }
    }
    if (seeds.empty()) return false;

    std::vector<char> mine(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> members;
    const int seed_cell = seeds[static_cast<std::size_t>(rng.below(seeds.size()))];
    members.push_back(seed_cell);
    mine[static_cast<std::size_t>(seed_cell)] = 1;
    g.cells[static_cast<std::size_t>(seed_cell)] = UnitState::A;

    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    while (static_cast<int>(members.size()) < size) {
        std::fill(seen.begin(), seen.end(), 0);
        int best = -1;
        std::vector<int> best_cells;
        for (int m : members) {
            const int mr = m / g.cols, mc = m % g.cols;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const int nb = wrap(mr + dr, g.rows) * g.cols + wrap(mc + dc, g.cols);
                    if (seen[static_cast<std::size_t>(nb)]) continue;
                    seen[static_cast<std::size_t>(nb)] = 1;
                    if (g.cells[static_cast<std::size_t>(nb)] != UnitState::B) continue;
                    const int nc = nb % g.cols;
                    if (side >= 0 && (nc < col_lo || nc >= col_hi)) continue;
                    if (respect_gap && !gap_clear(g, nb, &mine)) continue;
                    const int contact = lattice_contact(g, nb, mine);
                    if (contact > best) {
                        best = contact;
                        best_cells.assign(1, nb);
                    } else if (contact == best) {
                        best_cells.push_back(nb);
                    }
                }
            }
        }
        if (best_cells.empty()) {
            for (int m : members) g.cells[static_cast<std::size_t>(m)] = UnitState::B;
            return false;
        }
        const int pick = best_cells[static_cast<std::size_t>(rng.below(best_cells.size()))];
        members.push_back(pick);
        mine[static_cast<std::size_t>(pick)] = 1;
        g.cells[static_cast<std::size_t>(pick)] = UnitState::A;
    }
    return true;
}

// One column half's island plan: a big blob, a few middling ones, then
// scatter, repeated if the budget outlasts the template.
std::vector<int> island_sizes(int budget) {
    static const int tmpl[] = {16, 8, 8, 4, 4, 4, 4, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1};
    std::vector<int> out;
    while (budget > 0) {
        for (int s : tmpl) {
            if (budget <= 0) break;
            const int take = std::min(s, budget);
            out.push_back(take);
            budget -= take;
        }
    }
    return out;
}

Grid scale_free_like(const PatternSpec& spec) {
    Grid g = new_uniform(spec.rows, spec.cols, UnitState::B);
    Rng rng(spec.seed);

    const std::vector<int> left = island_sizes(spec.n_active - spec.n_active / 2);
    const std::vector<int> right = island_sizes(spec.n_active / 2);
    std::vector<std::pair<int, int>> plan;  // (size, side)
    for (std::size_t i = 0; i < std::max(left.size(), right.size()); ++i) {
        if (i < left.size()) plan.emplace_back(left[i], 0);
        if (i < right.size()) plan.emplace_back(right[i], 1);
    }

    int placed = 0;
    for (const auto& [size, side] : plan) {
        bool ok = false;
        for (int attempt = 0; attempt < 200 && !ok; ++attempt)
            ok = try_island(g, rng, size, side, true);
        for (int attempt = 0; attempt < 200 && !ok; ++attempt)
            ok = try_island(g, rng, size, side, false);
        for (int attempt = 0; attempt < 200 && !ok; ++attempt)
            ok = try_island(g, rng, size, -1, false);
        if (!ok)
            throw domain_error("scale_free_like: placed " + std::to_string(placed) + " of " +
                               std::to_string(plan.size()) + " islands, no room for the rest");
        ++placed;
    }
    return g;
}

Grid rich_club_like(const PatternSpec& spec) {
    Grid g = new_uniform(spec.rows, spec.cols, UnitState::B);
    const int full = spec.n_active / spec.rows;
    const int rem = spec.n_active % spec.rows;
    // Centering the block on the column seam exercises the wrap.
    const int start = wrap(spec.cols - full / 2, spec.cols);
    for (int j = 0; j < full; ++j) {
        const int c = (start + j) % spec.cols;
        for (int r = 0; r < spec.rows; ++r) g.set(r, c, UnitState::A);
    }
    if (rem > 0) {
        const int c = (start + full) % spec.cols;
        for (int r = 0; r < rem; ++r) g.set(r, c, UnitState::A);
    }
    return g;
}

Grid very_small_rich_club(const PatternSpec& spec) {
    Grid g = new_uniform(spec.rows, spec.cols, UnitState::B);
    // Block aspect chosen so n_active = 30 yields the canonical 5x6.
    int rb = static_cast<int>(std::llround(std::sqrt(spec.n_active * 5.0 / 6.0)));
    rb = std::clamp(rb, 1, spec.rows);
    int cb = (spec.n_active + rb - 1) / rb;
    if (cb > spec.cols) {
        cb = spec.cols;
        rb = std::min((spec.n_active + cb - 1) / cb, spec.rows);
    }
    const int r0 = (spec.rows - rb) / 2;
    const int c0 = (spec.cols - cb) / 2;
    int budget = spec.n_active;
    for (int r = r0; r < r0 + rb && budget > 0; ++r)
        for (int c = c0; c < c0 + cb && budget > 0; ++c, --budget) g.set(r, c, UnitState::A);
    for (int i = 0; i < g.size() && budget > 0; ++i) {
        if (g.cells[static_cast<std::size_t>(i)] == UnitState::B) {
            g.cells[static_cast<std::size_t>(i)] = UnitState::A;
            --budget;
        }
    }
    return g;
}

Grid stripes(const PatternSpec& spec) {
    Grid g = new_uniform(spec.rows, spec.cols, UnitState::B);
    int budget = spec.n_active;
    for (int pass = 0; pass < 2 && budget > 0; ++pass)
        for (int r = pass; r < spec.rows && budget > 0; r += 2)
            for (int c = 0; c < spec.cols && budget > 0; ++c, --budget) g.set(r, c, UnitState::A);
    return g;
}

} // namespace

Grid generate(const PatternSpec& spec) {
    Grid probe = new_uniform(spec.rows, spec.cols, UnitState::B);
    if (spec.n_active < 0 || spec.n_active > probe.size())
        throw domain_error("generate: n_active must be in [0, " + std::to_string(probe.size()) +
                           "], got " + std::to_string(spec.n_active));

    switch (spec.kind) {
    case PatternKind::random_uniform:
        return new_random(spec.rows, spec.cols, spec.n_active, spec.seed);
    case PatternKind::stripes:
        return stripes(spec);
    case PatternKind::rich_club_like:
        return rich_club_like(spec);
    case PatternKind::very_small_rich_club:
        return very_small_rich_club(spec);
    case PatternKind::scale_free_like:
        return scale_free_like(spec);
    }
    throw domain_error("generate: unknown pattern kind");
}

} // namespace cvm

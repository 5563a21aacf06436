#ifndef CVM_PATTERNS_HPP
#define CVM_PATTERNS_HPP

#include <cstdint>

#include "cvm/lattice.hpp"

namespace cvm {

// Archetype starting configurations for minimization experiments.
//   scale_free_like      many islands with geometrically decreasing sizes,
//                        separated by background gaps where space allows
//   rich_club_like       one compact rectangle wrapped across the seam
//   very_small_rich_club one small centered block (5x6 when n_active = 30)
//   random_uniform       uniform random placement
//   stripes              filled rows alternating with empty rows
enum class PatternKind {
    scale_free_like,
    rich_club_like,
    very_small_rich_club,
    random_uniform,
    stripes,
};

struct PatternSpec {
    PatternKind kind = PatternKind::random_uniform;
    int rows = 16;
    int cols = 16;
    int n_active = 128;
    std::uint64_t seed = 0;
};

// Same inputs, same grid; the result always has exactly n_active A-cells.
// Throws domain_error on bad dimensions, n_active outside [0, N], or an
// island layout that cannot be placed (reporting how many were).
Grid generate(const PatternSpec& spec);

} // namespace cvm

#endif

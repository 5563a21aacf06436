#ifndef CVM_LATTICE_HPP
#define CVM_LATTICE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cvm {

// Two unit states. A is the "active" state; B is the background.
enum class UnitState : unsigned char { B = 0, A = 1 };

struct Coord {
    int row = 0;
    int col = 0;
};

inline bool operator==(Coord a, Coord b) { return a.row == b.row && a.col == b.col; }
inline bool operator!=(Coord a, Coord b) { return !(a == b); }

// Toroidal bistate lattice stored row-major. Rows alternate in horizontal
// offset, so diagonal adjacency depends on row parity. Invariants: rows is
// even and >= 2, cols >= 2.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<UnitState> cells;

    int size() const { return rows * cols; }
    int index(int r, int c) const { return r * cols + c; }
    int index(Coord p) const { return p.row * cols + p.col; }
    UnitState at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
    UnitState at(Coord p) const { return at(p.row, p.col); }
    void set(int r, int c, UnitState s) { cells[static_cast<std::size_t>(r) * cols + c] = s; }
    void set(Coord p, UnitState s) { set(p.row, p.col, s); }

    // Number of units in state A.
    int active_count() const;
};

// All-one-state grid. Throws domain_error on bad dimensions.
Grid new_uniform(int rows, int cols, UnitState s);

// Exactly n_active units set to A at seed-determined positions; the rest B.
// Throws domain_error on bad dimensions or n_active outside [0, N].
Grid new_random(int rows, int cols, int n_active, std::uint64_t seed);

// The four diagonally adjacent units, ordered up-left, up-right, down-left,
// down-right in offset-row terms. Coordinates wrap; entries may repeat on a
// 2-row torus (double links are intentional and counted with multiplicity).
std::array<Coord, 4> diagonal_neighbors(const Grid& g, Coord p);

// The two units adjacent within the row (next-nearest neighbors), ordered
// left, right. On a 2-column torus both are the same unit.
std::array<Coord, 2> row_neighbors(const Grid& g, Coord p);

// Wing-vertex-wing triple. Wings sit in one adjacent row and are row
// neighbors of each other; the vertex sits between them in the other row.
struct Triplet {
    Coord left;
    Coord vertex;
    Coord right;
};

// The two triplets centered on p: wings in the row above, then wings in the
// row below. Every unit is the vertex of exactly these two.
std::array<Triplet, 2> triplets_at(const Grid& g, Coord p);

// Toggles one unit in place. p must be in range.
void flip(Grid& g, Coord p);

// Parses rows of A/B or 1/0 characters, one lattice row per line. Throws
// parse_error on ragged rows, illegal characters, or invalid dimensions.
Grid from_text(std::string_view text);

// Rows of A/B characters, each terminated by a newline.
std::string to_text(const Grid& g);

} // namespace cvm

#endif

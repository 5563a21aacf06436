#include "cvm/lattice.hpp"

#include <numeric>
#include <sstream>

#include "cvm/errors.hpp"
#include "cvm/rng.hpp"

namespace cvm {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 2 || rows % 2 != 0)
        throw domain_error("grid rows must be even and >= 2, got " + std::to_string(rows));
    if (cols < 2)
        throw domain_error("grid cols must be >= 2, got " + std::to_string(cols));
}

inline int up(int r, int rows) { return r == 0 ? rows - 1 : r - 1; }
inline int down(int r, int rows) { return r == rows - 1 ? 0 : r + 1; }
inline int left(int c, int cols) { return c == 0 ? cols - 1 : c - 1; }
inline int right(int c, int cols) { return c == cols - 1 ? 0 : c + 1; }

} // namespace

int Grid::active_count() const {
    int n = 0;
    for (UnitState s : cells)
        if (s == UnitState::A) ++n;
    return n;
}

Grid new_uniform(int rows, int cols, UnitState s) {
    check_dims(rows, cols);
    Grid g;
    g.rows = rows;
    g.cols = cols;
    g.cells.assign(static_cast<std::size_t>(rows) * cols, s);
    return g;
}

Grid new_random(int rows, int cols, int n_active, std::uint64_t seed) {
    check_dims(rows, cols);
    const int n = rows * cols;
    if (n_active < 0 || n_active > n)
        throw domain_error("n_active must be in [0, " + std::to_string(n) + "], got " +
                           std::to_string(n_active));
    Grid g = new_uniform(rows, cols, UnitState::B);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    rng.partial_shuffle(idx, static_cast<std::size_t>(n_active));
    for (int i = 0; i < n_active; ++i)
        g.cells[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = UnitState::A;
    return g;
}

std::array<Coord, 4> diagonal_neighbors(const Grid& g, Coord p) {
    const int ru = up(p.row, g.rows);
    const int rd = down(p.row, g.rows);
    if (p.row % 2 == 0) {
        const int cl = left(p.col, g.cols);
        return {Coord{ru, cl}, Coord{ru, p.col}, Coord{rd, cl}, Coord{rd, p.col}};
    }
    const int cr = right(p.col, g.cols);
    return {Coord{ru, p.col}, Coord{ru, cr}, Coord{rd, p.col}, Coord{rd, cr}};
}

std::array<Coord, 2> row_neighbors(const Grid& g, Coord p) {
    return {Coord{p.row, left(p.col, g.cols)}, Coord{p.row, right(p.col, g.cols)}};
}

std::array<Triplet, 2> triplets_at(const Grid& g, Coord p) {
    const auto nn = diagonal_neighbors(g, p);
    return {Triplet{nn[0], p, nn[1]}, Triplet{nn[2], p, nn[3]}};
}

void flip(Grid& g, Coord p) {
    UnitState& s = g.cells[static_cast<std::size_t>(g.index(p))];
    s = (s == UnitState::A) ? UnitState::B : UnitState::A;
}

Grid from_text(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty()) throw parse_error("empty grid text");
    const std::size_t cols = lines[0].size();
    for (std::size_t r = 0; r < lines.size(); ++r)
        if (lines[r].size() != cols)
            throw parse_error("ragged grid text: row " + std::to_string(r) + " has " +
                              std::to_string(lines[r].size()) + " columns, expected " +
                              std::to_string(cols));
    if (lines.size() % 2 != 0 || lines.size() < 2)
        throw parse_error("grid text must have an even number of rows >= 2, got " +
                          std::to_string(lines.size()));
    if (cols < 2)
        throw parse_error("grid text must have >= 2 columns, got " + std::to_string(cols));

    Grid g;
    g.rows = static_cast<int>(lines.size());
    g.cols = static_cast<int>(cols);
    g.cells.reserve(static_cast<std::size_t>(g.rows) * g.cols);
    for (const std::string& line : lines) {
        for (char ch : line) {
            switch (ch) {
            case 'A':
            case '1': g.cells.push_back(UnitState::A); break;
            case 'B':
            case '0': g.cells.push_back(UnitState::B); break;
            default:
                throw parse_error(std::string("illegal grid character '") + ch +
                                  "', expected A/B or 1/0");
            }
        }
    }
    return g;
}

std::string to_text(const Grid& g) {
    std::string out;
    out.reserve(static_cast<std::size_t>(g.rows) * (g.cols + 1));
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c)
            out.push_back(g.at(r, c) == UnitState::A ? 'A' : 'B');
        out.push_back('\n');
    }
    return out;
}

} // namespace cvm

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "cvm/analytic.hpp"
#include "cvm/configvars.hpp"
#include "cvm/errors.hpp"
#include "cvm/lattice.hpp"
#include "cvm/patterns.hpp"

using namespace cvm;

namespace {

PatternSpec spec_of(PatternKind k, int n_active, std::uint64_t seed = 0) {
    PatternSpec s;
    s.kind = k;
    s.rows = 16;
    s.cols = 16;
    s.n_active = n_active;
    s.seed = seed;
    return s;
}

ConfigFractions fractions_of(const Grid& g) { return fractions(count(g), g.size()); }

std::string read_fixture(const std::string& name) {
    const std::string path = std::string(CVM2D_FIXTURE_DIR) + "/" + name;
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("every pattern kind hits the requested active count exactly") {
    const PatternKind kinds[] = {PatternKind::scale_free_like, PatternKind::rich_club_like,
                                 PatternKind::very_small_rich_club, PatternKind::random_uniform,
                                 PatternKind::stripes};
    for (PatternKind k : kinds) {
        for (int n : {30, 90, 128}) {
            const Grid g = generate(spec_of(k, n, 5));
            CHECK(g.rows == 16);
            CHECK(g.active_count() == n);
        }
    }
    for (PatternKind k : {PatternKind::rich_club_like, PatternKind::very_small_rich_club,
                          PatternKind::random_uniform, PatternKind::stripes}) {
        CHECK(generate(spec_of(k, 0)).active_count() == 0);
        CHECK(generate(spec_of(k, 256)).active_count() == 256);
    }
}

TEST_CASE("generate rejects an active count outside the lattice") {
    CHECK_THROWS_AS(generate(spec_of(PatternKind::random_uniform, -1)), domain_error);
    CHECK_THROWS_AS(generate(spec_of(PatternKind::random_uniform, 257)), domain_error);
    PatternSpec bad = spec_of(PatternKind::stripes, 10);
    bad.rows = 3;  // odd row count is not a valid torus here
    CHECK_THROWS_AS(generate(bad), domain_error);
}

TEST_CASE("the small block pattern is a centered five by six rectangle") {
    const Grid g = generate(spec_of(PatternKind::very_small_rich_club, 30));
    CHECK(g.active_count() == 30);
    CHECK(fractions_of(g).x1 == doctest::Approx(30.0 / 256.0).epsilon(1e-12));
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            const bool inside = r >= 5 && r < 10 && c >= 5 && c < 11;
            CHECK(g.at(r, c) == (inside ? UnitState::A : UnitState::B));
        }
}

TEST_CASE("the compact mass concentrates like pairs") {
    const Grid g = generate(spec_of(PatternKind::rich_club_like, 128));
    const ConfigFractions fr = fractions_of(g);
    CHECK(fr.x1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fr.z1 > 0.3);
    CHECK(fr.y2 < 0.12);

    // One contiguous band of full columns, wrapped across the seam.
    int boundaries = 0;
    for (int c = 0; c < 16; ++c)
        if (g.at(0, c) != g.at(0, (c + 1) % 16)) ++boundaries;
    CHECK(boundaries == 2);
    for (int c = 0; c < 16; ++c)
        for (int r = 1; r < 16; ++r) CHECK(g.at(r, c) == g.at(0, c));
}

TEST_CASE("the dispersed archetype sits opposite the compact one") {
    const ConfigFractions club = fractions_of(generate(spec_of(PatternKind::rich_club_like, 128)));
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 3ULL}) {
        const ConfigFractions fr =
            fractions_of(generate(spec_of(PatternKind::scale_free_like, 128, seed)));
        CHECK(fr.x1 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(fr.z1 < club.z1);
        CHECK(fr.y2 > club.y2);
        CHECK(fr.z3 > club.z3);
    }
}

TEST_CASE("field readings off dispersed grids land near the worked neighborhood") {
    for (std::uint64_t seed : {0ULL, 1ULL, 3ULL, 7ULL}) {
        const Grid g = generate(spec_of(PatternKind::scale_free_like, 128, seed));
        const double est = estimate_h(fractions_of(g));
        CHECK(est >= 1.3);
        CHECK(est <= 2.2);
    }
}

TEST_CASE("stripes alternate filled and empty rows") {
    const Grid g = generate(spec_of(PatternKind::stripes, 128));
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c)
            CHECK(g.at(r, c) == (r % 2 == 0 ? UnitState::A : UnitState::B));

    // A short budget fills even rows first, in row-major order.
    const Grid part = generate(spec_of(PatternKind::stripes, 40));
    CHECK(part.active_count() == 40);
    for (int c = 0; c < 16; ++c) {
        CHECK(part.at(0, c) == UnitState::A);
        CHECK(part.at(2, c) == UnitState::A);
        CHECK(part.at(4, c) == (c < 8 ? UnitState::A : UnitState::B));
        CHECK(part.at(1, c) == UnitState::B);
    }
}

TEST_CASE("generation is deterministic per spec") {
    for (PatternKind k : {PatternKind::scale_free_like, PatternKind::random_uniform}) {
        const Grid a = generate(spec_of(k, 128, 5));
        const Grid b = generate(spec_of(k, 128, 5));
        CHECK(a.cells == b.cells);
    }
}

TEST_CASE("fixture files parse and match their generators' signatures") {
    SUBCASE("deterministic kinds equal their fixtures cell for cell") {
        CHECK(to_text(generate(spec_of(PatternKind::rich_club_like, 128))) ==
              read_fixture("rich_club_16x16.txt"));
        CHECK(to_text(generate(spec_of(PatternKind::very_small_rich_club, 30))) ==
              read_fixture("very_small_rich_club_16x16.txt"));
    }
    SUBCASE("dispersed fixture carries the dispersed signature") {
        const Grid g = from_text(read_fixture("scale_free_16x16.txt"));
        CHECK(g.active_count() == 128);
        const ConfigFractions fr = fractions_of(g);
        CHECK(fr.y2 > 0.15);
        CHECK(fr.z1 < 0.3);
        const double est = estimate_h(fr);
        CHECK(est >= 1.3);
        CHECK(est <= 2.2);
    }
    SUBCASE("compact fixture carries the compact signature") {
        const Grid g = from_text(read_fixture("rich_club_16x16.txt"));
        CHECK(g.active_count() == 128);
        const ConfigFractions fr = fractions_of(g);
        CHECK(fr.z1 > 0.3);
        CHECK(fr.y2 < 0.12);
        CHECK(fr.z3 == 0.0);  // no background cell bridges two same-row A-cells
    }
    SUBCASE("small block fixture keeps its dilute composition") {
        const Grid g = from_text(read_fixture("very_small_rich_club_16x16.txt"));
        CHECK(g.active_count() == 30);
        CHECK(fractions_of(g).x1 == doctest::Approx(30.0 / 256.0).epsilon(1e-12));
    }
}

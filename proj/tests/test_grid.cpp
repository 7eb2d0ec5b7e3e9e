#include <doctest.h>

#include <algorithm>

#include "gpade/acceptance.hpp"

using namespace gpade;

TEST_CASE("grid definition")
{
    const auto grid = acceptance_grid(10);
    CHECK(grid.size() == 314);
    for (const auto& g : grid) {
        CHECK(g.p <= 10);
        CHECK(g.q <= g.p);
    }
    CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());
}

TEST_CASE("serial and parallel grid runs agree")
{
    const auto grid = acceptance_grid(5);
    REQUIRE_FALSE(grid.empty());
    const auto serial = run_grid_serial(grid);
    const auto parallel = run_grid_parallel(grid);
    REQUIRE(serial.size() == grid.size());
    CHECK(serial == parallel);
    for (const auto& o : serial) {
        CHECK(o.built);
        CHECK(o.order_ok);
        CHECK(o.integrality_ok);
        CHECK(o.iteration_ok);
        CHECK(o.nonzero);
    }
}

#include <doctest.h>

#include <cmath>

#include "levykit/errors.hpp"
#include "levykit/index_map.hpp"
#include "levykit/rng.hpp"

using namespace levykit;

TEST_CASE("estimate_holder: constant map is degenerate -> (1, 0)") {
    IndexMap m = IndexMap::constant(1.5, 0.0, 2.0);
    auto [rho, c] = estimate_holder(m, 500, 99);
    CHECK(rho == 1.0);
    CHECK(c == 0.0);
}

TEST_CASE("estimate_holder: clamped identity is Lipschitz with slope 1") {
    IndexMap m = IndexMap::affine(0.5, 1.0, 1e-3, 1.0 - 1e-3, 0.0, 1.0);
    auto [rho, c] = estimate_holder(m, 4000, 7, 0.6);
    CHECK(std::abs(rho - 1.0) < 0.05);
    CHECK(c <= 1.1);
}

TEST_CASE("estimate_holder: sinusoidal constant within 10% of amplitude*frequency") {
    IndexMap m = IndexMap::sinusoidal(1.0, 0.9, 1.0, 0.0, 0.0, 2.0);
    auto [rho, c] = estimate_holder(m, 20000, 3);
    (void)rho;
    CHECK(c < 0.9 * 1.1);
    CHECK(c > 0.9 * 0.5);  // fitted constant is an average-case lower estimate
}

TEST_CASE("two-point quotients never exceed 1.05x the analytic constant") {
    IndexMap maps[] = {
        IndexMap::sinusoidal(1.5, 0.2, 1.3, 0.4, 0.0, 2.0),
        IndexMap::affine(1.0, -0.7, 0.25, 1.75, 0.0, 2.0),
        IndexMap::tabulated({{-1.0, 0.4}, {0.5, 0.9}, {2.0, 0.6}}, 0.0, 1.0),
    };
    PhiloxStream rng(5, 5);
    for (const auto& m : maps) {
        for (int i = 0; i < 10000; ++i) {
            double x = 20.0 * rng.next_double() - 10.0;
            double y = 20.0 * rng.next_double() - 10.0;
            if (x == y) continue;
            double q = std::abs(m(x) - m(y)) / std::pow(std::abs(x - y), m.holder_exponent);
            CHECK(q <= 1.05 * m.holder_constant + 1e-12);
        }
    }
}

TEST_CASE("codomain margins are enforced") {
    CHECK_THROWS_AS(IndexMap::sinusoidal(1.0, 1.0, 1.0, 0.0, 0.0, 2.0), CodomainViolationError);
    CHECK_NOTHROW(IndexMap::sinusoidal(1.0, 0.999998, 1.0, 0.0, 0.0, 2.0));
}

TEST_CASE("tabulated maps interpolate and extrapolate flat") {
    IndexMap m = IndexMap::tabulated({{0.0, 1.0}, {1.0, 2.0}}, 0.0, 3.0);
    CHECK(m(0.5) == doctest::Approx(1.5));
    CHECK(m(-10.0) == 1.0);
    CHECK(m(10.0) == 2.0);
}

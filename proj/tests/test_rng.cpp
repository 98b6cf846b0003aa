#include <doctest.h>

#include <cmath>
#include <vector>

#include "levykit/rng.hpp"

using namespace levykit;

TEST_CASE("philox streams are reproducible and independent") {
    PhiloxStream a(42, 0), b(42, 0), c(42, 1);
    std::vector<std::uint32_t> va, vb, vc;
    for (int i = 0; i < 64; ++i) {
        va.push_back(a.next_u32());
        vb.push_back(b.next_u32());
        vc.push_back(c.next_u32());
    }
    CHECK(va == vb);
    CHECK(va != vc);
}

TEST_CASE("philox doubles are uniform in bulk") {
    PhiloxStream rng(7, 3);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 0.005);
    CHECK(std::abs(var - 1.0 / 12.0) < 0.005);
}

TEST_CASE("open-interval draw never returns zero") {
    PhiloxStream rng(1, 0);
    for (int i = 0; i < 10000; ++i) CHECK(rng.next_open_double() > 0.0);
}

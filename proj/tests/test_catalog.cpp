#include <doctest.h>

#include <cmath>
#include <set>

#include "levykit/catalog.hpp"
#include "levykit/errors.hpp"
#include "levykit/var_order.hpp"

using namespace levykit;

TEST_CASE("catalog ships 26 Levy rows and 25 Laplace rows") {
    int levy = 0, laplace = 0, varorder = 0;
    for (const auto& key : catalog_keys()) {
        const CatalogEntry& e = lookup(key);
        if (e.source_row.rfind("1:", 0) == 0) ++levy;
        if (e.source_row.rfind("2:", 0) == 0) ++laplace;
        if (!e.t3_row.empty()) ++varorder;
    }
    CHECK(levy == 26);
    CHECK(laplace == 25);
    CHECK(varorder == 26);
}

TEST_CASE("lookup: pinned rows carry their stated heat-kernel parameters") {
    SymbolSpec rel = build_spec("relativistic-stable", {{"alpha", 1.4}, {"rho", 2.0}});
    CHECK(rel.gamma0 == 2.0);
    CHECK(rel.gamma_inf == doctest::Approx(1.4));
    CHECK(rel.m == doctest::Approx(0.9 * 2.0));

    SymbolSpec st = build_spec("isotropic-stable", {{"alpha", 2.0}});
    CHECK(st.gamma0 == 2.0);
    CHECK(st.gamma_inf == 2.0);
    CHECK(st.m == 0.0);

    SymbolSpec lg = build_spec("laplace-gamma-ratio", {{"rho", 1.0}});
    CHECK(lg.gamma0 == 1.0);
    CHECK(lg.gamma_inf == 0.5);
    CHECK(lg.m == doctest::Approx(0.9 * 0.5));
    CHECK(lg.is_subordinator_exponent);
}

TEST_CASE("stated growth orders match slope fits at both ends of the real axis") {
    // gamma_inf must be the tight asymptotic order; gamma0 only an upper bound
    // near zero (|psi| <= c |xi|^{gamma0} for |xi| <= 1). Rows 1:3 and 2:2
    // state gamma0 = 2 although the first-order term at zero is linear (the
    // drift part of NTS, the derivative of (lambda+rho)^alpha); the stated
    // values are kept as printed, so they are exempt from the near-zero check.
    std::set<std::string> gamma0_not_tight{"1:3", "2:2"};
    for (const auto& key : catalog_keys()) {
        const CatalogEntry& entry = lookup(key);
        auto params = random_in_range_params(entry, 5);
        SymbolSpec spec = build_spec(key, params);

        auto slope = [&](double lo, double hi) {
            int n = 7;
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (int i = 0; i < n; ++i) {
                double xi = lo * std::pow(hi / lo, double(i) / (n - 1));
                double v = std::abs(evaluate(spec, xi));
                double lx = std::log(xi), ly = std::log(v);
                sx += lx;
                sy += ly;
                sxx += lx * lx;
                sxy += lx * ly;
            }
            return (n * sxy - sx * sy) / (n * sxx - sx * sx);
        };

        bool sub = spec.is_subordinator_exponent;
        double gi = sub ? slope(1e4, 1e6) : slope(300.0, 3000.0);
        double allowance = spec.ell == Ell::log ? 0.26 : 0.08;
        CHECK_MESSAGE(std::abs(gi - spec.gamma_inf) < allowance, key, " gamma_inf fit ", gi,
                      " stated ", spec.gamma_inf);

        if (!gamma0_not_tight.count(entry.source_row)) {
            double g0 = slope(1e-4, 1e-3);
            double slack = spec.ell == Ell::log ? 0.3 : 0.1;
            CHECK_MESSAGE(g0 > spec.gamma0 - slack, key, " gamma0 fit ", g0, " stated ",
                          spec.gamma0);
        }
    }
}

TEST_CASE("drift rows are the known defect: growth certificate fails honestly") {
    // sub-log and sub-coth-linear have f(lambda)/lambda -> rho > 0 (a linear
    // drift), so Re F is unbounded below on the Upsilon sectors and (S3)
    // cannot hold; the laws have an atom at the drift point.
    for (const char* key : {"sub-log", "sub-coth-linear"}) {
        SymbolSpec spec = build_spec(key, {{"rho", 1.0}});
        double drift_ratio = std::abs(evaluate(spec, 0.0).real());  // psi(0) = 0 still
        CHECK(drift_ratio == 0.0);
        BoundCertificate cert = check_growth_bounds(spec);
        CHECK(!cert.passed);
    }
}

TEST_CASE("every non-defect row passes its growth certificate on 3 random draws") {
    std::set<std::string> defect{"sub-log", "sub-coth-linear"};
    for (const auto& key : catalog_keys()) {
        if (defect.count(key)) continue;
        const CatalogEntry& entry = lookup(key);
        for (std::uint64_t draw = 0; draw < 3; ++draw) {
            auto params = random_in_range_params(entry, 101 + draw);
            SymbolSpec spec = build_spec(key, params);
            BoundCertificate cert = check_growth_bounds(spec);
            CHECK_MESSAGE(cert.passed, key, " draw ", draw, ": ", cert.note, " c1=", cert.c1_hat);
        }
    }
}

TEST_CASE("build_var_order: constant map degenerates to the Table-1 row") {
    std::map<std::string, IndexMap> maps{{"alpha", IndexMap::constant(1.5, 0.0, 2.0)}};
    VarOrderSymbol vos = build_var_order("isotropic-stable", maps);
    CHECK(vos.gamma_inf_L == doctest::Approx(1.5));
    CHECK(vos.gamma_inf_U == doctest::Approx(1.5));
    CHECK(std::abs(vos.q(0.3, 2.0) - std::pow(2.0, 1.5)) < 1e-12);
}

TEST_CASE("build_var_order: sinusoidal stable-like index map") {
    std::map<std::string, IndexMap> maps{
        {"alpha", IndexMap::sinusoidal(1.5, 0.2, 1.0, 0.0, 0.0, 2.0)}};
    VarOrderSymbol vos = build_var_order("isotropic-stable", maps);
    CHECK(vos.gamma_inf_L == doctest::Approx(1.3));
    CHECK(vos.gamma_inf_U == doctest::Approx(1.7));
    CHECK(vos.m == 0.0);
    CHECK(vos.kappa == doctest::Approx((1.0 / 1.7) * 1.0));
    CHECK(vos.varying_param == "alpha");
}

TEST_CASE("build_var_order: power form scales the envelope orders") {
    std::map<std::string, IndexMap> maps{
        {"alpha", IndexMap::sinusoidal(1.2, 0.1, 1.0, 0.0, 0.0, 2.0)}};
    IndexMap power = IndexMap::sinusoidal(0.6, 0.1, 0.5, 0.0, 0.0, 1.0000001);
    VarOrderSymbol vos = build_var_order("isotropic-stable", maps, power);
    CHECK(vos.m == 0.0);
    // gamma_tilde_inf(x) = a(x) gamma_inf(beta(x)); extrema over the window
    CHECK(vos.gamma_inf_U <= doctest::Approx(0.7 * 1.3).epsilon(0.02));
    CHECK(vos.gamma_inf_L >= doctest::Approx(0.5 * 1.1).epsilon(0.02));
    double q = std::abs(vos.q(0.0, 3.0));
    double expect = std::pow(std::pow(3.0, (1.2)), 0.6);
    CHECK(q == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("build_var_order rejects codomain and missing-map violations") {
    std::map<std::string, IndexMap> bad{
        {"alpha", IndexMap::sinusoidal(1.9, 0.2, 1.0, 0.0, 0.0, 2.2)}};
    CHECK_THROWS_AS(build_var_order("isotropic-stable", bad), CodomainViolationError);
    std::map<std::string, IndexMap> missing;
    CHECK_THROWS_AS(build_var_order("isotropic-stable", missing), MissingIndexMapError);
    // rho may not vary for the gamma-ratio-half family? It may (3:23). But a
    // family parameter absent from the schema is rejected.
    std::map<std::string, IndexMap> extra{
        {"alpha", IndexMap::constant(1.5, 0.0, 2.0)},
        {"zeta", IndexMap::constant(1.0, 0.0, 2.0)}};
    CHECK_THROWS_AS(build_var_order("isotropic-stable", extra), MissingIndexMapError);
}

TEST_CASE("kappa arithmetic matches hand evaluation for catalog configurations") {
    struct Case {
        const char* key;
        std::map<std::string, IndexMap> maps;
        double expect_gi_U;
        double expect_rho;
    };
    std::map<std::string, IndexMap> m1{{"alpha", IndexMap::sinusoidal(1.5, 0.2, 1.0, 0.0, 0.0, 2.0)}};
    std::map<std::string, IndexMap> m2{{"alpha", IndexMap::sinusoidal(1.2, 0.3, 2.0, 0.0, 0.0, 2.0)},
                                       {"rho", IndexMap::constant(1.0, 0.0, 10.0)}};
    std::map<std::string, IndexMap> m3{{"alpha", IndexMap::constant(0.8, 0.0, 2.0)}};
    std::map<std::string, IndexMap> m4{{"rho", IndexMap::affine(1.0, 0.25, 0.8, 1.4, 0.0, 10.0)}};
    std::map<std::string, IndexMap> m5{
        {"alpha", IndexMap::tabulated({{-1.0, 1.3}, {0.0, 1.6}, {2.0, 1.4}}, 0.0, 2.0)}};
    Case cases[] = {
        {"isotropic-stable", m1, 1.7, 1.0},
        {"relativistic-stable", m2, 1.5, 1.0},
        {"isotropic-stable", m3, 0.8, 1.0},
        {"quadratic-sqrt-ratio", m4, 1.0, 1.0},
        {"isotropic-stable", m5, 1.6, 1.0},
    };
    for (const auto& c : cases) {
        VarOrderSymbol vos = build_var_order(c.key, c.maps);
        double gamma = 1.0 / c.expect_gi_U;
        double kappa = gamma * std::min(c.expect_rho, (-1.0 + c.expect_gi_U) + 1.0);
        // extrema of sinusoidal maps are located by a dense probe grid
        CHECK_MESSAGE(vos.kappa == doctest::Approx(kappa).epsilon(1e-4), c.key);
        CHECK(vos.kappa > 0.0);
    }
}

TEST_CASE("pointwise gamma rules agree with the frozen Table-1 rules") {
    std::map<std::string, IndexMap> maps{
        {"alpha", IndexMap::sinusoidal(1.5, 0.2, 1.0, 0.0, 0.0, 2.0)}};
    VarOrderSymbol vos = build_var_order("isotropic-stable", maps);
    for (double x : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
        double a = 1.5 + 0.2 * std::sin(x);
        SymbolSpec frozen = vos.frozen(x);
        CHECK(frozen.gamma_inf == doctest::Approx(a));
        CHECK(vos.gamma_inf_at(x) == doctest::Approx(a));
    }
}

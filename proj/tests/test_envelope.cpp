#include <doctest.h>

#include <cmath>

#include "levykit/catalog.hpp"
#include "levykit/envelope.hpp"

using namespace levykit;

TEST_CASE("envelope regimes and values for the stable example") {
    SymbolSpec spec = build_spec("isotropic-stable", {{"alpha", 1.0}});
    auto core = envelope(spec, 0.01, 0.0);
    CHECK(core.regime == Regime::core);
    CHECK(core.S == doctest::Approx(100.0));  // t^{-1}

    auto mid = envelope(spec, 0.01, 0.5);
    CHECK(mid.regime == Regime::mid);
    CHECK(mid.S == doctest::Approx(0.04));  // t/|x|^2

    auto tail = envelope(spec, 0.01, 2.0);
    CHECK(tail.regime == Regime::tail);
    CHECK(tail.S == doctest::Approx(0.01 / 4.0));
}

TEST_CASE("exponential factor for the relativistic row") {
    SymbolSpec spec = build_spec("relativistic-stable", {{"alpha", 1.0}, {"rho", 1.0}}, 1, 0.9);
    auto v = envelope(spec, 0.5, 10.0);
    CHECK(v.regime == Regime::tail);
    double no_exp = 0.5 / std::pow(10.0, 1.0 + 1.0);
    CHECK(v.S == doctest::Approx(no_exp * std::exp(-0.9 * 10.0 / 4.0)));
}

TEST_CASE("delta override replaces m/4 by m(1-delta)") {
    SymbolSpec spec = build_spec("relativistic-stable", {{"alpha", 1.0}, {"rho", 1.0}}, 1, 0.8);
    double base = envelope(spec, 0.5, 3.0).S;
    double overridden = envelope(spec, 0.5, 3.0, 0.5).S;
    CHECK(overridden == doctest::Approx(base * std::exp(-(0.8 * 0.5 - 0.8 / 4.0) * 3.0)));
}

TEST_CASE("every point gets exactly one regime") {
    SymbolSpec spec = build_spec("isotropic-stable", {{"alpha", 1.5}});
    for (double t : {0.01, 0.2, 0.9}) {
        double cut = std::pow(t, 1.0 / 1.5);
        CHECK(envelope(spec, t, 0.5 * cut).regime == Regime::core);
        if (cut < 1.0) CHECK(envelope(spec, t, 0.5 * (cut + 1.0)).regime == Regime::mid);
        CHECK(envelope(spec, t, 1.5).regime == Regime::tail);
    }
}

TEST_CASE("subordinator envelope carries the support indicator") {
    SymbolSpec spec = build_spec("sub-stable", {{"alpha", 0.5}});
    CHECK(envelope(spec, 0.3, -0.5).S == 0.0);
    CHECK(envelope(spec, 0.3, 0.5).S > 0.0);
}

TEST_CASE("envelope audit: stable family is finite and refinement-stable") {
    SymbolSpec spec = build_spec("isotropic-stable", {{"alpha", 1.5}});
    AuditConfig cfg;
    cfg.T = 1.0;
    cfg.times = 10;
    cfg.points = 21;
    cfg.with_derivatives = false;
    cfg.tol = 1e-8;
    EnvelopeReport rep = envelope_audit(spec, cfg);
    CHECK(!rep.failed);
    CHECK(rep.C_emp > 0.0);
    CHECK(std::isfinite(rep.C_emp));
    CHECK(rep.refine_change < 0.2);
}

TEST_CASE("envelope audit flags a deliberately wrong gamma_inf") {
    // Gaussian with claimed gamma_inf = 1: core is t^{-1/2} against a t^{-1}
    // claim and the mid-regime ratios blow up as t -> 0, surfacing as
    // refinement instability.
    SpecOverrides ov;
    ov.gamma_inf = 1.0;
    SymbolSpec spec = build_spec("isotropic-stable", {{"alpha", 2.0}}, 1, std::nullopt, ov);
    AuditConfig cfg;
    cfg.T = 1.0;
    cfg.times = 10;
    cfg.points = 21;
    cfg.with_derivatives = false;
    EnvelopeReport rep = envelope_audit(spec, cfg);
    CHECK(rep.failed);
}

TEST_CASE("variable-order envelope uses the frozen index") {
    std::map<std::string, IndexMap> maps{
        {"alpha", IndexMap::sinusoidal(1.5, 0.2, 1.0, 0.0, 0.0, 2.0)}};
    VarOrderSymbol vos = build_var_order("isotropic-stable", maps);
    double y = 0.7;
    double a = 1.5 + 0.2 * std::sin(y);
    auto v = envelope_frozen(vos, 0.01, 0.0, y);
    CHECK(v.S == doctest::Approx(std::pow(0.01, -1.0 / a)));

    // t^kappa scaling of the correction term at fixed |x-y| = 2
    double c1 = varorder_correction_term(vos, 0.4, 2.0);
    double c2 = varorder_correction_term(vos, 0.2, 2.0);
    CHECK(c2 / c1 == doctest::Approx(std::pow(0.5, vos.kappa)));
}

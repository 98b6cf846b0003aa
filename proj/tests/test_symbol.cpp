#include <doctest.h>

#include <cmath>
#include <complex>

#include "levykit/catalog.hpp"
#include "levykit/errors.hpp"
#include "levykit/rng.hpp"
#include "levykit/symbol.hpp"

using namespace levykit;
using std::abs;

namespace {

SymbolSpec stable(double alpha, int d = 1) {
    return build_spec("isotropic-stable", {{"alpha", alpha}}, d);
}

}  // namespace

TEST_CASE("evaluate: isotropic stable |4|^0.5 = 2") {
    CHECK(abs(evaluate(stable(0.5), 4.0) - Complex(2.0, 0.0)) < 1e-14);
}

TEST_CASE("evaluate: relativistic stable at (sqrt 3, 0), alpha=1, rho=1, d=2") {
    SymbolSpec spec = build_spec("relativistic-stable", {{"alpha", 1.0}, {"rho", 1.0}}, 2);
    Complex v = evaluate(spec, std::vector<double>{std::sqrt(3.0), 0.0});
    CHECK(abs(v - Complex(1.0, 0.0)) < 1e-14);  // (3+1)^{1/2} - 1
}

TEST_CASE("evaluate: Lamperti stable gamma-function oracle") {
    SymbolSpec spec = build_spec("lamperti-stable", {{"alpha", 0.5}, {"rho", 1.0}});
    Complex v = evaluate(spec, 1.0);  // |xi|^2 = 1
    CHECK(abs(v.real() - 0.4431134627263790) < 1e-9);
    CHECK(abs(v.imag()) < 1e-12);
}

TEST_CASE("evaluate(0) = 0 for every catalog family at machine precision") {
    PhiloxStream seed_rng(2024, 0);
    for (const auto& key : catalog_keys()) {
        const CatalogEntry& entry = lookup(key);
        auto params = random_in_range_params(entry, 11 + seed_rng.next_u32());
        SymbolSpec spec = build_spec(key, params);
        Complex v = evaluate(spec, 0.0);
        CHECK_MESSAGE(abs(v) == 0.0, key);
    }
}

TEST_CASE("Hermitian symmetry and nonnegative real part on the real axis") {
    for (const auto& key : catalog_keys()) {
        const CatalogEntry& entry = lookup(key);
        auto params = random_in_range_params(entry, 77);
        SymbolSpec spec = build_spec(key, params);
        for (double xi : {0.037, 0.9, 3.7, 41.0}) {
            Complex plus = evaluate(spec, xi);
            Complex minus = evaluate(spec, -xi);
            CHECK_MESSAGE(abs(minus - std::conj(plus)) <= 1e-12 * (1.0 + abs(plus)), key);
            CHECK_MESSAGE(plus.real() >= -1e-12, key, " xi=", xi);
        }
    }
}

TEST_CASE("rotational invariance across sampled directions") {
    SymbolSpec spec = build_spec("relativistic-stable", {{"alpha", 1.3}, {"rho", 0.8}}, 3);
    double r = 1.7;
    Complex ref = evaluate(spec, std::vector<double>{r, 0.0, 0.0});
    for (double a : {0.3, 1.2, 2.2}) {
        std::vector<double> xi{r * std::cos(a) * 0.6, r * std::sin(a) * 0.6, r * 0.8};
        double norm = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
        for (auto& c : xi) c *= r / norm;
        Complex v = evaluate(spec, xi);
        CHECK(abs(v - ref) <= 1e-12 * (1.0 + abs(ref)));
    }
}

TEST_CASE("evaluate_complex: agreement with real evaluation and the strip example") {
    SymbolSpec s1 = stable(1.0);
    CHECK(abs(evaluate_complex(s1, Complex(1.0, 0.0)) - Complex(1.0, 0.0)) < 1e-14);

    // alpha=2 with m > 0 configured: Psi(i/2) = (i/2)^2 = -1/4; a negative real
    // part inside the strip is admissible.
    SymbolSpec s2 = build_spec("isotropic-stable", {{"alpha", 2.0}}, 1, 0.75);
    Complex v = evaluate_complex(s2, Complex(0.0, 0.5));
    CHECK(abs(v - Complex(-0.25, 0.0)) < 1e-14);
}

TEST_CASE("evaluate_complex: relativistic on the half-angle ray matches the closed form") {
    SymbolSpec spec = build_spec("relativistic-stable", {{"alpha", 1.0}, {"rho", 1.0}});
    Complex z = std::polar(0.3, spec.theta / 2.0);
    Complex expect = std::sqrt(z * z + 1.0) - 1.0;
    CHECK(abs(evaluate_complex(spec, z) - expect) < 1e-12);
}

TEST_CASE("evaluate_complex rejects points outside Omega") {
    SymbolSpec spec = stable(1.5);  // m = 0: the imaginary axis is outside
    CHECK_THROWS_AS(evaluate_complex(spec, Complex(0.0, 1.0)), OutsideDomainError);
    CHECK_THROWS_AS(evaluate_complex(spec, Complex(0.0, 0.0)), OutsideDomainError);
}

TEST_CASE("Upsilon membership for subordinators") {
    SymbolSpec spec = build_spec("sub-relativistic", {{"alpha", 0.5}, {"rho", 1.0}});
    CHECK(spec.is_subordinator_exponent);
    CHECK(spec.m > 0.0);
    CHECK(in_domain(spec, Complex(-0.5 * spec.m, 7.0)));   // strip
    CHECK(in_domain(spec, std::polar(2.0, 2.0)));          // upper-left sector
    CHECK(!in_domain(spec, Complex(1.0, 0.0)));            // right half-plane not claimed
    CHECK(!in_domain(spec, Complex(-2.0, 1e-12)));         // hugging the negative axis
}

TEST_CASE("param_derivative: closed form and complex step agree") {
    // d/dalpha |xi|^alpha at alpha=1, xi=e equals e.
    SymbolSpec spec = stable(1.0);
    Complex v = param_derivative(spec, "alpha", Complex(M_E, 0.0));
    CHECK(abs(v - Complex(M_E, 0.0)) < 1e-12);

    // Complex-step on the relativistic rho at xi -> 0: rho/sqrt(rho^2) - 1 = 0.
    SymbolSpec rel = build_spec("relativistic-stable", {{"alpha", 1.0}, {"rho", 1.0}});
    Complex d_rho = param_derivative(rel, "rho", Complex(1e-8, 0.0));
    CHECK(abs(d_rho) < 1e-7);

    // Against central differences for a family without a closed form.
    SymbolSpec lam = build_spec("lamperti-stable", {{"alpha", 0.4}, {"rho", 1.2}});
    Complex cs = param_derivative(lam, "alpha", Complex(2.0, 0.0));
    double h = 1e-6;
    SymbolSpec up = build_spec("lamperti-stable", {{"alpha", 0.4 + h}, {"rho", 1.2}});
    SymbolSpec dn = build_spec("lamperti-stable", {{"alpha", 0.4 - h}, {"rho", 1.2}});
    Complex fd = (evaluate(up, 2.0) - evaluate(dn, 2.0)) / (2.0 * h);
    CHECK(abs(cs - fd) < 1e-7 * (1.0 + abs(fd)));
}

TEST_CASE("param_derivative of the zero slice vanishes") {
    SymbolSpec spec = build_spec("relativistic-stable", {{"alpha", 1.2}, {"rho", 0.7}});
    // psi_beta(0) = 0 for all beta, so the derivative of the zero slice is 0;
    // probe just off zero where continuity pins it down.
    Complex v = param_derivative(spec, "alpha", Complex(0.0, 0.0));
    CHECK(abs(v) < 1e-12);
}

TEST_CASE("check_growth_bounds: isotropic stable passes with zero sector ratio") {
    SymbolSpec spec = stable(1.5);
    BoundCertificate cert = check_growth_bounds(spec, 4, 24);
    CHECK(cert.passed);
    CHECK(cert.c1_hat > 0.0);
    CHECK(cert.sector_ratio < 1e-12);
}

TEST_CASE("check_growth_bounds: log-symbol row passes with its stated log correction") {
    SymbolSpec spec = build_spec("log-symbol", {{"rho", 1.0}});
    CHECK(spec.ell == Ell::log);
    CHECK(spec.gamma0 == 2.0);
    CHECK(spec.gamma_inf == 2.0);
    BoundCertificate cert = check_growth_bounds(spec);
    CHECK(cert.passed);
}

TEST_CASE("check_growth_bounds: NTS with a misconfigured strip fails") {
    // kappa - b = 0.1 but m = 0.5 claims a wider strip: the branch point at
    // Im z = 0.1 is crossed, surfacing as a branch error or a negative c1.
    SymbolSpec spec = build_spec("normal-tempered-stable",
                                 {{"alpha", 1.0}, {"kappa", 1.0}, {"b", 0.9}}, 1, 0.5);
    BoundCertificate cert = check_growth_bounds(spec);
    CHECK(!cert.passed);
}

TEST_CASE("NTS with the default strip passes and has a finite sector ratio") {
    SymbolSpec spec =
        build_spec("normal-tempered-stable", {{"alpha", 1.0}, {"kappa", 1.0}, {"b", 0.9}});
    CHECK(spec.m == doctest::Approx(0.09));
    BoundCertificate cert = check_growth_bounds(spec);
    CHECK(cert.passed);
    CHECK(cert.sector_ratio > 0.0);
    CHECK(std::isfinite(cert.sector_ratio));
}

TEST_CASE("unknown family and bad parameters are named") {
    CHECK_THROWS_AS(lookup("relativistc-stable"), UnknownFamilyError);
    try {
        lookup("relativistc-stable");
    } catch (const UnknownFamilyError& e) {
        CHECK(std::string(e.what()).find("relativistic-stable") != std::string::npos);
    }
    try {
        build_spec("isotropic-stable", {{"alpha", 2.5}});
        FAIL("expected ParamOutOfRangeError");
    } catch (const ParamOutOfRangeError& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
}

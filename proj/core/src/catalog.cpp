#include "levykit/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"
#include "levykit/rng.hpp"

namespace levykit {

namespace {

using Params = std::map<std::string, double>;

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kThetaLevy = M_PI / 6.0;  // safe for growth orders <= 2

// Upsilon sectors hug the imaginary axis: Re lambda < 0 there fights the
// Re F > 0 requirement, so the claimed aperture is kept thin for every row.
double theta_sub(double) { return 1.48; }

// Principal sqrt, except exactly on the cut where either branch works for a
// composite that is even in the root (the TLP rows).
Complex sqrt_even(Complex w) {
    if (w.imag() == 0.0 && w.real() < 0.0) return {0.0, std::sqrt(-w.real())};
    return std::sqrt(w);
}

bool is_integer(Complex e) {
    return std::abs(e.imag()) < 1e-12 && std::abs(e.real() - std::round(e.real())) < 1e-12;
}

// Principal power/log with a cut guard: a base on the closed negative real
// axis signals a misconfigured strip width m (or theta).
Complex gpow(Complex base, Complex e) {
    if (!is_integer(e) && base.real() <= 0.0 &&
        std::abs(base.imag()) <= 1e-13 * (1.0 + std::abs(base))) {
        throw BranchAmbiguityError("principal branch cut crossed; check the configured m/theta");
    }
    return std::pow(base, e);
}

Complex glog(Complex base) {
    if (base.real() <= 0.0 && std::abs(base.imag()) <= 1e-13 * (1.0 + std::abs(base))) {
        throw BranchAmbiguityError("log branch cut crossed; check the configured m/theta");
    }
    return std::log(base);
}

Complex gsqrt(Complex base) { return gpow(base, 0.5); }

// expm1_ratio with complexified exponents (parameter perturbations).
Complex expm1_ratio_c(Complex b, Complex a, Complex u) {
    if (std::abs(u) > defaults::singularity_switch_radius) {
        return (std::exp(b * u) - 1.0) / (std::exp(a * u) - 1.0);
    }
    auto poly = [](Complex c, Complex u_) {
        Complex cu = c * u_;
        return 1.0 + cu * (0.5 + cu * (1.0 / 6.0 + cu * (1.0 / 24.0)));
    };
    return (b / a) * poly(b, u) / poly(a, u);
}

Complex powm1_ratio_c(Complex c, Complex w0, Complex w) {
    Complex v = (w - w0) / w0;
    if (std::abs(v) > defaults::singularity_switch_radius) {
        return (gpow(w, c) - gpow(w0, c)) / (w - w0);
    }
    Complex c1 = c - 1.0, c2 = c - 2.0, c3 = c - 3.0;
    Complex series = 1.0 + v * (c1 / 2.0 + v * (c1 * c2 / 6.0 + v * (c1 * c2 * c3 / 24.0)));
    return c * gpow(w0, c - 1.0) * series;
}

// log(sinh(y)/y) and log(cosh(y)), overflow-safe for Re y large.
Complex log_sinh_over(Complex y) {
    if (y.real() > 20.0) return y - glog(2.0 * y) + std::log1p(-std::exp(-2.0 * y.real()));
    return glog(std::sinh(y) / y);
}

Complex log_cosh(Complex y) {
    if (y.real() > 20.0) return y - std::log(2.0) + std::log1p(std::exp(-2.0 * y.real()));
    return glog(std::cosh(y));
}

// ---- Table 1: Levy exponents, evaluated as f(w) with w = z^2 ----

Complex t1_stable(Complex w, const ParamSet& p) { return gpow(w, p.get("alpha") / 2.0); }

Complex t1_relativistic(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha"), r = p.get("rho");
    return gpow(w + r * r, a / 2.0) - gpow(r * r, a / 2.0);
}

Complex t1_nts(Complex z, const ParamSet& p) {
    Complex a = p.get("alpha"), k = p.get("kappa"), b = p.get("b");
    Complex shifted = z - Complex(0.0, 1.0) * b;
    return gpow(k * k + shifted * shifted, a / 2.0) - gpow(k * k - b * b, a / 2.0);
}

Complex t1_quad_sqrt(Complex w, const ParamSet& p) { return w / gsqrt(w + p.get("rho")); }

Complex t1_quad_power(Complex w, const ParamSet& p) {
    return w * gpow(w + p.get("rho"), -p.get("alpha") / 2.0);
}

Complex t1_power_quotient(Complex w, const ParamSet& p) {
    return expm1_ratio_c(p.get("beta") / 2.0, p.get("alpha") / 2.0, glog(w)) - 1.0;
}

Complex t1_power_quotient_neg(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha") / 2.0;
    return -expm1_ratio_c(a, a - 1.0, glog(w));
}

Complex t1_power_quotient_high(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha") / 2.0;
    return expm1_ratio_c(a, a - 1.0, glog(w)) - 1.0;
}

Complex t1_stable_blend(Complex w, const ParamSet& p) {
    Complex r = p.get("rho");
    return w * powm1_ratio_c(p.get("alpha") / 2.0, (r * r).real(), w);
}

Complex t1_harmonic_mix(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha"), b = p.get("beta");
    Complex hi = a.real() >= b.real() ? a : b;
    Complex lo = a.real() >= b.real() ? b : a;
    return gpow(w, hi / 2.0) / (1.0 + gpow(w, (hi - lo) / 2.0));
}

Complex t1_linear_exp_damped(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return s * (1.0 - std::exp(-2.0 * p.get("rho") * s));
}

Complex t1_linear_exp_boosted(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return s * (1.0 + std::exp(-2.0 * p.get("rho") * s));
}

Complex t1_log_symbol(Complex w, const ParamSet& p) {
    Complex r = p.get("rho");
    if (std::abs(w) > 1.0) return r * (w + 1.0) * log1p_over(1.0 / w);
    return r * w * (w + 1.0) * (glog(w + 1.0) - glog(w));
}

Complex t1_log_quotient(Complex w, const ParamSet& p) {
    return p.get("rho") * w / ((w + 2.0) * log1p_over(w + 1.0));
}

Complex t1_arctan(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return s * std::atan(p.get("rho") * s);
}

Complex t1_tlp(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha"), r = p.get("rho");
    Complex s = sqrt_even(w);  // cos(a atan(.)) is even in the root
    return gpow(w + r * r, a / 2.0) * std::cos(a * std::atan(s / r)) - gpow(r * r, a / 2.0);
}

Complex t1_coth(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return p.get("rho") * (s * coth(kSqrt2 * s) / 2.0 - 1.0 / (2.0 * kSqrt2));
}

Complex t1_tanh(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return p.get("rho") * s * std::tanh(kSqrt2 * s) / 2.0;
}

Complex t1_coth_quadratic(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return p.get("rho") * (s * coth(1.0 / (2.0 * s)) - w);
}

Complex t1_log_sinh(Complex w, const ParamSet& p) {
    return p.get("rho") * log_sinh_over(kSqrt2 * gsqrt(w));
}

Complex t1_meixner(Complex w, const ParamSet& p) {
    return p.get("rho") * log_cosh(kSqrt2 * gsqrt(w));
}

Complex t1_log_tanh(Complex w, const ParamSet& p) {
    Complex s = gsqrt(w);
    return s * glog(1.0 + p.get("rho") * std::tanh(p.get("b") * s));
}

Complex t1_gamma_half(Complex w, const ParamSet& p) {
    Complex rw = p.get("rho") * w;
    return gamma_ratio(rw + 0.5, rw);
}

Complex t1_gamma_power(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha");
    return w * gamma_ratio(a * w + 1.0 - a, a * w + 1.0);
}

Complex t1_gamma_inverse(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha");
    return gamma_ratio(a * w + 1.0, a * w + 1.0 - a) - gamma_ratio(1.0, 1.0 - a);
}

Complex t1_lamperti(Complex w, const ParamSet& p) {
    Complex a = p.get("alpha"), r = p.get("rho");
    return gamma_ratio(w + a + r, w + r) - gamma_ratio(a + r, r);
}

// ---- Table 2: Laplace exponents F(lambda) ----

Complex t2_stable(Complex l, const ParamSet& p) { return gpow(l, p.get("alpha")); }

Complex t2_relativistic(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha"), r = p.get("rho");
    return gpow(l + r, a) - gpow(r, a);
}

Complex t2_sqrt_ratio(Complex l, const ParamSet& p) { return l / gsqrt(l + p.get("rho")); }

Complex t2_power_ratio(Complex l, const ParamSet& p) {
    return l * gpow(l + p.get("rho"), -p.get("alpha"));
}

Complex t2_power_quotient(Complex l, const ParamSet& p) {
    return expm1_ratio_c(p.get("beta"), p.get("alpha"), glog(l)) - 1.0;
}

Complex t2_power_quotient_neg(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha");
    return -expm1_ratio_c(a, a - 1.0, glog(l));
}

Complex t2_power_quotient_high(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha");
    return expm1_ratio_c(a, a - 1.0, glog(l)) - 1.0;
}

Complex t2_stable_blend(Complex l, const ParamSet& p) {
    return l * powm1_ratio_c(p.get("alpha"), p.get_real("rho"), l);
}

Complex t2_harmonic_mix(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha"), b = p.get("beta");
    Complex hi = a.real() >= b.real() ? a : b;
    Complex lo = a.real() >= b.real() ? b : a;
    return gpow(l, hi) / (1.0 + gpow(l, hi - lo));
}

Complex t2_sqrt_exp_damped(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return s * (1.0 - std::exp(-2.0 * p.get("rho") * s));
}

Complex t2_sqrt_exp_boosted(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return s * (1.0 + std::exp(-2.0 * p.get("rho") * s));
}

Complex t2_log(Complex l, const ParamSet& p) {
    Complex r = p.get("rho");
    if (std::abs(l) > 1.0) return r * (l + 1.0) * log1p_over(1.0 / l);
    return r * l * (l + 1.0) * (glog(l + 1.0) - glog(l));
}

Complex t2_log_quotient(Complex l, const ParamSet& p) {
    return p.get("rho") * l / ((l + 2.0) * log1p_over(l + 1.0));
}

Complex t2_arctan(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return s * std::atan(p.get("rho") * s);
}

Complex t2_tlp(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha"), r = p.get("rho");
    return gpow(l + r, a) * std::cos(a * std::atan(sqrt_even(l / r))) - gpow(r, a);
}

Complex t2_coth(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return p.get("rho") * (s * coth(kSqrt2 * s) / 2.0 - 1.0 / (2.0 * kSqrt2));
}

Complex t2_tanh(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return p.get("rho") * s * std::tanh(kSqrt2 * s) / 2.0;
}

Complex t2_coth_linear(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return p.get("rho") * (s * coth(1.0 / (2.0 * s)) - l);
}

Complex t2_log_sinh(Complex l, const ParamSet& p) {
    return p.get("rho") * log_sinh_over(gsqrt(2.0 * l));
}

Complex t2_log_cosh(Complex l, const ParamSet& p) {
    return p.get("rho") * log_cosh(gsqrt(2.0 * l));
}

Complex t2_log_tanh(Complex l, const ParamSet& p) {
    Complex s = gsqrt(l);
    return s * glog(1.0 + p.get("rho") * std::tanh(p.get("b") * s));
}

Complex t2_gamma_half(Complex l, const ParamSet& p) {
    Complex rl = p.get("rho") * l;
    return gamma_ratio(rl + 0.5, rl);
}

Complex t2_gamma_power(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha");
    return l * gamma_ratio(a * l + 1.0 - a, a * l + 1.0);
}

Complex t2_gamma_inverse(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha");
    return gamma_ratio(a * l + 1.0, a * l + 1.0 - a) - gamma_ratio(1.0, 1.0 - a);
}

Complex t2_lamperti(Complex l, const ParamSet& p) {
    Complex a = p.get("alpha"), r = p.get("rho");
    return gamma_ratio(l + a + r, l + r) - gamma_ratio(a + r, r);
}

// Closed-form parameter derivative for the isotropic stable family.
bool t1_stable_dparam(std::string_view name, Complex w, const ParamSet& p, Complex& out) {
    if (name != "alpha") return false;
    if (w == Complex(0.0, 0.0)) {
        out = {0.0, 0.0};  // the zero slice psi_beta(0) = 0 is constant in beta
        return true;
    }
    // d/da w^{a/2} = w^{a/2} * log(w)/2
    out = gpow(w, p.get("alpha") / 2.0) * glog(w) * 0.5;
    return true;
}

void validate_nts(const Params& params) {
    if (std::abs(params.at("b")) >= params.at("kappa")) {
        throw ParamOutOfRangeError("b must satisfy |b| < kappa");
    }
}

void validate_beta_gt_alpha(const Params& params) {
    if (params.at("beta") <= params.at("alpha")) {
        throw ParamOutOfRangeError("beta must exceed alpha");
    }
}

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> v;
    auto add = [&v](CatalogEntry e) { v.push_back(std::move(e)); };

    // --- Table 1 ---
    add({"isotropic-stable", "1:1",
         {ArgKind::squared_radial, true, false, t1_stable, t1_stable_dparam, {}},
         {{"alpha", 0.0, 2.0, true, false}},
         [](const Params& p) {
             return StatedRules{p.at("alpha"), p.at("alpha"), 0.0, kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha"},
         "3:1"});
    add({"relativistic-stable", "1:2",
         {ArgKind::squared_radial, true, false, t1_relativistic, nullptr, {}},
         {{"alpha", 0.0, 2.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, p.at("alpha"), p.at("rho"), kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha", "rho"},
         "3:2"});
    add({"normal-tempered-stable", "1:3",
         {ArgKind::direct, false, false, t1_nts, nullptr, {}},
         {{"alpha", 0.0, 2.0, true, true},
          {"kappa", 0.0, kInf, true, true},
          {"b", -kInf, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, p.at("alpha"), p.at("kappa") - std::abs(p.at("b")),
                                kThetaLevy, Ell::one};
         },
         validate_nts,
         {"alpha", "kappa", "b"},
         "3:3"});
    add({"quadratic-sqrt-ratio", "1:4",
         {ArgKind::squared_radial, true, false, t1_quad_sqrt, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, 1.0, std::sqrt(p.at("rho")), kThetaLevy, Ell::one};
         },
         nullptr,
         {"rho"},
         "3:4"});
    add({"quadratic-power-ratio", "1:5",
         {ArgKind::squared_radial, true, false, t1_quad_power, nullptr, {}},
         {{"alpha", 0.0, 2.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, 2.0 - p.at("alpha"), std::sqrt(p.at("rho")), kThetaLevy,
                                Ell::one};
         },
         nullptr,
         {"alpha", "rho"},
         "3:5"});
    add({"power-quotient", "1:6",
         {ArgKind::squared_radial, true, false, t1_power_quotient, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"beta", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{p.at("alpha"), p.at("beta") - p.at("alpha"), 0.0, kThetaLevy,
                                Ell::one};
         },
         validate_beta_gt_alpha,
         {"alpha", "beta"},
         "3:6"});
    add({"power-quotient-neg", "1:7",
         {ArgKind::squared_radial, true, false, t1_power_quotient_neg, nullptr, {}},
         {{"alpha", 0.0, 2.0, true, true}},
         [](const Params& p) {
             return StatedRules{2.0 - p.at("alpha"), p.at("alpha"), 0.0, kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha"},
         "3:7"});
    add({"power-quotient-high", "1:8",
         {ArgKind::squared_radial, true, false, t1_power_quotient_high, nullptr, {}},
         {{"alpha", 2.0, 4.0, true, false}},
         [](const Params& p) {
             return StatedRules{p.at("alpha") - 2.0, 2.0, 0.0, kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha"},
         "3:8"});
    add({"stable-blend", "1:9",
         {ArgKind::squared_radial, true, false, t1_stable_blend, nullptr, {}},
         {{"alpha", 0.0, 2.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, p.at("alpha"), 0.0, kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha", "rho"},
         "3:9"});
    add({"harmonic-power-mix", "1:10",
         {ArgKind::squared_radial, true, false, t1_harmonic_mix, nullptr, {}},
         {{"alpha", 0.0, 2.0, true, false}, {"beta", 0.0, 2.0, true, false}},
         [](const Params& p) {
             return StatedRules{std::max(p.at("alpha"), p.at("beta")),
                                std::min(p.at("alpha"), p.at("beta")), 0.0, kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha", "beta"},
         "3:10"});
    add({"linear-exp-damped", "1:11",
         {ArgKind::squared_radial, true, false, t1_linear_exp_damped, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{2.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:11"});
    add({"linear-exp-boosted", "1:12",
         {ArgKind::squared_radial, true, false, t1_linear_exp_boosted, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:12"});
    add({"log-symbol", "1:13",
         {ArgKind::squared_radial, true, false, t1_log_symbol, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{2.0, 2.0, 0.0, kThetaLevy, Ell::log}; },
         nullptr,
         {"rho"},
         "3:13"});
    add({"log-quotient", "1:14",
         {ArgKind::squared_radial, true, false, t1_log_quotient, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{2.0, 2.0, kSqrt2, kThetaLevy, Ell::log}; },
         nullptr,
         {"rho"},
         "3:14"});
    add({"arctan-symbol", "1:15",
         {ArgKind::squared_radial, true, false, t1_arctan, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:15"});
    add({"truncated-levy", "1:16",
         {ArgKind::squared_radial, true, false, t1_tlp, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, p.at("alpha"), p.at("rho"), kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha", "rho"},
         "3:16"});
    add({"coth-symbol", "1:17",
         {ArgKind::squared_radial, true, false, t1_coth, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:17"});
    add({"tanh-symbol", "1:18",
         {ArgKind::squared_radial, true, false, t1_tanh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:18"});
    add({"coth-quadratic", "1:19",
         {ArgKind::squared_radial, true, false, t1_coth_quadratic, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 2.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:19"});
    add({"log-sinh", "1:20",
         {ArgKind::squared_radial, true, false, t1_log_sinh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{2.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:20"});
    add({"isotropic-meixner", "1:21",
         {ArgKind::squared_radial, true, false, t1_meixner, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{2.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho"},
         "3:21"});
    add({"log-tanh", "1:22",
         {ArgKind::squared_radial, true, false, t1_log_tanh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}, {"b", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 0.0, kThetaLevy, Ell::one}; },
         nullptr,
         {"rho", "b"},
         "3:22"});
    add({"gamma-ratio-half", "1:23",
         {ArgKind::squared_radial, true, false, t1_gamma_half, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, 1.0, 1.0 / std::sqrt(2.0 * p.at("rho")), kThetaLevy,
                                Ell::one};
         },
         nullptr,
         {"rho"},
         "3:23"});
    add({"gamma-ratio-power", "1:24",
         {ArgKind::squared_radial, true, false, t1_gamma_power, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, 2.0 - 2.0 * p.at("alpha"),
                                std::sqrt(1.0 / p.at("alpha") - 1.0), kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha"},
         "3:24"});
    add({"gamma-ratio-inverse", "1:25",
         {ArgKind::squared_radial, true, false, t1_gamma_inverse, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, 2.0 * p.at("alpha"), std::sqrt(1.0 / p.at("alpha")),
                                kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha"},
         "3:25"});
    add({"lamperti-stable", "1:26",
         {ArgKind::squared_radial, true, false, t1_lamperti, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, 2.0 * p.at("alpha"), std::sqrt(p.at("rho") + p.at("alpha")),
                                kThetaLevy, Ell::one};
         },
         nullptr,
         {"alpha", "rho"},
         "3:26"});

    // --- Table 2 ---
    add({"sub-stable", "2:1",
         {ArgKind::laplace, true, true, t2_stable, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, false}},
         [](const Params& p) {
             return StatedRules{p.at("alpha"), p.at("alpha"), 0.0, theta_sub(p.at("alpha")),
                                Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-relativistic", "2:2",
         {ArgKind::laplace, true, true, t2_relativistic, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{2.0, p.at("alpha"), p.at("rho"), theta_sub(p.at("alpha")),
                                Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-sqrt-ratio", "2:3",
         {ArgKind::laplace, true, true, t2_sqrt_ratio, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, 0.5, p.at("rho"), theta_sub(0.5), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-power-ratio", "2:4",
         {ArgKind::laplace, true, true, t2_power_ratio, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, 1.0 - p.at("alpha"), p.at("rho"),
                                theta_sub(1.0 - p.at("alpha")), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-power-quotient", "2:5",
         {ArgKind::laplace, true, true, t2_power_quotient, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"beta", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{p.at("alpha"), p.at("beta") - p.at("alpha"), 0.0,
                                theta_sub(p.at("beta") - p.at("alpha")), Ell::one};
         },
         validate_beta_gt_alpha,
         {},
         ""});
    add({"sub-power-quotient-neg", "2:6",
         {ArgKind::laplace, true, true, t2_power_quotient_neg, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{1.0 - p.at("alpha"), p.at("alpha"), 0.0,
                                theta_sub(p.at("alpha")), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-power-quotient-high", "2:7",
         {ArgKind::laplace, true, true, t2_power_quotient_high, nullptr, {}},
         {{"alpha", 1.0, 2.0, true, false}},
         [](const Params& p) {
             return StatedRules{p.at("alpha") - 1.0, 1.0, 0.0, theta_sub(1.0), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-stable-blend", "2:8",
         {ArgKind::laplace, true, true, t2_stable_blend, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, p.at("alpha"), 0.0, theta_sub(p.at("alpha")), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-harmonic-power-mix", "2:9",
         {ArgKind::laplace, true, true, t2_harmonic_mix, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, false}, {"beta", 0.0, 1.0, true, false}},
         [](const Params& p) {
             return StatedRules{std::max(p.at("alpha"), p.at("beta")),
                                std::min(p.at("alpha"), p.at("beta")), 0.0,
                                theta_sub(std::min(p.at("alpha"), p.at("beta"))), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-sqrt-exp-damped", "2:10",
         {ArgKind::laplace, true, true, t2_sqrt_exp_damped, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-sqrt-exp-boosted", "2:11",
         {ArgKind::laplace, true, true, t2_sqrt_exp_boosted, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{0.5, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-log", "2:12",
         {ArgKind::laplace, true, true, t2_log, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 0.0, theta_sub(1.0), Ell::log}; },
         nullptr,
         {},
         ""});
    add({"sub-log-quotient", "2:13",
         {ArgKind::laplace, true, true, t2_log_quotient, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 1.0, 2.0, theta_sub(1.0), Ell::log}; },
         nullptr,
         {},
         ""});
    add({"sub-arctan", "2:14",
         {ArgKind::laplace, true, true, t2_arctan, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-truncated-levy", "2:15",
         {ArgKind::laplace, true, true, t2_tlp, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, p.at("alpha"), p.at("rho"), theta_sub(p.at("alpha")),
                                Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-coth", "2:16",
         {ArgKind::laplace, true, true, t2_coth, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{0.5, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-tanh", "2:17",
         {ArgKind::laplace, true, true, t2_tanh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{0.5, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-coth-linear", "2:18",
         {ArgKind::laplace, true, true, t2_coth_linear, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{0.5, 1.0, 0.0, theta_sub(1.0), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-log-sinh", "2:19",
         {ArgKind::laplace, true, true, t2_log_sinh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-log-cosh", "2:20",
         {ArgKind::laplace, true, true, t2_log_cosh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{1.0, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"sub-log-tanh", "2:21",
         {ArgKind::laplace, true, true, t2_log_tanh, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}, {"b", 0.0, kInf, true, true}},
         [](const Params&) { return StatedRules{0.5, 0.5, 0.0, theta_sub(0.5), Ell::one}; },
         nullptr,
         {},
         ""});
    add({"laplace-gamma-ratio", "2:22",
         {ArgKind::laplace, true, true, t2_gamma_half, nullptr, {}},
         {{"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, 0.5, 1.0 / (2.0 * p.at("rho")), theta_sub(0.5), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-gamma-ratio-power", "2:23",
         {ArgKind::laplace, true, true, t2_gamma_power, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, 1.0 - p.at("alpha"), 1.0 / p.at("alpha") - 1.0,
                                theta_sub(1.0 - p.at("alpha")), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-gamma-ratio-inverse", "2:24",
         {ArgKind::laplace, true, true, t2_gamma_inverse, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, p.at("alpha"), 1.0 / p.at("alpha"),
                                theta_sub(p.at("alpha")), Ell::one};
         },
         nullptr,
         {},
         ""});
    add({"sub-lamperti", "2:25",
         {ArgKind::laplace, true, true, t2_lamperti, nullptr, {}},
         {{"alpha", 0.0, 1.0, true, true}, {"rho", 0.0, kInf, true, true}},
         [](const Params& p) {
             return StatedRules{1.0, p.at("alpha"), p.at("rho") + p.at("alpha"),
                                theta_sub(p.at("alpha")), Ell::one};
         },
         nullptr,
         {},
         ""});

    return v;
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> v = make_entries();
    return v;
}

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
    for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
    for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            int sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
        }
    }
    return d[a.size()][b.size()];
}

}  // namespace

std::string ParamSpec::range_text() const {
    std::ostringstream os;
    os << (lo_open ? '(' : '[');
    if (lo == -kInf) {
        os << "-inf";
    } else {
        os << lo;
    }
    os << ',';
    if (hi == kInf) {
        os << "inf";
    } else {
        os << hi;
    }
    os << (hi_open ? ')' : ']');
    return os.str();
}

std::string CatalogEntry::param_schema_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& p : schema) {
        if (!first) os << ' ';
        os << p.name << ':' << p.range_text();
        first = false;
    }
    return os.str();
}

const CatalogEntry& lookup(const std::string& key) {
    for (const auto& e : entries()) {
        if (e.key == key) return e;
    }
    int best = 1 << 20;
    std::string suggestion;
    for (const auto& e : entries()) {
        int d = edit_distance(key, e.key);
        if (d < best) {
            best = d;
            suggestion = e.key;
        }
    }
    throw UnknownFamilyError("unknown family '" + key + "'; did you mean '" + suggestion + "'?");
}

const std::vector<std::string>& catalog_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& e : entries()) k.push_back(e.key);
        return k;
    }();
    return keys;
}

const FamilyOps& family_ops(const std::string& family_id) {
    return lookup(family_id).ops;
}

SymbolSpec build_spec(const std::string& key, const std::map<std::string, double>& params,
                      int dimension, std::optional<double> m_override,
                      const SpecOverrides& overrides) {
    const CatalogEntry& entry = lookup(key);
    if (params.size() != entry.schema.size()) {
        throw ParamOutOfRangeError("family '" + key + "' expects parameters: " +
                                   entry.param_schema_text());
    }
    for (const auto& ps : entry.schema) {
        auto it = params.find(ps.name);
        if (it == params.end()) {
            throw ParamOutOfRangeError("family '" + key + "' requires parameter '" + ps.name +
                                       "'");
        }
        if (!ps.contains(it->second)) {
            throw ParamOutOfRangeError(ps.name + " must be in " + ps.range_text());
        }
    }
    if (entry.cross_validate) entry.cross_validate(params);
    if (dimension < 1 || dimension > 3) {
        throw ValidationError("dimension must be 1, 2 or 3");
    }
    if ((!entry.ops.rotationally_invariant || entry.ops.is_subordinator) && dimension != 1) {
        throw NotRotInvariantError("family '" + key + "' is limited to d = 1");
    }

    StatedRules rules = entry.rules(params);
    SymbolSpec spec;
    spec.family_id = key;
    spec.params = params;
    spec.dimension = dimension;
    spec.m = m_override.value_or(defaults::m_default_factor * rules.m_sup);
    spec.theta = overrides.theta.value_or(rules.theta);
    spec.gamma0 = overrides.gamma0.value_or(rules.gamma0);
    spec.gamma_inf = overrides.gamma_inf.value_or(rules.gamma_inf);
    spec.ell = overrides.ell.value_or(rules.ell);
    spec.rotationally_invariant = entry.ops.rotationally_invariant;
    spec.is_subordinator_exponent = entry.ops.is_subordinator;
    if (spec.m < 0.0) throw ParamOutOfRangeError("m must be >= 0");
    if (spec.theta <= 0.0 || spec.theta >= M_PI_2) {
        throw ParamOutOfRangeError("theta must be in (0, pi/2)");
    }
    return spec;
}

std::map<std::string, double> random_in_range_params(const CatalogEntry& entry,
                                                     std::uint64_t seed) {
    PhiloxStream rng(seed, 0x9eb5);
    std::map<std::string, double> params;
    for (int attempt = 0; attempt < 64; ++attempt) {
        params.clear();
        for (const auto& ps : entry.schema) {
            double lo = ps.lo, hi = ps.hi;
            if (!std::isfinite(hi)) hi = (std::isfinite(lo) ? lo : 0.0) + 3.0;
            if (!std::isfinite(lo)) lo = hi - 3.0;
            double margin = 0.05 * (hi - lo);
            params[ps.name] = lo + margin + (hi - lo - 2 * margin) * rng.next_double();
        }
        try {
            if (entry.cross_validate) entry.cross_validate(params);
            return params;
        } catch (const ParamOutOfRangeError&) {
            continue;
        }
    }
    throw ValidationError("random_in_range_params: could not satisfy cross constraints");
}

}  // namespace levykit

#include "levykit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"
#include "levykit/gauss_legendre.hpp"

namespace levykit {

SymbolView make_view(const SymbolSpec& spec) {
    const FamilyOps& ops = family_ops(spec.family_id);
    SymbolView v;
    v.dimension = spec.dimension;
    v.m = spec.m;
    v.theta = spec.theta;
    v.gamma0 = spec.gamma0;
    v.gamma_inf = spec.gamma_inf;
    v.ell = spec.ell;
    v.subordinator = spec.is_subordinator_exponent;
    v.rot_invariant = spec.rotationally_invariant;
    ParamSet params = ParamSet::from_real(spec.params);
    auto eval = ops.eval;
    switch (ops.arg_kind) {
        case ArgKind::squared_radial:
            v.chi = [eval, params](Complex z) {
                return z == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : eval(z * z, params);
            };
            break;
        case ArgKind::direct:
            v.chi = [eval, params](Complex z) {
                return z == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : eval(z, params);
            };
            break;
        case ArgKind::laplace:
            v.chi = [eval, params](Complex z) {
                return z == Complex(0.0, 0.0) ? Complex(0.0, 0.0)
                                              : eval(Complex(0.0, -1.0) * z, params);
            };
            break;
    }
    v.c1_real = real_axis_c1(spec);
    return v;
}

SymbolView make_frozen_view(const VarOrderSymbol& vos, double y) {
    const CatalogEntry& entry = lookup(vos.family_key);
    SymbolView v;
    v.dimension = vos.dimension;
    v.m = vos.m;
    v.theta = vos.theta;
    v.gamma0 = vos.gamma0_at(y);
    v.gamma_inf = vos.gamma_inf_at(y);
    v.ell = vos.ell;
    v.subordinator = entry.ops.is_subordinator;
    v.rot_invariant = entry.ops.rotationally_invariant;
    ParamSet params = ParamSet::from_real(vos.params_at(y));
    auto eval = entry.ops.eval;
    double power = vos.power_at(y);
    ArgKind kind = entry.ops.arg_kind;
    v.chi = [eval, params, power, kind](Complex z) {
        if (z == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
        Complex arg;
        switch (kind) {
            case ArgKind::squared_radial:
                arg = z * z;
                break;
            case ArgKind::direct:
                arg = z;
                break;
            case ArgKind::laplace:
                arg = Complex(0.0, -1.0) * z;
                break;
        }
        Complex val = eval(arg, params);
        return power == 1.0 ? val : std::pow(val, power);
    };
    // c1 over the real axis for truncation control
    double c1 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 48; ++i) {
        double xi = std::exp(std::log(1.0) + (std::log(100.0) - 0.0) * i / 47.0);
        Complex val = v.chi(Complex(xi, 0.0));
        c1 = std::min(c1, val.real() * ell_value(v.ell, xi) / std::pow(xi, v.gamma_inf));
    }
    v.c1_real = c1;
    return v;
}

QuadratureSpec auto_quadrature(const SymbolView& s, double t, double x_mag, double tol,
                               bool allow_shift) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    QuadratureSpec q;
    q.target_abs_tol = tol;
    q.nodes_per_panel = defaults::quad_nodes_per_panel;

    double c1 = std::max(s.c1_real, 1e-12);
    // Solve t c1 R^gamma / ell(R) >= 40 by a few fixed-point steps (ell varies slowly).
    double target = defaults::quad_tail_exponent;
    double R = std::pow(target / (t * c1), 1.0 / s.gamma_inf);
    for (int i = 0; i < 4; ++i) {
        R = std::pow(target * ell_value(s.ell, R) / (t * c1), 1.0 / s.gamma_inf);
    }
    q.truncation_radius = std::max(R, 8.0);

    if (allow_shift && s.dimension == 1 && s.m > 0.0 && x_mag > 0.0) {
        q.contour_shift = defaults::contour_shift_factor * s.m;
    }
    return q;
}

Complex oscillatory_integral(const std::function<Complex(double)>& f, double R, double freq,
                             const std::function<double(double)>& damping_log, int nodes,
                             Complex* halved) {
    const GaussRule& rule = gauss_legendre(static_cast<std::size_t>(nodes));

    // Quarter oscillation per panel in the energetic core; the cap relaxes by
    // powers of two as the damping weight decays, so heavy tails stay affordable.
    double cap0 = freq > 0.0 ? M_PI / (2.0 * freq) : R / 64.0;
    cap0 = std::min(cap0, R / 16.0);

    auto sweep = [&](double cap) {
        Complex total{0.0, 0.0};
        double a = 0.0;
        int panels = 0;
        while (a < R && panels < defaults::quad_max_panels) {
            double damp = damping_log ? damping_log(a) : 0.0;  // log of the weight, <= 0
            // Relaxation keeps at most two oscillations per 16-node panel, so
            // the phase error stays far below the damped tail's weight.
            double relax = 1.0;
            if (damp < -8.0) relax = 2.0;
            if (damp < -16.0) relax = 4.0;
            if (damp < -26.0) relax = 8.0;
            double w = std::min(cap * relax, R - a);
            double b = a + w;
            double mid = 0.5 * (a + b), half = 0.5 * w;
            Complex acc{0.0, 0.0};
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
            }
            total += half * acc;
            a = b;
            ++panels;
        }
        if (a < R) {
            throw TolUnreachableError("oscillatory_integral: panel budget exhausted");
        }
        return total;
    };

    Complex total = sweep(cap0);
    if (halved) *halved = sweep(cap0 * 0.5);  // doubled panel count for the error estimate
    return total;
}

}  // namespace levykit

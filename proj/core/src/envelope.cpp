#include "levykit/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"
#include "levykit/parallel.hpp"

namespace levykit {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::core:
            return "core";
        case Regime::mid:
            return "mid";
        case Regime::tail:
            return "tail";
    }
    return "core";
}

namespace {

EnvelopeValue profile(double t, double ax, int d, double gamma0, double gamma_inf, double m,
                      Ell ell, double delta) {
    EnvelopeValue out;
    double scale = std::pow(t, 1.0 / gamma_inf);
    if (ax <= std::min(scale, 1.0)) {
        out.regime = Regime::core;
        out.S = std::pow(t, -static_cast<double>(d) / gamma_inf);
    } else if (ax <= 1.0) {
        out.regime = Regime::mid;
        out.S = t / std::pow(ax, d + gamma_inf);
    } else {
        out.regime = Regime::tail;
        out.S = t / std::pow(ax, d + std::min(gamma_inf, gamma0));
    }
    double rate = delta >= 0.0 ? m * (1.0 - delta) : m / 4.0;
    out.S *= std::exp(-rate * ax);
    if (ell != Ell::one) {
        out.S *= 1.0 + ell_value(ell, std::pow(t, -1.0 / gamma_inf));
    }
    return out;
}

}  // namespace

EnvelopeValue envelope(const SymbolSpec& spec, double t, double x_signed, double delta) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    if (spec.is_subordinator_exponent && x_signed < 0.0) {
        return {0.0, Regime::tail};  // support indicator
    }
    return profile(t, std::abs(x_signed), spec.dimension, spec.gamma0, spec.gamma_inf, spec.m,
                   spec.ell, delta);
}

EnvelopeValue envelope_frozen(const VarOrderSymbol& vos, double t, double x_minus_y, double y) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    // Thm-style frozen-index profile: pointwise orders at y, no ell factor.
    EnvelopeValue out = profile(t, std::abs(x_minus_y), vos.dimension, vos.gamma0_at(y),
                                vos.gamma_inf_at(y), vos.m, Ell::one, -1.0);
    return out;
}

double varorder_correction_term(const VarOrderSymbol& vos, double t, double x_minus_y) {
    double v = std::abs(x_minus_y);
    double g = std::min(vos.gamma0_L, vos.gamma_inf_L);
    return std::pow(t, vos.kappa) * std::exp(-vos.m * v / 4.0) / (1.0 + std::pow(v, g));
}

EnvelopeReport envelope_audit(const SymbolSpec& spec, const AuditConfig& cfg) {
    if (spec.dimension != 1) {
        throw ValidationError("envelope_audit: implemented for d = 1 grids");
    }
    SymbolView view = make_view(spec);

    auto run_pass = [&](int nt, int nx, double t_min) {
        std::vector<double> times(nt), xs(nx);
        for (int i = 0; i < nt; ++i) {
            times[i] = t_min * std::pow(cfg.T / t_min, nt == 1 ? 0.5 : double(i) / (nt - 1));
        }
        for (int j = 0; j < nx; ++j) {
            xs[j] = cfg.x_lo + (cfg.x_hi - cfg.x_lo) * (nx == 1 ? 0.5 : double(j) / (nx - 1));
        }
        DensityGrid grid = density_grid(view, times, xs, cfg.tol, cfg.with_derivatives);

        EnvelopeReport rep;
        rep.points.reserve(times.size() * xs.size());
        for (std::size_t it = 0; it < times.size(); ++it) {
            for (std::size_t ix = 0; ix < xs.size(); ++ix) {
                std::size_t idx = it * xs.size() + ix;
                EnvelopePoint pt;
                pt.t = times[it];
                pt.x = xs[ix];
                pt.p = grid.values[idx];
                pt.est_error = grid.est_errors[idx];
                EnvelopeValue ev = envelope(spec, pt.t, pt.x);
                pt.S = ev.S;
                pt.regime = ev.regime;
                if (ev.S > 0.0) {
                    pt.ratio = std::abs(pt.p) / ev.S;
                    rep.C_emp = std::max(rep.C_emp, pt.ratio);
                    if (cfg.with_derivatives) {
                        double dt_bound = ev.S / pt.t;
                        rep.C_emp_dt =
                            std::max(rep.C_emp_dt, std::abs(grid.dt_values[idx]) / dt_bound);
                        double f1 = std::pow(pt.t, -1.0 / spec.gamma_inf);
                        rep.C_emp_dx1 =
                            std::max(rep.C_emp_dx1, std::abs(grid.dx1_values[idx]) / (f1 * ev.S));
                        rep.C_emp_dx2 = std::max(rep.C_emp_dx2,
                                                 std::abs(grid.dx2_values[idx]) / (f1 * f1 * ev.S));
                    }
                } else {
                    // Subordinator support side: the estimate claims p = 0 here.
                    pt.ratio = 0.0;
                    if (std::abs(pt.p) > std::max(1e-6, 10.0 * pt.est_error)) {
                        rep.support_ok = false;
                    }
                }
                rep.points.push_back(pt);
            }
        }
        return rep;
    };

    EnvelopeReport rep = run_pass(cfg.times, cfg.points, cfg.T / 100.0);
    if (cfg.refine) {
        EnvelopeReport fine = run_pass(2 * cfg.times, 2 * cfg.points - 1, cfg.T / 200.0);
        rep.C_emp_refined = fine.C_emp;
        rep.refine_change =
            rep.C_emp > 0.0 ? std::abs(fine.C_emp - rep.C_emp) / rep.C_emp : 0.0;
        if (rep.refine_change > defaults::audit_refine_fail_factor - 1.0) {
            rep.failed = true;
            rep.fail_reason = "C_emp unstable under grid refinement (mis-specified gamma or m?)";
        }
        rep.support_ok = rep.support_ok && fine.support_ok;
    }
    double cap = cfg.ratio_ceiling;
    for (const auto& pt : rep.points) {
        if (pt.ratio > cap) {
            rep.failed = true;
            rep.fail_reason = "ratio ceiling exceeded at t=" + std::to_string(pt.t) +
                              " x=" + std::to_string(pt.x);
            break;
        }
    }
    return rep;
}

}  // namespace levykit

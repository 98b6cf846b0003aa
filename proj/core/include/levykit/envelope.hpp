#pragma once

#include <string>
#include <vector>

#include "levykit/density.hpp"
#include "levykit/var_order.hpp"

namespace levykit {

enum class Regime { core, mid, tail };
std::string regime_name(Regime r);

struct EnvelopeValue {
    double S = 0.0;
    Regime regime = Regime::core;
};

// Three-regime profile
//   core:  t^{-d/gamma_inf}          |x| <= t^{1/gamma_inf} and |x| <= 1
//   mid:   t / |x|^{d+gamma_inf}     t^{1/gamma_inf} < |x| <= 1
//   tail:  t / |x|^{d+min(g0,ginf)}  |x| > 1
// times exp(-m|x|/4) and, for non-constant ell, (1 + ell(t^{-1/gamma_inf})).
// Subordinator mode carries the [0, inf) support indicator (S = 0 for x < 0).
// `delta`, when set, replaces the m/4 rate by m(1-delta).
EnvelopeValue envelope(const SymbolSpec& spec, double t, double x_signed,
                       double delta = -1.0);

// Frozen-index variable-order form S(x - y, alpha(y), t): pointwise orders at
// y, no slowly-varying factor.
EnvelopeValue envelope_frozen(const VarOrderSymbol& vos, double t, double x_minus_y, double y);

// Second term of the variable-order bound: t^kappa e^{-m|v|/4} / (1 + |v|^{g0L ^ giL}).
double varorder_correction_term(const VarOrderSymbol& vos, double t, double x_minus_y);

struct EnvelopePoint {
    double t = 0.0;
    double x = 0.0;
    double p = 0.0;
    double est_error = 0.0;
    double S = 0.0;
    Regime regime = Regime::core;
    double ratio = 0.0;
};

struct EnvelopeReport {
    std::vector<EnvelopePoint> points;
    double C_emp = 0.0;
    double C_emp_dt = 0.0;
    double C_emp_dx1 = 0.0;
    double C_emp_dx2 = 0.0;
    double C_emp_refined = -1.0;  // < 0 when no refinement pass ran
    double refine_change = 0.0;
    bool failed = false;
    std::string fail_reason;
    bool support_ok = true;  // subordinator mode: |p| small for x < 0
};

struct AuditConfig {
    double T = 1.0;
    int times = 20;
    int points = 41;
    double x_lo = -10.0;
    double x_hi = 10.0;
    double tol = 1e-8;
    bool with_derivatives = true;
    bool refine = true;
    double ratio_ceiling = 1e6;
};

// C_emp = max p/S over the grid (time derivative against t^{-1} S, spatial
// order k against t^{-k/gamma_inf} S). FAIL when a ratio passes the ceiling or
// C_emp moves by more than 50% under the 2x grid refinement (which also halves
// the smallest time).
EnvelopeReport envelope_audit(const SymbolSpec& spec, const AuditConfig& cfg);

}  // namespace levykit

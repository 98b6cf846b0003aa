#pragma once

#include <functional>

#include "levykit/symbol.hpp"
#include "levykit/var_order.hpp"

namespace levykit {

// A symbol bound to its parameters, seen through the xi variable:
//   chi(z) = Psi(z) = f(z^2)   rotationally invariant rows
//   chi(z) = psi(z)            direct rows (NTS)
//   chi(z) = F(-i z)           Laplace-exponent rows
// so that exp(-t chi(xi - i s)) is the shifted inversion integrand in every mode.
struct SymbolView {
    int dimension = 1;
    double m = 0.0;
    double theta = 0.5;
    double gamma0 = 1.0;
    double gamma_inf = 1.0;
    Ell ell = Ell::one;
    bool subordinator = false;
    bool rot_invariant = true;
    std::function<Complex(Complex)> chi;
    double c1_real = 1.0;  // min Re chi(xi) ell(xi)/xi^gamma_inf over [1, 100]
};

SymbolView make_view(const SymbolSpec& spec);
SymbolView make_frozen_view(const VarOrderSymbol& vos, double y);

struct QuadratureSpec {
    double truncation_radius = 0.0;  // R
    int panels = 0;                  // 0: derive from the oscillation cap
    int nodes_per_panel = 16;
    double contour_shift = 0.0;      // |shift| < m (d = 1); sign chosen per point
    double target_abs_tol = 1e-8;
};

// R from the tail rule t c1 R^gamma_inf / ell(R) >= 40, shift from the strip
// width; panel layout derives from the quarter-oscillation cap at run time.
QuadratureSpec auto_quadrature(const SymbolView& s, double t, double x_mag,
                               double tol, bool allow_shift = true);

struct ValueWithError {
    double value = 0.0;
    double est_error = 0.0;
};

// integral over [0, R] of a complex integrand with oscillation frequency
// |x|; panel length obeys the quarter-oscillation cap where the damping
// weight is significant and relaxes geometrically in the exponential tail.
// The error estimate is |I(panels) - I(2 panels)|.
Complex oscillatory_integral(const std::function<Complex(double)>& f, double R, double freq,
                             const std::function<double(double)>& damping_log, int nodes,
                             Complex* halved = nullptr);

}  // namespace levykit

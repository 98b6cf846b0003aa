#pragma once

#include <vector>

#include "levykit/quadrature.hpp"

namespace levykit {

// Transition density p_t(x) by Fourier inversion of exp(-t psi). d = 1 uses
// direct oscillatory quadrature with an optional contour shift onto
// Im xi = -sign(x) * shift (|shift| < m); rotationally invariant d in {2, 3}
// reduce to a one-dimensional Bessel-kernel integral. The error estimate is
// the panel-doubling difference and is conservative for smooth integrands.
ValueWithError transition_density(const SymbolView& s, double t, const std::vector<double>& x,
                                  const QuadratureSpec& quad);
ValueWithError transition_density(const SymbolSpec& spec, double t, const std::vector<double>& x,
                                  const QuadratureSpec& quad);

// d = 1 shortcuts.
ValueWithError transition_density1(const SymbolView& s, double t, double x,
                                   const QuadratureSpec& quad);

// Integrand gains -chi(xi): d/dt p_t(x).
ValueWithError density_time_derivative(const SymbolView& s, double t,
                                       const std::vector<double>& x, const QuadratureSpec& quad);

// Integrand gains (-i xi)^order; d = 1 only, order <= 2.
ValueWithError density_space_derivative(const SymbolView& s, double t, double x, int order,
                                        const QuadratureSpec& quad);

// Mass of [-X, X] integrated in x-space from pointwise densities (adaptive
// Gauss-Legendre panels), and the complementary tail mass evaluated on the
// Fourier side through the Dirichlet window; their sum audits normalization.
ValueWithError window_mass(const SymbolView& s, double t, double X, double tol);
ValueWithError tail_mass_fourier(const SymbolView& s, double t, double X, double tol);

struct DensityGrid {
    std::vector<double> times;
    std::vector<double> points;  // d = 1
    // row-major [time][point]
    std::vector<double> values;
    std::vector<double> est_errors;
    std::vector<double> dt_values;
    std::vector<double> dx1_values;
    std::vector<double> dx2_values;
    bool has_derivatives = false;

    double at(std::size_t it, std::size_t ix) const { return values[it * points.size() + ix]; }
};

DensityGrid density_grid(const SymbolView& s, const std::vector<double>& times,
                         const std::vector<double>& points, double tol, bool with_derivatives);

}  // namespace levykit

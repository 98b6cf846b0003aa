#include "levykit/density.hpp"

#include <algorithm>
#include <cmath>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"
#include "levykit/gauss_legendre.hpp"
#include "levykit/parallel.hpp"

namespace levykit {

namespace {

// Shared d = 1 core: (e^{-s|x|}/pi) Re int_0^R factor(z) e^{-i x xi} e^{-t chi(z)} dxi
// on the contour z = xi - i sign(x) s.
ValueWithError invert1(const SymbolView& s, double t, double x, int deriv_t, int deriv_x,
                       const QuadratureSpec& quad) {
    double shift = quad.contour_shift;
    if (x == 0.0) shift = 0.0;
    if (shift >= s.m && shift != 0.0) {
        throw ValidationError("contour_shift must stay strictly inside the strip (|shift| < m)");
    }
    double sigma = x >= 0.0 ? 1.0 : -1.0;
    Complex zshift{0.0, -sigma * shift};

    double c1 = std::max(s.c1_real, 1e-12);
    double gamma = s.gamma_inf;
    Ell ell = s.ell;
    auto damping_log = [t, c1, gamma, ell](double xi) {
        return xi <= 1.0 ? 0.0 : -t * c1 * std::pow(xi, gamma) / ell_value(ell, xi);
    };

    auto integrand = [&](double xi) -> Complex {
        Complex z = Complex(xi, 0.0) + zshift;
        Complex val = std::exp(-t * s.chi(z)) * std::exp(Complex(0.0, -x * xi));
        for (int k = 0; k < deriv_t; ++k) val *= -s.chi(z);
        for (int k = 0; k < deriv_x; ++k) val *= Complex(0.0, -1.0) * z;
        return val;
    };

    double cap_scale = 1.0;
    for (int attempt = 0;; ++attempt) {
        Complex coarse, fine;
        double R = quad.truncation_radius;
        auto f = [&](double xi) { return integrand(xi); };
        // cap refinement is realized by pretending a larger frequency
        double freq = std::max(std::abs(x), 1e-30) * cap_scale;
        coarse = oscillatory_integral(f, R, freq, damping_log, quad.nodes_per_panel, &fine);
        double prefactor = std::exp(-shift * std::abs(x)) / M_PI;
        double value = prefactor * fine.real();
        double est = prefactor * std::abs((fine - coarse).real());
        if (est <= quad.target_abs_tol || attempt >= 3) {
            if (est > quad.target_abs_tol) {
                throw TolUnreachableError("transition_density: panel halving stalled at estimate " +
                                          std::to_string(est));
            }
            return {value, est};
        }
        cap_scale *= 4.0;
    }
}

ValueWithError invert_radial(const SymbolView& s, double t, double r, int deriv_t,
                             const QuadratureSpec& quad) {
    // d = 2: (1/2pi)  int e^{-t Psi(u)} J_0(u r) u du
    // d = 3: (1/2pi^2 r) int e^{-t Psi(u)} sin(u r) u du   (r -> 0: u^2 limit)
    int d = s.dimension;
    double c1 = std::max(s.c1_real, 1e-12);
    double gamma = s.gamma_inf;
    Ell ell = s.ell;
    auto damping_log = [t, c1, gamma, ell](double u) {
        return u <= 1.0 ? 0.0 : -t * c1 * std::pow(u, gamma) / ell_value(ell, u);
    };
    auto base = [&](double u) -> Complex {
        Complex val = std::exp(-t * s.chi(Complex(u, 0.0)));
        for (int k = 0; k < deriv_t; ++k) val *= -s.chi(Complex(u, 0.0));
        if (d == 2) {
            return val * bessel_j0(u * r) * u;
        }
        if (r > 0.0) return val * std::sin(u * r) * u;
        return val * u * u;
    };

    double cap_scale = 1.0;
    for (int attempt = 0;; ++attempt) {
        Complex coarse, fine;
        double freq = std::max(r, 1e-30) * cap_scale;
        coarse = oscillatory_integral(base, quad.truncation_radius, freq, damping_log,
                                      quad.nodes_per_panel, &fine);
        double prefactor = d == 2 ? 1.0 / (2.0 * M_PI)
                                  : (r > 0.0 ? 1.0 / (2.0 * M_PI * M_PI * r)
                                             : 1.0 / (2.0 * M_PI * M_PI));
        double value = prefactor * fine.real();
        double est = prefactor * std::abs((fine - coarse).real());
        if (est <= quad.target_abs_tol || attempt >= 3) {
            if (est > quad.target_abs_tol) {
                throw TolUnreachableError("transition_density: radial quadrature stalled");
            }
            return {value, est};
        }
        cap_scale *= 4.0;
    }
}

}  // namespace

ValueWithError transition_density1(const SymbolView& s, double t, double x,
                                   const QuadratureSpec& quad) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    return invert1(s, t, x, 0, 0, quad);
}

ValueWithError transition_density(const SymbolView& s, double t, const std::vector<double>& x,
                                  const QuadratureSpec& quad) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    if (static_cast<int>(x.size()) != s.dimension) {
        throw ValidationError("transition_density: point dimension mismatch");
    }
    if (s.dimension == 1) return invert1(s, t, x[0], 0, 0, quad);
    if (!s.rot_invariant) {
        throw NotRotInvariantError("d >= 2 requires a rotationally invariant symbol");
    }
    double r = 0.0;
    for (double c : x) r += c * c;
    return invert_radial(s, t, std::sqrt(r), 0, quad);
}

ValueWithError transition_density(const SymbolSpec& spec, double t, const std::vector<double>& x,
                                  const QuadratureSpec& quad) {
    return transition_density(make_view(spec), t, x, quad);
}

ValueWithError density_time_derivative(const SymbolView& s, double t,
                                       const std::vector<double>& x, const QuadratureSpec& quad) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    if (s.dimension == 1) return invert1(s, t, x[0], 1, 0, quad);
    if (!s.rot_invariant) {
        throw NotRotInvariantError("d >= 2 requires a rotationally invariant symbol");
    }
    double r = 0.0;
    for (double c : x) r += c * c;
    return invert_radial(s, t, std::sqrt(r), 1, quad);
}

ValueWithError density_space_derivative(const SymbolView& s, double t, double x, int order,
                                        const QuadratureSpec& quad) {
    if (t <= 0.0) throw ValidationError("t must be > 0");
    if (order < 0 || order > 2) throw ValidationError("spatial derivative order must be <= 2");
    if (s.dimension != 1) {
        throw ValidationError("spatial derivatives are computed for d = 1 only");
    }
    return invert1(s, t, x, 0, order, quad);
}

ValueWithError window_mass(const SymbolView& s, double t, double X, double tol) {
    // Panels clustered near the origin where the density peaks.
    double scale = std::max(std::pow(t, 1.0 / s.gamma_inf), 1e-3);
    std::vector<double> cuts{0.0};
    double w = scale / 2.0;
    while (cuts.back() < X) {
        cuts.push_back(std::min(X, cuts.back() + w));
        w = std::min(2.0 * w, X / 6.0);
    }
    QuadratureSpec quad = auto_quadrature(s, t, X, tol / 10.0);

    const GaussRule& g16 = gauss_legendre(16);
    const GaussRule& g8 = gauss_legendre(8);
    struct PanelResult {
        double v16, v8;
    };
    std::vector<double> sides;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        sides.push_back(cuts[i]);
        sides.push_back(cuts[i + 1]);
    }
    std::size_t panels_per_side = cuts.size() - 1;
    std::vector<PanelResult> results(2 * panels_per_side);
    parallel_for(2 * panels_per_side, [&](std::size_t idx) {
        bool negative = idx >= panels_per_side;
        std::size_t k = idx % panels_per_side;
        double a = cuts[k], b = cuts[k + 1];
        if (negative) std::swap(a, b), a = -a, b = -b;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double acc16 = 0.0, acc8 = 0.0;
        for (std::size_t i = 0; i < g16.nodes.size(); ++i) {
            acc16 += g16.weights[i] *
                     invert1(s, t, mid + half * g16.nodes[i], 0, 0, quad).value;
        }
        for (std::size_t i = 0; i < g8.nodes.size(); ++i) {
            acc8 += g8.weights[i] * invert1(s, t, mid + half * g8.nodes[i], 0, 0, quad).value;
        }
        results[idx] = {half * acc16, half * acc8};
    });
    double v = 0.0, err = 0.0;
    for (const auto& r : results) {
        v += r.v16;
        err += std::abs(r.v16 - r.v8);
    }
    return {v, err};
}

ValueWithError tail_mass_fourier(const SymbolView& s, double t, double X, double tol) {
    // mass([-X, X]) = (2/pi) Re int_0^inf e^{-t chi(xi)} sin(X xi)/xi dxi
    double c1 = std::max(s.c1_real, 1e-12);
    double gamma = s.gamma_inf;
    Ell ell = s.ell;
    auto damping_log = [t, c1, gamma, ell](double xi) {
        return xi <= 1.0 ? 0.0 : -t * c1 * std::pow(xi, gamma) / ell_value(ell, xi);
    };
    auto f = [&](double xi) -> Complex {
        double window = xi > 1e-12 ? std::sin(X * xi) / xi : X;
        return std::exp(-t * s.chi(Complex(xi, 0.0))) * window;
    };
    QuadratureSpec quad = auto_quadrature(s, t, X, tol);
    double cap_scale = 1.0;
    for (int attempt = 0;; ++attempt) {
        Complex coarse, fine;
        coarse = oscillatory_integral(f, quad.truncation_radius, X * cap_scale, damping_log, 16,
                                      &fine);
        double mass = (2.0 / M_PI) * fine.real();
        double est = (2.0 / M_PI) * std::abs((fine - coarse).real());
        if (est <= tol || attempt >= 3) {
            if (est > tol) throw TolUnreachableError("tail_mass_fourier: quadrature stalled");
            return {1.0 - mass, est};
        }
        cap_scale *= 4.0;
    }
}

DensityGrid density_grid(const SymbolView& s, const std::vector<double>& times,
                         const std::vector<double>& points, double tol, bool with_derivatives) {
    DensityGrid grid;
    grid.times = times;
    grid.points = points;
    grid.has_derivatives = with_derivatives;
    std::size_t n = times.size() * points.size();
    grid.values.resize(n);
    grid.est_errors.resize(n);
    if (with_derivatives) {
        grid.dt_values.resize(n);
        grid.dx1_values.resize(n);
        grid.dx2_values.resize(n);
    }
    parallel_for(n, [&](std::size_t idx) {
        std::size_t it = idx / points.size();
        std::size_t ix = idx % points.size();
        double t = times[it];
        double x = points[ix];
        QuadratureSpec quad = auto_quadrature(s, t, std::abs(x), tol);
        ValueWithError v = invert1(s, t, x, 0, 0, quad);
        grid.values[idx] = v.value;
        grid.est_errors[idx] = v.est_error;
        if (with_derivatives) {
            grid.dt_values[idx] = invert1(s, t, x, 1, 0, quad).value;
            grid.dx1_values[idx] = invert1(s, t, x, 0, 1, quad).value;
            grid.dx2_values[idx] = invert1(s, t, x, 0, 2, quad).value;
        }
    });
    return grid;
}

}  // namespace levykit

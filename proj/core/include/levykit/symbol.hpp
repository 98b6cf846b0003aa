#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "levykit/special.hpp"

namespace levykit {

// Slowly varying correction; the catalog only needs these two shapes.
enum class Ell { one, log };

double ell_value(Ell ell, double r);
std::string ell_name(Ell ell);

// How a family consumes its argument:
//   squared_radial : f(w) with w = z^2, Psi(z) = f(z^2)  (rotationally invariant rows)
//   direct         : psi(z) itself                        (NTS, d = 1)
//   laplace        : Laplace exponent F(lambda); psi(xi) = F(-i xi)
enum class ArgKind { squared_radial, direct, laplace };

// Parameter values, complexified so that complex-step differentiation in a
// parameter is exact for holomorphic dependence.
class ParamSet {
public:
    ParamSet() = default;
    static ParamSet from_real(const std::map<std::string, double>& params);

    Complex get(std::string_view name) const;
    double get_real(std::string_view name) const;
    bool has(std::string_view name) const;
    void set(std::string_view name, Complex value);

    const std::vector<std::pair<std::string, Complex>>& items() const { return kv_; }

private:
    std::vector<std::pair<std::string, Complex>> kv_;
};

struct SymbolSpec {
    std::string family_id;
    std::map<std::string, double> params;
    int dimension = 1;
    double m = 0.0;          // strip half-width of the holomorphic domain
    double theta = 0.5;      // sector opening angle, in (0, pi/2)
    double gamma0 = 0.0;     // low-frequency growth order, (0, 2]
    double gamma_inf = 0.0;  // high-frequency growth order, (0, 2]
    Ell ell = Ell::one;
    bool rotationally_invariant = true;
    bool is_subordinator_exponent = false;
};

// Characteristic exponent on real arguments. Always defined; no domain check.
Complex evaluate(const SymbolSpec& spec, const std::vector<double>& xi);
Complex evaluate(const SymbolSpec& spec, double xi);

// Holomorphic extension on Omega(m, theta) (Upsilon in subordinator mode).
// Throws OutsideDomainError off the domain, BranchAmbiguityError when a
// principal branch cut is crossed.
Complex evaluate_complex(const SymbolSpec& spec, Complex z);

// Membership predicate for Omega(m, theta) resp. Upsilon(m, theta); the
// boundary is excluded (the domains are open).
bool in_domain(const SymbolSpec& spec, Complex z);

// d/d beta_j Psi_beta(z): complex step (exact to machine precision) unless the
// family registers a closed form; order 2 uses central differences of order-1
// derivatives with step 1e-6.
Complex param_derivative(const SymbolSpec& spec, const std::string& param_name, Complex z,
                         int order = 1);

struct ComplexRaySample {
    double ray_angle = 0.0;        // angle of the ray, or NaN for strip lines
    std::vector<Complex> offsets;  // sampled points
    std::vector<Complex> values;   // symbol values at the points
};

struct BoundCertificate {
    bool passed = false;
    double c1_hat = 0.0;        // inf Re Psi(z) ell(|z|) / |z|^{gamma_inf}, |z| >= 1
    double c2_hat = 0.0;        // sup |Psi(z)| / (ell(|z|) regime term)
    double sector_ratio = 0.0;  // sup |Im psi| / |Re psi| over real xi != 0
    int samples = 0;
    std::string note;
};

// Empirical audit of the growth bounds. Lower-bound samples are taken along
// contour-relevant lines (|Re z| >= 1 in the strip for Levy exponents,
// |Im z| >= 1 for Laplace exponents): the bound's role is tail control of the
// shifted inversion contours.
BoundCertificate check_growth_bounds(const SymbolSpec& spec, int rays, int points_per_ray);
BoundCertificate check_growth_bounds(const SymbolSpec& spec);

// Sample points used by the certificate; exposed for diagnostics and tests.
std::vector<ComplexRaySample> sample_rays(const SymbolSpec& spec, int rays, int points_per_ray);

// min over real xi in [1, hi] of Re psi(xi) ell(|xi|) / |xi|^{gamma_inf};
// used to size quadrature truncation radii.
double real_axis_c1(const SymbolSpec& spec, double hi = 100.0);

// Family evaluation hooks, registered by the catalog.
struct FamilyOps {
    ArgKind arg_kind = ArgKind::squared_radial;
    bool rotationally_invariant = true;
    bool is_subordinator = false;
    Complex (*eval)(Complex, const ParamSet&) = nullptr;
    // Optional closed-form derivative; returns false if not provided for `name`.
    bool (*d_param)(std::string_view name, Complex, const ParamSet&, Complex&) = nullptr;
    // Parameters flagged non-smooth (NotDifferentiable).
    std::vector<std::string> non_smooth;
};

const FamilyOps& family_ops(const std::string& family_id);

}  // namespace levykit

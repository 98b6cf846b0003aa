#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace levykit {

enum class IndexMapForm { constant, affine_clamped, sinusoidal, tabulated };

// A bounded Hoelder-continuous map x -> I subset R, in one of four closed-form
// shapes; the Hoelder data is known analytically for each.
struct IndexMap {
    IndexMapForm form = IndexMapForm::constant;

    double value = 0.0;                          // constant
    double offset = 0.0, slope = 0.0;            // affine-clamped: clamp(offset + slope x)
    double clamp_lo = 0.0, clamp_hi = 0.0;       //   onto [clamp_lo, clamp_hi]
    double amplitude = 0.0, frequency = 1.0, phase = 0.0;  // sinusoidal: offset + A sin(w x + p)
    std::vector<std::pair<double, double>> knots;           // tabulated, linear interp,
                                                            // constant extrapolation

    double codomain_lo = 0.0, codomain_hi = 0.0;  // interval I
    double holder_exponent = 1.0;
    double holder_constant = 0.0;

    double operator()(double x) const;
    double range_inf() const;
    double range_sup() const;
    bool is_constant() const;

    // Range must stay inside the open interval I with margin >= 1e-6.
    void validate() const;

    static IndexMap constant(double v, double lo, double hi);
    static IndexMap affine(double offset, double slope, double clamp_lo, double clamp_hi,
                           double lo, double hi);
    static IndexMap sinusoidal(double offset, double amplitude, double frequency, double phase,
                               double lo, double hi);
    static IndexMap tabulated(std::vector<std::pair<double, double>> knots, double lo, double hi);
};

// Least-squares fit of log|f(x)-f(y)| against log|x-y| over random pairs in
// [-window, window]. A constant map is degenerate and reports (1, 0).
std::pair<double, double> estimate_holder(const IndexMap& map, int probes, std::uint64_t seed,
                                          double window = 10.0);

}  // namespace levykit

#include "levykit/special.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"

namespace levykit {

namespace {
// GSL's default error handler aborts; disable it once and rely on status codes.
const bool gsl_handler_off = [] {
    gsl_set_error_handler_off();
    return true;
}();
}  // namespace

Complex lngamma(Complex z) {
    (void)gsl_handler_off;
    gsl_sf_result lnr, arg;
    int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
    if (status != GSL_SUCCESS) {
        throw BranchAmbiguityError("lngamma: evaluation failed near a pole of Gamma");
    }
    return {lnr.val, arg.val};
}

Complex gamma_ratio(Complex a, Complex b) {
    // exp of the difference is insensitive to the 2*pi*i bookkeeping of each term.
    Complex d = lngamma(a) - lngamma(b);
    if (d.real() > 700.0) {
        throw NumericalError("gamma_ratio: overflow");
    }
    return std::exp(d);
}

double bessel_j0(double x) { return gsl_sf_bessel_J0(x); }
double bessel_j1(double x) { return gsl_sf_bessel_J1(x); }

Complex expm1_ratio(double b, double a, Complex u) {
    // (e^{bu}-1)/(e^{au}-1) = (b/a) * (1 + bu/2 + (bu)^2/6 + (bu)^3/24) /
    //                               (1 + au/2 + (au)^2/6 + (au)^3/24) + O(u^4)
    if (std::abs(u) > defaults::singularity_switch_radius) {
        Complex num = std::exp(b * u) - 1.0;
        Complex den = std::exp(a * u) - 1.0;
        return num / den;
    }
    auto poly = [](double c, Complex u_) {
        Complex cu = c * u_;
        return 1.0 + cu * (0.5 + cu * (1.0 / 6.0 + cu * (1.0 / 24.0)));
    };
    return (b / a) * poly(b, u) / poly(a, u);
}

Complex powm1_ratio(double c, double w0, Complex w) {
    // (w^c - w0^c)/(w - w0) = c w0^{c-1} [1 + (c-1)/2 v + (c-1)(c-2)/6 v^2
    //                                     + (c-1)(c-2)(c-3)/24 v^3] + O(v^4),  v = (w-w0)/w0
    Complex v = (w - w0) / w0;
    if (std::abs(v) > defaults::singularity_switch_radius) {
        return (std::pow(w, c) - std::pow(w0, c)) / (w - w0);
    }
    double c1 = c - 1.0, c2 = c - 2.0, c3 = c - 3.0;
    Complex series = 1.0 + v * (c1 / 2.0 + v * (c1 * c2 / 6.0 + v * (c1 * c2 * c3 / 24.0)));
    return c * std::pow(w0, c - 1.0) * series;
}

Complex log1p_over(Complex v) {
    // log(1+v)/v = 1 - v/2 + v^2/3 - v^3/4 + O(v^4)
    if (std::abs(v) > defaults::singularity_switch_radius) {
        return std::log(1.0 + v) / v;
    }
    return 1.0 + v * (-0.5 + v * (1.0 / 3.0 + v * (-0.25)));
}

Complex coth(Complex y) {
    if (y.real() < 0.0) return -coth(-y);
    double ay = std::abs(y);
    if (ay < 1e-8) return 1.0 / y + y / 3.0;
    if (y.real() > 350.0) return {1.0, 0.0};
    // coth(y) = 1 + 2/(e^{2y}-1)
    Complex e = std::exp(2.0 * y) - 1.0;
    return 1.0 + 2.0 / e;
}

}  // namespace levykit

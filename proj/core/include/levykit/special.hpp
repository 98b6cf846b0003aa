#pragma once

#include <complex>

namespace levykit {

using Complex = std::complex<double>;

// log Gamma(z), principal branch, valid off the poles 0, -1, -2, ...
Complex lngamma(Complex z);

// Gamma(a)/Gamma(b) computed in log space.
Complex gamma_ratio(Complex a, Complex b);

// Bessel J_nu(x) for nu = 0, 1 and half-integer orders used by the
// d in {2,3} radial Fourier reductions.
double bessel_j0(double x);
double bessel_j1(double x);

// (e^{bu} - 1) / (e^{au} - 1), series near u = 0 (both factors vanish there).
Complex expm1_ratio(double b, double a, Complex u);

// (w^c - w0^c) / (w - w0), series near w = w0.
Complex powm1_ratio(double c, double w0, Complex w);

// log(1 + v) / v, series near v = 0.
Complex log1p_over(Complex v);

// coth on Re y > 0, stable for large |y| (-> 1) and small |y| (~ 1/y).
Complex coth(Complex y);

}  // namespace levykit

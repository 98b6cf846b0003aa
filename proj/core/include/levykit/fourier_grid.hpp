#pragma once

#include <cstddef>
#include <vector>

#include "levykit/quadrature.hpp"

namespace levykit {

// Power-of-two complex FFT (FFTW behind a plan cache; safe to call from
// multiple threads on distinct buffers).
void fft(std::vector<Complex>& a, bool inverse);

// Uniform-grid density via trapezoidal inversion on the dual grid:
//   x_j = -L + j h,  h = 2L/n,  xi_k = k pi / L.
// Periodization alias is the density's images at x +- 2Lk; pick L from the
// envelope tail when that matters.
struct FourierGrid {
    double L = 0.0;
    std::size_t n = 0;
    std::vector<double> x;
    std::vector<double> p;

    double spacing() const { return 2.0 * L / static_cast<double>(n); }
    // linear interpolation, 0 outside
    double interp(double xq) const;
};

FourierGrid invert_on_grid(const SymbolView& s, double t, double L, std::size_t n);

// Grid size that resolves exp(-t chi): smallest power of two with
// t * Re chi(xi_max) above the tail exponent.
std::size_t recommend_grid_size(const SymbolView& s, double t, double L, std::size_t cap = 1u << 21);

}  // namespace levykit

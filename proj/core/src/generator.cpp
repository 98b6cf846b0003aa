#include "levykit/generator.hpp"

#include <cmath>

#include "levykit/errors.hpp"
#include "levykit/fourier_grid.hpp"

namespace levykit {

SpectralGenerator::SpectralGenerator(std::vector<double> f, double x0, double h)
    : x0_(x0), h_(h) {
    std::size_t n = f.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ValidationError("SpectralGenerator: grid size must be a power of two");
    }
    if (std::abs(f.front()) > 1e-10 || std::abs(f.back()) > 1e-10) {
        throw BoundaryLeakError("apply_generator: f does not decay at the grid boundary");
    }
    // fhat(xi_k) = (1/2pi) sum_j f(x_j) e^{-i x_j xi_k} h, with xi_k = 2 pi k/(n h).
    std::vector<Complex> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = f[j];
    fft(a, false);
    double dxi = 2.0 * M_PI / (static_cast<double>(n) * h);
    xi_.resize(n);
    fhat_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double freq = k < n / 2 ? static_cast<double>(k)
                                : static_cast<double>(k) - static_cast<double>(n);
        double xi = freq * dxi;
        xi_[k] = xi;
        // FFT gave sum_j f_j e^{-2pi i jk/n}; attach the x0 phase and measures.
        Complex coeff = a[k] * std::exp(Complex(0.0, -x0 * xi)) * (h / (2.0 * M_PI));
        fhat_[k] = coeff * dxi;  // premultiplied quadrature weight for apply()
    }
}

double SpectralGenerator::apply(const std::function<Complex(double, double)>& q, double x) const {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < xi_.size(); ++k) {
        acc += q(x, xi_[k]) * fhat_[k] * std::exp(Complex(0.0, x * xi_[k]));
    }
    return -acc.real();
}

double apply_generator(const SymbolView& s, const std::vector<double>& f, double x0, double h,
                       double x) {
    SpectralGenerator gen(f, x0, h);
    return gen.apply([&s](double, double xi) { return s.chi(Complex(xi, 0.0)); }, x);
}

double apply_generator(const VarOrderSymbol& vos, const std::vector<double>& f, double x0,
                       double h, double x) {
    SpectralGenerator gen(f, x0, h);
    return gen.apply([&vos](double xq, double xi) { return vos.q(xq, xi); }, x);
}

}  // namespace levykit

#include "levykit/fourier_grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"

namespace levykit {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(std::size_t n, bool inverse) {
    // Plans are cached per (size, direction); fftw_execute_dft on distinct
    // buffers is thread-safe, plan creation is not.
    static std::map<std::pair<std::size_t, bool>, fftw_plan> cache;
    auto key = std::make_pair(n, inverse);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Complex> tmp(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

}  // namespace

void fft(std::vector<Complex>& a, bool inverse) {
    if (a.empty() || (a.size() & (a.size() - 1)) != 0) {
        throw ValidationError("fft: size must be a power of two");
    }
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = plan_for(a.size(), inverse);
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(a.data()),
                     reinterpret_cast<fftw_complex*>(a.data()));
}

double FourierGrid::interp(double xq) const {
    if (x.empty() || xq < x.front() || xq > x.back()) return 0.0;
    double h = spacing();
    double u = (xq - x.front()) / h;
    std::size_t j = std::min(static_cast<std::size_t>(u), n - 2);
    double w = u - static_cast<double>(j);
    return p[j] * (1.0 - w) + p[j + 1] * w;
}

std::size_t recommend_grid_size(const SymbolView& s, double t, double L, std::size_t cap) {
    double c1 = std::max(s.c1_real, 1e-12);
    double target = defaults::quad_tail_exponent;
    double R = std::pow(target / (t * c1), 1.0 / s.gamma_inf);
    for (int i = 0; i < 4; ++i) {
        R = std::pow(target * ell_value(s.ell, R) / (t * c1), 1.0 / s.gamma_inf);
    }
    double dxi = M_PI / L;
    std::size_t n = 1;
    while (static_cast<double>(n) * dxi < 2.0 * R && n < cap) n <<= 1;
    return n;
}

FourierGrid invert_on_grid(const SymbolView& s, double t, double L, std::size_t n) {
    if (s.dimension != 1) throw ValidationError("invert_on_grid: d = 1 only");
    if (t <= 0.0) throw ValidationError("t must be > 0");
    FourierGrid grid;
    grid.L = L;
    grid.n = n;
    double dxi = M_PI / L;

    std::vector<Complex> a(n);
    // xi_k for k in [0, n/2) and the wrapped negatives; a_k = phi(xi_k) e^{i L xi_k}.
    for (std::size_t k = 0; k < n; ++k) {
        double freq = k < n / 2 ? static_cast<double>(k)
                                : static_cast<double>(k) - static_cast<double>(n);
        double xi = freq * dxi;
        Complex phi = std::exp(-t * s.chi(Complex(xi, 0.0)));
        a[k] = phi * std::exp(Complex(0.0, L * xi));
    }
    fft(a, false);  // e^{-2pi i jk/n}

    grid.x.resize(n);
    grid.p.resize(n);
    double h = 2.0 * L / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        grid.x[j] = -L + static_cast<double>(j) * h;
        grid.p[j] = a[j].real() * dxi / (2.0 * M_PI);
    }
    return grid;
}

}  // namespace levykit

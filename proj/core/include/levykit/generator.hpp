#pragma once

#include <functional>
#include <vector>

#include "levykit/quadrature.hpp"

namespace levykit {

// Pseudo-differential generator in Fourier form,
//   L f(x) = - sum_k q(x, xi_k) fhat(xi_k) e^{i x xi_k} dxi,
// from samples of f on the uniform grid x_j = x0 + j h (n a power of two).
// f must decay at the grid edges (|f| < 1e-10), else BoundaryLeak.
class SpectralGenerator {
public:
    SpectralGenerator(std::vector<double> f, double x0, double h);

    // q: symbol at (x, xi). For a state-independent exponent pass
    // [view](double, double xi){ return view.chi(xi); }.
    double apply(const std::function<Complex(double x, double xi)>& q, double x) const;

    const std::vector<double>& frequencies() const { return xi_; }
    const std::vector<Complex>& coefficients() const { return fhat_; }

private:
    double x0_ = 0.0;
    double h_ = 0.0;
    std::vector<double> xi_;
    std::vector<Complex> fhat_;  // includes the dxi measure factor
};

// One-off helpers on SymbolView / VarOrderSymbol.
double apply_generator(const SymbolView& s, const std::vector<double>& f, double x0, double h,
                       double x);
double apply_generator(const VarOrderSymbol& vos, const std::vector<double>& f, double x0,
                       double h, double x);

}  // namespace levykit

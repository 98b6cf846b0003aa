#include "levykit/index_map.hpp"

#include <algorithm>
#include <cmath>

#include "levykit/errors.hpp"
#include "levykit/rng.hpp"

namespace levykit {

double IndexMap::operator()(double x) const {
    switch (form) {
        case IndexMapForm::constant:
            return value;
        case IndexMapForm::affine_clamped:
            return std::clamp(offset + slope * x, clamp_lo, clamp_hi);
        case IndexMapForm::sinusoidal:
            return offset + amplitude * std::sin(frequency * x + phase);
        case IndexMapForm::tabulated: {
            if (x <= knots.front().first) return knots.front().second;
            if (x >= knots.back().first) return knots.back().second;
            auto it = std::upper_bound(knots.begin(), knots.end(), x,
                                       [](double v, const auto& kv) { return v < kv.first; });
            auto lo = std::prev(it);
            double t = (x - lo->first) / (it->first - lo->first);
            return lo->second + t * (it->second - lo->second);
        }
    }
    return value;
}

double IndexMap::range_inf() const {
    switch (form) {
        case IndexMapForm::constant:
            return value;
        case IndexMapForm::affine_clamped:
            return clamp_lo;
        case IndexMapForm::sinusoidal:
            return offset - std::abs(amplitude);
        case IndexMapForm::tabulated: {
            double lo = knots.front().second;
            for (const auto& kv : knots) lo = std::min(lo, kv.second);
            return lo;
        }
    }
    return value;
}

double IndexMap::range_sup() const {
    switch (form) {
        case IndexMapForm::constant:
            return value;
        case IndexMapForm::affine_clamped:
            return clamp_hi;
        case IndexMapForm::sinusoidal:
            return offset + std::abs(amplitude);
        case IndexMapForm::tabulated: {
            double hi = knots.front().second;
            for (const auto& kv : knots) hi = std::max(hi, kv.second);
            return hi;
        }
    }
    return value;
}

bool IndexMap::is_constant() const {
    return form == IndexMapForm::constant || range_sup() - range_inf() == 0.0;
}

void IndexMap::validate() const {
    const double margin = 1e-6;
    if (codomain_hi <= codomain_lo) {
        throw CodomainViolationError("index map codomain interval is empty");
    }
    if (range_inf() < codomain_lo + margin || range_sup() > codomain_hi - margin) {
        throw CodomainViolationError("index map range leaves the open codomain interval");
    }
    if (form == IndexMapForm::tabulated) {
        if (knots.size() < 2) throw ValidationError("tabulated index map needs >= 2 knots");
        for (std::size_t i = 1; i < knots.size(); ++i) {
            if (knots[i].first <= knots[i - 1].first) {
                throw ValidationError("tabulated index map knots must be strictly increasing");
            }
        }
    }
    if (holder_exponent <= 0.0 || holder_exponent > 1.0) {
        throw ValidationError("Hoelder exponent must be in (0, 1]");
    }
}

IndexMap IndexMap::constant(double v, double lo, double hi) {
    IndexMap m;
    m.form = IndexMapForm::constant;
    m.value = v;
    m.codomain_lo = lo;
    m.codomain_hi = hi;
    m.holder_exponent = 1.0;
    m.holder_constant = 0.0;
    m.validate();
    return m;
}

IndexMap IndexMap::affine(double offset, double slope, double clamp_lo, double clamp_hi,
                          double lo, double hi) {
    IndexMap m;
    m.form = IndexMapForm::affine_clamped;
    m.offset = offset;
    m.slope = slope;
    m.clamp_lo = clamp_lo;
    m.clamp_hi = clamp_hi;
    m.codomain_lo = lo;
    m.codomain_hi = hi;
    m.holder_exponent = 1.0;
    m.holder_constant = std::abs(slope);
    m.validate();
    return m;
}

IndexMap IndexMap::sinusoidal(double offset, double amplitude, double frequency, double phase,
                              double lo, double hi) {
    IndexMap m;
    m.form = IndexMapForm::sinusoidal;
    m.offset = offset;
    m.amplitude = amplitude;
    m.frequency = frequency;
    m.phase = phase;
    m.codomain_lo = lo;
    m.codomain_hi = hi;
    m.holder_exponent = 1.0;
    m.holder_constant = std::abs(amplitude * frequency);
    m.validate();
    return m;
}

IndexMap IndexMap::tabulated(std::vector<std::pair<double, double>> knots, double lo, double hi) {
    IndexMap m;
    m.form = IndexMapForm::tabulated;
    m.knots = std::move(knots);
    m.codomain_lo = lo;
    m.codomain_hi = hi;
    m.holder_exponent = 1.0;
    double c = 0.0;
    for (std::size_t i = 1; i < m.knots.size(); ++i) {
        c = std::max(c, std::abs((m.knots[i].second - m.knots[i - 1].second) /
                                 (m.knots[i].first - m.knots[i - 1].first)));
    }
    m.holder_constant = c;
    m.validate();
    return m;
}

std::pair<double, double> estimate_holder(const IndexMap& map, int probes, std::uint64_t seed,
                                          double window) {
    if (probes < 100) throw ValidationError("estimate_holder: probes must be >= 100");
    PhiloxStream rng(seed, 0x601d);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int i = 0; i < probes; ++i) {
        double x = window * (2.0 * rng.next_double() - 1.0);
        double y = window * (2.0 * rng.next_double() - 1.0);
        double df = std::abs(map(x) - map(y));
        double dx = std::abs(x - y);
        if (df < 1e-14 || dx < 1e-12) continue;
        double lx = std::log(dx), ly = std::log(df);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < probes / 10) {
        // Degenerate (constant) map: zero increments, exponent undefined.
        return {1.0, 0.0};
    }
    double denom = n * sxx - sx * sx;
    double rho_hat = (n * sxy - sx * sy) / denom;
    double logc = (sy - rho_hat * sx) / n;
    return {rho_hat, std::exp(logc)};
}

}  // namespace levykit

#include "levykit/var_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levykit/defaults.hpp"
#include "levykit/errors.hpp"

namespace levykit {

namespace {

// Window covering the variation of every map: sinusoidal periods, knot spans.
double probe_window(const VarOrderSymbol& vos) {
    double w = 20.0;
    for (const auto& [name, map] : vos.maps) {
        if (map.form == IndexMapForm::tabulated) {
            w = std::max({w, std::abs(map.knots.front().first), std::abs(map.knots.back().first)});
        }
        if (map.form == IndexMapForm::sinusoidal && map.frequency != 0.0) {
            w = std::max(w, 3.0 * 2.0 * M_PI / std::abs(map.frequency));
        }
    }
    return w;
}

}  // namespace

std::map<std::string, double> VarOrderSymbol::params_at(double x) const {
    std::map<std::string, double> p;
    for (const auto& [name, map] : maps) p[name] = map(x);
    return p;
}

double VarOrderSymbol::power_at(double y) const { return power_map ? (*power_map)(y) : 1.0; }

SymbolSpec VarOrderSymbol::frozen(double y) const {
    if (power_map) {
        throw ValidationError(
            "frozen: power-form symbols have no catalog row; use frozen_view instead");
    }
    SymbolSpec spec = build_spec(family_key, params_at(y), dimension);
    spec.m = m;  // global strip width of the family, not the frozen row's own
    return spec;
}

Complex VarOrderSymbol::q(double x, double xi) const {
    if (xi == 0.0) return {0.0, 0.0};
    const CatalogEntry& entry = lookup(family_key);
    ParamSet ps = ParamSet::from_real(params_at(x));
    Complex v;
    switch (entry.ops.arg_kind) {
        case ArgKind::squared_radial:
            v = entry.ops.eval(Complex(xi * xi, 0.0), ps);
            break;
        case ArgKind::direct:
            v = entry.ops.eval(Complex(xi, 0.0), ps);
            break;
        case ArgKind::laplace:
            v = entry.ops.eval(Complex(0.0, -xi), ps);
            break;
    }
    if (power_map) v = std::pow(v, (*power_map)(x));
    return v;
}

Complex VarOrderSymbol::q_complex(double x, Complex z) const {
    const CatalogEntry& entry = lookup(family_key);
    ParamSet ps = ParamSet::from_real(params_at(x));
    Complex v;
    switch (entry.ops.arg_kind) {
        case ArgKind::squared_radial:
            v = entry.ops.eval(z * z, ps);
            break;
        case ArgKind::direct:
            v = entry.ops.eval(z, ps);
            break;
        case ArgKind::laplace:
            v = entry.ops.eval(z, ps);
            break;
    }
    if (power_map) v = std::pow(v, (*power_map)(x));
    return v;
}

double VarOrderSymbol::gamma0_at(double y) const {
    const CatalogEntry& entry = lookup(family_key);
    return power_at(y) * entry.rules(params_at(y)).gamma0;
}

double VarOrderSymbol::gamma_inf_at(double y) const {
    const CatalogEntry& entry = lookup(family_key);
    return power_at(y) * entry.rules(params_at(y)).gamma_inf;
}

VarOrderSymbol build_var_order(const std::string& key,
                               const std::map<std::string, IndexMap>& index_maps,
                               std::optional<IndexMap> power_map) {
    const CatalogEntry& entry = lookup(key);

    VarOrderSymbol vos;
    vos.family_key = key;
    vos.maps = index_maps;
    vos.power_map = std::move(power_map);
    vos.dimension = 1;

    for (const auto& ps : entry.schema) {
        auto it = vos.maps.find(ps.name);
        if (it == vos.maps.end()) {
            throw MissingIndexMapError("family '" + key + "' requires an index map for '" +
                                       ps.name + "'");
        }
        it->second.validate();
        if (!ps.contains(it->second.range_inf()) || !ps.contains(it->second.range_sup())) {
            throw CodomainViolationError("codomain of '" + ps.name + "' leaves the schema range " +
                                         ps.range_text());
        }
        if (!it->second.is_constant()) {
            bool allowed = std::find(entry.var_params.begin(), entry.var_params.end(), ps.name) !=
                           entry.var_params.end();
            if (!allowed) {
                throw CodomainViolationError("parameter '" + ps.name +
                                             "' may not vary for family '" + key + "'");
            }
            if (vos.varying_param.empty()) vos.varying_param = ps.name;
        }
    }
    for (const auto& [name, map] : vos.maps) {
        if (std::none_of(entry.schema.begin(), entry.schema.end(),
                         [&, n = name](const ParamSpec& ps) { return ps.name == n; })) {
            throw MissingIndexMapError("family '" + key + "' has no parameter '" + name + "'");
        }
    }
    if (vos.power_map) {
        vos.power_map->validate();
        if (vos.power_map->range_inf() <= 0.0 || vos.power_map->range_sup() > 1.0) {
            throw CodomainViolationError("power map codomain must lie in (0, 1]");
        }
    }

    // Envelope data: extrema of the pointwise rules over a probe window.
    double window = probe_window(vos);
    const int n_probe = 4097;
    double g0L = std::numeric_limits<double>::infinity();
    double giL = std::numeric_limits<double>::infinity();
    double giU = -std::numeric_limits<double>::infinity();
    double m_inf = std::numeric_limits<double>::infinity();
    StatedRules mid = entry.rules(vos.params_at(0.0));
    for (int i = 0; i < n_probe; ++i) {
        double x = -window + 2.0 * window * i / (n_probe - 1);
        StatedRules r = entry.rules(vos.params_at(x));
        double a = vos.power_map ? (*vos.power_map)(x) : 1.0;
        g0L = std::min(g0L, a * r.gamma0);
        giL = std::min(giL, a * r.gamma_inf);
        giU = std::max(giU, a * r.gamma_inf);
        m_inf = std::min(m_inf, r.m_sup);
        if (entry.cross_validate) {
            std::map<std::string, double> p = vos.params_at(x);
            entry.cross_validate(p);
        }
    }
    vos.gamma0_L = g0L;
    vos.gamma_inf_L = giL;
    vos.gamma_inf_U = giU;
    vos.theta = mid.theta;
    vos.ell = mid.ell;
    vos.m = vos.power_map ? 0.0 : defaults::m_default_factor * m_inf;
    if (giL <= 0.0) throw CodomainViolationError("gamma_inf must stay positive over the codomain");

    double rho = 1.0, hc = 0.0;
    for (const auto& [name, map] : vos.maps) {
        rho = std::min(rho, map.holder_exponent);
        hc = std::max(hc, map.holder_constant);
    }
    if (vos.power_map) {
        rho = std::min(rho, vos.power_map->holder_exponent);
        hc = std::max(hc, vos.power_map->holder_constant);
    }
    vos.holder_exponent = rho;
    vos.holder_constant = hc;

    vos.gamma = 1.0 / vos.gamma_inf_U;
    vos.kappa = vos.gamma * std::min(rho, (-vos.dimension + vos.gamma_inf_U) + 1.0);
    return vos;
}

}  // namespace levykit

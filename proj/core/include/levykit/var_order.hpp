#pragma once

#include <map>
#include <optional>
#include <string>

#include "levykit/catalog.hpp"
#include "levykit/index_map.hpp"
#include "levykit/symbol.hpp"

namespace levykit {

// Spatially varying symbol q(x, xi) = psi_{alpha(x)}(xi) for a catalog family,
// optionally raised to a variable power q = (psi_{beta(x)}(xi))^{a(x)}.
struct VarOrderSymbol {
    std::string family_key;
    std::map<std::string, IndexMap> maps;  // one per schema parameter
    std::optional<IndexMap> power_map;     // codomain in (0, 1]; forces m = 0
    int dimension = 1;

    // Derived envelope data.
    double gamma0_L = 0.0;
    double gamma_inf_L = 0.0;
    double gamma_inf_U = 0.0;
    double m = 0.0;
    double holder_exponent = 1.0;
    double holder_constant = 0.0;
    double gamma = 0.0;  // defaults to 1/gamma_inf_U (largest admissible)
    double kappa = 0.0;  // gamma * min{holder_exponent, (-d + gamma_inf_U) + 1}
    double theta = 0.5;
    Ell ell = Ell::one;

    // The name of the single non-constant map, empty if all maps are constant.
    std::string varying_param;

    std::map<std::string, double> params_at(double x) const;
    SymbolSpec frozen(double y) const;  // power maps folded into the evaluator below

    Complex q(double x, double xi) const;
    Complex q_complex(double x, Complex z) const;

    double gamma0_at(double y) const;
    double gamma_inf_at(double y) const;
    double power_at(double y) const;  // 1 when no power map
};

// Validates maps against the row schema (MissingIndexMap / CodomainViolation),
// derives the envelope data, and freezes kappa with gamma = 1/gamma_inf_U.
VarOrderSymbol build_var_order(const std::string& key,
                               const std::map<std::string, IndexMap>& index_maps,
                               std::optional<IndexMap> power_map = std::nullopt);

}  // namespace levykit

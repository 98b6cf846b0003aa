#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levykit/symbol.hpp"

namespace levykit {

struct ParamSpec {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = true;
    bool hi_open = true;

    bool contains(double v) const {
        if (lo_open ? v <= lo : v < lo) return false;
        if (hi_open ? v >= hi : v > hi) return false;
        return true;
    }
    std::string range_text() const;
};

// Heat-kernel parameters a table row states for given parameter values.
struct StatedRules {
    double gamma0 = 0.0;
    double gamma_inf = 0.0;
    double m_sup = 0.0;  // supremum of the admissible strip half-width (0: none)
    double theta = 0.5;
    Ell ell = Ell::one;
};

struct CatalogEntry {
    std::string key;
    std::string source_row;  // "table:row", e.g. "1:5"
    FamilyOps ops;
    std::vector<ParamSpec> schema;
    StatedRules (*rules)(const std::map<std::string, double>&) = nullptr;
    void (*cross_validate)(const std::map<std::string, double>&) = nullptr;  // may be null
    // Parameters that may carry an index map in the variable-order table.
    std::vector<std::string> var_params;
    std::string t3_row;  // "" when the row has no variable-order counterpart

    std::string param_schema_text() const;
};

// Registry access. lookup throws UnknownFamilyError with a nearest-key hint.
const CatalogEntry& lookup(const std::string& key);
const std::vector<std::string>& catalog_keys();

struct SpecOverrides {
    std::optional<double> gamma0;
    std::optional<double> gamma_inf;
    std::optional<double> theta;
    std::optional<Ell> ell;
};

// Validate parameters against the row schema and assemble a SymbolSpec with the
// stated heat-kernel rules. m defaults to 0.9x the stated supremum.
SymbolSpec build_spec(const std::string& key, const std::map<std::string, double>& params,
                      int dimension = 1, std::optional<double> m_override = std::nullopt,
                      const SpecOverrides& overrides = {});

// Uniform draw from the schema box (open ends shrunk by a margin); used by the
// catalog sweep tests.
std::map<std::string, double> random_in_range_params(const CatalogEntry& entry,
                                                     std::uint64_t seed);

}  // namespace levykit

#pragma once

#include "rodwave/catalog.hpp"
#include "rodwave/materials.hpp"
#include "rodwave/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace rodwave {

/// "%.17g"; non-finite values print as "nan", "inf", "-inf".
std::string format_double(double v);

/// Material object: every MaterialConstants field as "p/q" text, an integer or a decimal,
/// or {"preset": "A"|"B"} for the figure sets. Throws InvalidConstants naming the field.
MaterialConstants material_from_json(const nlohmann::json& j);

/// Exact fractions as "p/q" strings at the top level plus a "decimal" object.
nlohmann::json to_json(const DerivedParameters& dp);

/// Overrides the numeric FamilyInputs fields present in `j` (mu, lambda, tau, sigma, e, Q0, Q1).
/// Throws InvalidConstants on a non-numeric or non-finite value, naming the field.
void apply_inputs(const nlohmann::json& j, FamilyInputs& in);

/// {"material": {...}, "family": "sg.case1.tanh.plus", "inputs": {...}}; every key optional.
struct Config {
    std::optional<MaterialConstants> material;
    std::optional<FamilyId> family;
    nlohmann::json inputs = nlohmann::json::object();
};

/// Throws InvalidConstants (unreadable file, malformed JSON or a bad field) or UnknownFamily.
Config load_config(const std::filesystem::path& path);
Config parse_config(const nlohmann::json& j);

/// default_inputs(id) with the config's material (if any) and inputs applied.
FamilyInputs resolve_inputs(const Config& cfg, const FamilyId& id);

nlohmann::json to_json(const ResidualReport& r);
nlohmann::json to_json(Complex z);

}  // namespace rodwave

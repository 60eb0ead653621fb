#include "rodwave/io.hpp"

#include "rodwave/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace rodwave {

namespace {

using nlohmann::json;

Rational field_rational(const json& obj, const char* name)
{
    if (!obj.contains(name)) throw InvalidConstants(std::string("missing material field ") + name);
    const json& v = obj.at(name);
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer() || v.is_number_unsigned())
        text = v.dump();
    else if (v.is_number_float() && std::isfinite(v.get<double>()))
        text = v.dump();
    else
        throw InvalidConstants(std::string("material field ") + name + " must be a number or \"p/q\" text");
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InvalidConstants(std::string("material field ") + name + ": " + e.what());
    }
}

}  // namespace

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

MaterialConstants material_from_json(const json& j)
{
    if (!j.is_object()) throw InvalidConstants("material must be an object");
    if (j.contains("preset")) {
        const json& p = j.at("preset");
        if (p == "A") return figure_set_a();
        if (p == "B") return figure_set_b();
        throw InvalidConstants("material field preset must be \"A\" or \"B\"");
    }
    MaterialConstants mc;
    mc.lambda1 = field_rational(j, "lambda1");
    mc.mu1 = field_rational(j, "mu1");
    mc.nu1 = field_rational(j, "nu1");
    mc.nu2 = field_rational(j, "nu2");
    mc.nu4 = field_rational(j, "nu4");
    mc.rho = field_rational(j, "rho");
    mc.c = field_rational(j, "c");
    mc.delta = field_rational(j, "delta");
    mc.epsilon = field_rational(j, "epsilon");
    return mc;
}

json to_json(const DerivedParameters& dp)
{
    const std::pair<const char*, const Rational*> fields[] = {
        {"n1", &dp.n1},         {"beta1", &dp.beta1},   {"alpha1", &dp.alpha1}, {"alpha2", &dp.alpha2},
        {"c1", &dp.c1},         {"c2", &dp.c2},         {"kappa1", &dp.kappa1}, {"kappa3", &dp.kappa3},
        {"kappa5", &dp.kappa5}, {"kappa6", &dp.kappa6}};
    json j = json::object(), dec = json::object();
    for (const auto& [name, value] : fields) {
        j[name] = to_string(*value);
        dec[name] = to_double(*value);
    }
    j["decimal"] = dec;
    return j;
}

void apply_inputs(const json& j, FamilyInputs& in)
{
    if (!j.is_object()) throw InvalidConstants("inputs must be an object");
    const std::pair<const char*, double*> fields[] = {{"mu", &in.mu},   {"lambda", &in.lambda}, {"tau", &in.tau},
                                                      {"sigma", &in.sigma}, {"e", &in.e},   {"Q0", &in.q0},
                                                      {"Q1", &in.q1}};
    for (const auto& [name, target] : fields) {
        if (!j.contains(name)) continue;
        const json& v = j.at(name);
        double x;
        if (v.is_number())
            x = v.get<double>();
        else if (v.is_string()) {
            try {
                x = to_double(parse_rational(v.get<std::string>()));
            } catch (const std::invalid_argument&) {
                throw InvalidConstants(std::string("input ") + name + " is not a number");
            }
        } else
            throw InvalidConstants(std::string("input ") + name + " is not a number");
        if (!std::isfinite(x)) throw InvalidConstants(std::string("input ") + name + " is not finite");
        *target = x;
    }
}

Config parse_config(const json& j)
{
    if (!j.is_object()) throw InvalidConstants("config must be a JSON object");
    Config cfg;
    if (j.contains("material")) cfg.material = material_from_json(j.at("material"));
    if (j.contains("family")) {
        if (!j.at("family").is_string()) throw InvalidConstants("family must be a string");
        cfg.family = parse_family_id(j.at("family").get<std::string>());
    }
    if (j.contains("inputs")) {
        if (!j.at("inputs").is_object()) throw InvalidConstants("inputs must be an object");
        cfg.inputs = j.at("inputs");
    }
    return cfg;
}

Config load_config(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f) throw InvalidConstants("cannot read config " + path.string());
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw InvalidConstants("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

FamilyInputs resolve_inputs(const Config& cfg, const FamilyId& id)
{
    FamilyInputs in = default_inputs(id);
    if (cfg.material) {
        const FamilyInputs m = inputs_from(*cfg.material);
        in.material = m.material;
        in.delta = m.delta;
        in.epsilon = m.epsilon;
    }
    apply_inputs(cfg.inputs, in);
    return in;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const ResidualReport& r)
{
    json j;
    j["family"] = to_string(r.family);
    j["status"] = to_string(r.status);
    j["points_requested"] = r.points_requested;
    j["points_sampled"] = r.points_sampled;
    j["points_skipped_near_singularity"] = r.points_skipped_near_singularity;
    j["max_abs_pde_residual"] = r.max_abs_pde_residual;
    j["max_abs_ode_residual"] = r.max_abs_ode_residual;
    j["max_pde_absolute"] = r.max_pde_absolute;
    j["max_ode_absolute"] = r.max_ode_absolute;
    if (r.first_failing_point) {
        j["first_failing_point"] = {r.first_failing_point->first, r.first_failing_point->second};
        j["first_failing_equation"] = r.first_failing_equation;
    } else {
        j["first_failing_point"] = nullptr;
    }
    j["printed_max_deviation"] = r.printed_max_deviation;
    j["printed_max_ode_residual"] = r.printed_max_ode_residual;
    j["notes"] = r.notes;
    return j;
}

}  // namespace rodwave

#include "rodwave/cas/published.hpp"
#include "rodwave/cas/system.hpp"
#include "rodwave/errors.hpp"
#include "rodwave/figures.hpp"
#include "rodwave/io.hpp"
#include "rodwave/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <regex>

using nlohmann::json;
using namespace rodwave;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInvalidInput = 2;

struct Globals {
    std::string config;
    bool json = false;
    std::uint64_t seed = 0;

    Config load() const { return config.empty() ? Config{} : load_config(config); }
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

int cmd_params(const Globals& g, const std::string& positional)
{
    const std::string path = positional.empty() ? g.config : positional;
    if (path.empty()) throw InvalidConstants("params needs a config file");
    const Config cfg = load_config(path);
    if (!cfg.material) throw InvalidConstants("config has no material object");
    json j = to_json(derive_parameters(*cfg.material));
    j["delta"] = to_string(cfg.material->delta);
    j["epsilon"] = to_string(cfg.material->epsilon);
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_list(const Globals& g)
{
    json arr = json::array();
    for (const auto& f : list_families()) {
        if (g.json) {
            arr.push_back({{"family", to_string(f.id)},
                           {"classification", to_string(f.classification)},
                           {"free_parameters", f.free_parameters},
                           {"constraint", f.constraint}});
            continue;
        }
        std::string free;
        for (const auto& p : f.free_parameters) free += (free.empty() ? "" : ",") + p;
        std::printf("%-26s %-36s %-26s %s\n", to_string(f.id).c_str(), to_string(f.classification).c_str(),
                    free.c_str(), f.constraint.c_str());
    }
    if (g.json) std::cout << arr.dump(2) << "\n";
    return kOk;
}

int cmd_eval(const Globals& g, const std::string& family, double x, double t)
{
    const Config cfg = g.load();
    FamilyId id;
    if (!family.empty())
        id = parse_family_id(family);
    else if (cfg.family)
        id = *cfg.family;
    else
        throw UnknownFamily("eval needs --family or a config \"family\"");
    const FamilyInputs in = resolve_inputs(cfg, id);
    const Family f(id, in);
    const Complex xi = f.xi(x, t);
    const Jet u = f.jet_at_xi(xi);
    const Residual pde = pde_terms(f, u), ode = ode_terms(f, u);

    if (g.json) {
        json j{{"family", to_string(id)}, {"x", x},         {"t", t},
               {"xi", to_json(xi)},       {"value", to_json(u[0])},
               {"lambda", to_json(f.coefficients().lambda)}, {"mu", to_json(f.coefficients().mu)},
               {"pde_relative", pde.relative()}, {"ode_relative", ode.relative()}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << to_string(id) << " at x = " << format_double(x) << ", t = " << format_double(t) << "\n"
              << "  value  " << format_double(u[0].real()) << " + " << format_double(u[0].imag()) << "i\n"
              << "  lambda " << format_double(f.coefficients().lambda.real()) << " + "
              << format_double(f.coefficients().lambda.imag()) << "i\n"
              << "  mu     " << format_double(f.coefficients().mu.real()) << " + "
              << format_double(f.coefficients().mu.imag()) << "i\n"
              << "  pde relative residual " << sci(pde.relative()) << "\n"
              << "  ode relative residual " << sci(ode.relative()) << "\n";
    return kOk;
}

GridSpec parse_grid(const std::string& text)
{
    static const std::regex shape(R"((\d+)(?:x(\d+))?)");
    std::smatch m;
    if (!std::regex_match(text, m, shape)) throw std::invalid_argument("--grid must be NX or NXxNT, got '" + text + "'");
    GridSpec g;
    g.nx = std::stoi(m[1].str());
    g.nt = m[2].matched ? std::stoi(m[2].str()) : 1;
    if (g.nt == 1) g.t_min = g.t_max = 1;
    return g;
}

int cmd_verify(const Globals& g, const std::string& grid_text, double tol, const std::vector<std::string>& families,
               int random, bool allow_errata)
{
    const Config cfg = g.load();
    GridSpec grid = parse_grid(grid_text);
    grid.tol = tol;
    grid.random_xi = random;
    grid.seed = g.seed;
    grid.validate();

    std::vector<ResidualReport> reports;
    if (families.empty() && !cfg.family && !cfg.material && cfg.inputs.empty()) {
        reports = verify_catalog(grid);
    } else {
        std::vector<FamilyId> ids;
        for (const auto& f : families) ids.push_back(parse_family_id(f));
        if (ids.empty() && cfg.family) ids.push_back(*cfg.family);
        if (ids.empty())
            for (const auto& f : list_families()) ids.push_back(f.id);
        for (const auto& id : ids) reports.push_back(verify_family(id, resolve_inputs(cfg, id), grid));
    }

    int pass = 0, fail = 0, flagged = 0;
    for (const auto& r : reports) {
        if (r.status == Status::Pass) ++pass;
        if (r.status == Status::Fail) ++fail;
        if (r.status == Status::FlaggedErratum) ++flagged;
        if (g.json) {
            std::cout << to_json(r).dump() << "\n";
            continue;
        }
        std::printf("%-26s %-16s pde %s  ode %s  %d/%d  %s\n", to_string(r.family).c_str(),
                    to_string(r.status).c_str(), sci(r.max_abs_pde_residual).c_str(),
                    sci(r.max_abs_ode_residual).c_str(), r.points_sampled, r.points_requested, r.notes.c_str());
    }
    if (!g.json)
        std::printf("%zu families: %d PASS, %d FLAGGED_ERRATUM, %d FAIL\n", reports.size(), pass, flagged, fail);
    if (fail > 0 || (flagged > 0 && !allow_errata)) return kVerificationFailure;
    return kOk;
}

int cmd_figure(const Globals& g, const std::vector<std::string>& presets, const std::string& out, const std::string& fmt)
{
    const DataFormat format = parse_data_format(fmt);
    std::vector<const FigurePreset*> todo;
    for (const auto& id : presets) {
        if (id == "all")
            for (const auto& p : figure_presets()) todo.push_back(&p);
        else
            todo.push_back(&figure_preset(id));
    }
    json summary = json::array();
    for (const FigurePreset* p : todo) {
        const FigureOutput fo = render_figure(*p, format);
        write_figure(fo, out, p->id);
        if (g.json) {
            summary.push_back(fo.manifest);
            continue;
        }
        for (std::size_t i = 0; i < fo.files.size(); ++i) {
            const auto& d = fo.files[i];
            const auto& r = fo.manifest["series"][i]["residuals"];
            std::printf("%-48s rows %6d  masked %4d  %s pde %s ode %s\n", d.filename.c_str(), d.rows, d.masked_rows,
                        r["status"].get<std::string>().c_str(), sci(r["max_abs_pde_residual"].get<double>()).c_str(),
                        sci(r["max_abs_ode_residual"].get<double>()).c_str());
        }
        for (const auto& note : fo.manifest["discrepancies"]) std::printf("  note: %s\n", note.get<std::string>().c_str());
    }
    if (g.json) std::cout << summary.dump(2) << "\n";
    return kOk;
}

int cmd_system(const Globals& g, const std::string& kind, int M, const std::string& aux_text, const std::string& check)
{
    cas::AlgebraicSystem sys;
    std::optional<std::pair<int, int>> predicted;
    if (kind == "sg") {
        sys = cas::build_sg_system();
        predicted = {{9, sys.unknown_count()}};
    } else if (kind == "mefm") {
        if (M < 1 || M > 3) throw std::invalid_argument("M must be 1, 2 or 3 (larger systems are not supported)");
        sys = cas::build_mefm_system(M, cas::parse_aux_kind(aux_text));
        predicted = cas::claimed_counts(M);
    } else {
        throw std::invalid_argument("system kind must be sg or mefm, got '" + kind + "'");
    }

    json j{{"system", sys.name},
           {"equations", sys.equation_count()},
           {"unknowns", sys.unknown_count()},
           {"predicted_equations", predicted->first},
           {"predicted_unknowns", predicted->second}};
    if (!g.json) {
        std::printf("%s\n", sys.name.c_str());
        if (kind == "sg")
            std::printf("equations: %d (predicted %d), unknowns: %d\n", sys.equation_count(), predicted->first,
                        sys.unknown_count());
        else
            std::printf("equations: %d (predicted %d), unknowns: %d (predicted %d)\n", sys.equation_count(),
                        predicted->first, sys.unknown_count(), predicted->second);
    }

    int rc = kOk;
    if (!check.empty()) {
        const auto& pc = cas::published_case(check);
        const auto residuals = cas::check_candidate(sys, pc.assignment);
        json arr = json::array();
        for (const auto& r : residuals) {
            const std::string text = r.zero ? "0" : r.residual.num.to_string();
            arr.push_back({{"label", r.label}, {"zero", r.zero}, {"residual_numerator", text}});
            if (!g.json) std::printf("  %-12s %s\n", r.label.c_str(), r.zero ? "0" : "nonzero");
        }
        const bool ok = cas::all_zero(residuals);
        j["check"] = {{"case", check}, {"all_zero", ok}, {"residuals", arr}};
        if (!g.json) std::printf("%s: %s\n", check.c_str(), ok ? "all residuals zero" : "nonzero residuals");
        if (!ok) rc = kVerificationFailure;
    }
    if (g.json) std::cout << j.dump(2) << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Soliton families of the Murnaghan-rod wave equation: parameters, evaluation, verification, "
                 "algebraic systems and figure datasets."};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config, "JSON config with material, family and inputs objects");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed for random sampling");

    std::string params_file;
    auto* params = app.add_subcommand("params", "derived material parameters as exact fractions");
    params->add_option("config", params_file, "config file (defaults to --config)");

    auto* list = app.add_subcommand("list", "registry of solution families");

    std::string eval_family;
    double eval_x = 0, eval_t = 0;
    auto* eval = app.add_subcommand("eval", "evaluate one family at (x, t)");
    eval->add_option("--family", eval_family, "family id, e.g. sg.case1.tanh.plus");
    eval->add_option("--x", eval_x, "x")->capture_default_str();
    eval->add_option("--t", eval_t, "t")->capture_default_str();

    std::string grid_text = "10x5";
    double tol = 1e-9;
    std::vector<std::string> families;
    int random = 0;
    bool allow_errata = false;
    auto* verify = app.add_subcommand("verify", "residual verification of the registry");
    verify->add_option("--grid", grid_text, "NX or NXxNT points over x in [-5,5], t in [-1,1]")->capture_default_str();
    verify->add_option("--tol", tol, "relative residual tolerance")->capture_default_str();
    verify->add_option("--family", families, "restrict to these families");
    verify->add_option("--random", random, "sample this many random xi in [-3,3] instead of the grid");
    verify->add_flag("--allow-errata", allow_errata, "FLAGGED_ERRATUM entries do not affect the exit code");
    verify->add_flag("--json", g.json, "one JSON object per family");

    std::vector<std::string> presets;
    std::string out_dir = "figures", fmt = "csv";
    auto* figure = app.add_subcommand("figure", "emit figure datasets");
    figure->add_option("preset", presets, "fig1 .. fig11, or all")->required();
    figure->add_option("--out", out_dir, "output directory")->capture_default_str();
    figure->add_option("--format", fmt, "csv or json")->capture_default_str();

    std::string kind, aux_text = "full", check;
    int M = 1;
    auto* system = app.add_subcommand("system", "algebraic system of a method");
    system->add_option("kind", kind, "sg or mefm")->required();
    system->add_option("M", M, "denominator degree (mefm)")->capture_default_str();
    system->add_option("aux", aux_text, "full, sigma0, discrim0 or both0")->capture_default_str();
    system->add_option("--check", check, "published case to substitute, e.g. mefm.case13");
    system->add_flag("--json", g.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }

    try {
        if (*params) return cmd_params(g, params_file);
        if (*list) return cmd_list(g);
        if (*eval) return cmd_eval(g, eval_family, eval_x, eval_t);
        if (*verify) return cmd_verify(g, grid_text, tol, families, random, allow_errata);
        if (*figure) return cmd_figure(g, presets, out_dir, fmt);
        if (*system) return cmd_system(g, kind, M, aux_text, check);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}

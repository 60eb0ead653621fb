#include "rodwave/figures.hpp"

#include "rodwave/errors.hpp"
#include "rodwave/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rodwave {

namespace {

using nlohmann::json;

FamilyId sg(int n, Variant v, Branch b = Branch::Plus) { return {Method::SineGordon, n, v, b}; }
FamilyId mefm(int n, Variant v, Branch b = Branch::Plus) { return {Method::Mefm, n, v, b}; }

// lambda follows from mu for these; a preset lambda is met by solving for mu.
bool lambda_dependent(const FamilyId& id) { return id.method == Method::Mefm && (id.case_no == 9 || id.case_no == 10); }

FigurePreset sg2d(std::string id, std::string caption, std::vector<FamilyId> fams)
{
    FigurePreset p;
    p.id = std::move(id);
    p.caption = std::move(caption);
    p.cited = fams;
    p.families = std::move(fams);
    p.kind = OutputKind::Curve2D;
    p.material_set = 'A';
    p.t_fixed = 1;
    p.swept = "mu";
    p.sweep = {0.25, 0.5, 0.75, 1.0, 1.25};
    p.x_min = -5;
    p.x_max = 5;
    p.nx = 1001;
    return p;
}

FigurePreset sg3d(std::string id, std::string caption, std::vector<FamilyId> fams)
{
    FigurePreset p;
    p.id = std::move(id);
    p.caption = std::move(caption);
    p.cited = fams;
    p.families = std::move(fams);
    p.kind = OutputKind::Surface3D;
    p.material_set = 'B';
    p.mu = 2.25;
    p.x_min = p.t_min = -15;
    p.x_max = p.t_max = 15;
    p.nx = p.nt = 201;
    return p;
}

FigurePreset mefm2d(std::string id, std::string caption, std::vector<FamilyId> cited, std::vector<FamilyId> fams)
{
    FigurePreset p;
    p.id = std::move(id);
    p.caption = std::move(caption);
    p.cited = std::move(cited);
    p.families = std::move(fams);
    p.kind = OutputKind::Curve2D;
    p.material_set = 'A';
    p.tau = Rational(5, 2);
    p.sigma = Rational(5, 2);
    p.e = 2;
    p.q0 = p.q1 = 2;
    p.t_fixed = 1.5;
    p.swept = "lambda";
    p.sweep = {1, 2, 3, 4, 5};
    p.x_min = 0;
    p.x_max = 10;
    p.nx = 1001;
    return p;
}

FigurePreset mefm3d(std::string id, std::string caption, FamilyId cited, FamilyId fam)
{
    FigurePreset p;
    p.id = std::move(id);
    p.caption = std::move(caption);
    p.cited = {cited};
    p.families = {fam};
    p.kind = OutputKind::Surface3D;
    p.material_set = 'B';
    p.tau = Rational(5, 4);
    p.sigma = Rational(9, 4);
    p.e = 5;
    p.q0 = 2;
    p.q1 = 3;
    p.lambda = 2;
    p.x_min = p.t_min = -15;
    p.x_max = p.t_max = 15;
    p.nx = p.nt = 201;
    return p;
}

std::vector<FigurePreset> build()
{
    using V = Variant;
    using B = Branch;
    std::vector<FigurePreset> out;
    out.push_back(sg2d("fig1", "real and imaginary part of the Case 4 tanh soliton", {sg(4, V::Tanh)}));
    out.push_back(sg2d("fig2", "real part of the Case 5 coth soliton, positive and negative branch",
                       {sg(5, V::Coth, B::Plus), sg(5, V::Coth, B::Minus)}));
    out.push_back(sg3d("fig3", "real part of the Case 2 tanh and coth solitons", {sg(2, V::Tanh), sg(2, V::Coth)}));
    out.push_back(sg3d("fig4", "real and imaginary part of the Case 6 tanh soliton", {sg(6, V::Tanh)}));
    out.push_back(mefm2d("fig5", "real and imaginary part of the Case 7 tanh soliton", {mefm(7, V::Tanh)},
                         {mefm(7, V::Tan)}));
    out.push_back(mefm2d("fig6", "imaginary part of the Case 9 and Case 10 tanh solitons",
                         {mefm(9, V::Tanh), mefm(10, V::Tanh)}, {mefm(9, V::Rational), mefm(10, V::Rational)}));
    out.push_back(mefm3d("fig7", "real and imaginary part of the Case 7 tan soliton", mefm(7, V::Tan), mefm(7, V::Tan)));
    out.push_back(mefm3d("fig8", "Case 9 tanh soliton with negative branch", mefm(9, V::Tanh, B::Minus),
                         mefm(9, V::Rational, B::Minus)));
    out.push_back(mefm3d("fig9", "Case 9 tanh soliton with positive branch", mefm(9, V::Tanh, B::Plus),
                         mefm(9, V::Rational, B::Plus)));
    out.push_back(mefm3d("fig10", "Case 10 tanh soliton with negative branch", mefm(10, V::Tanh, B::Minus),
                         mefm(10, V::Rational, B::Minus)));
    out.push_back(mefm3d("fig11", "Case 10 tanh soliton with positive branch", mefm(10, V::Tanh, B::Plus),
                         mefm(10, V::Rational, B::Plus)));
    return out;
}

std::string compact(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Rational discriminant(const FigurePreset& p)
{
    Rational d = p.tau * p.tau - 4 * p.sigma;
    d.canonicalize();
    return d;
}

std::vector<std::string> discrepancies(const FigurePreset& p)
{
    std::vector<std::string> out;
    const Rational D = discriminant(p);
    for (std::size_t i = 0; i < p.cited.size(); ++i) {
        if (p.cited[i] == p.families[i]) continue;
        out.push_back("cited " + to_string(p.cited[i]) + " requires tau^2 - 4 sigma > 0 but the preset gives " +
                      to_string(D) + " < 0; emitted " + to_string(p.families[i]) + ", the form the gate selects");
    }
    for (const FamilyId& id : p.families)
        if (lambda_dependent(id) && p.swept != "mu")
            out.push_back("lambda of " + to_string(id) + " depends on mu; mu solved for the preset lambda");
    return out;
}

struct Series {
    FamilyId id;
    double value;  // swept value, or NaN
    std::string filename;
};

std::vector<Series> series_of(const FigurePreset& p, DataFormat fmt)
{
    const std::string ext = fmt == DataFormat::Csv ? ".csv" : ".json";
    std::vector<Series> out;
    for (const FamilyId& id : p.families) {
        if (p.sweep.empty()) {
            out.push_back({id, NAN, p.id + "_" + to_string(id) + ext});
            continue;
        }
        for (double v : p.sweep) out.push_back({id, v, p.id + "_" + to_string(id) + "_" + p.swept + compact(v) + ext});
    }
    return out;
}

}  // namespace

std::string to_string(OutputKind k) { return k == OutputKind::Curve2D ? "CURVE_2D" : "SURFACE_3D"; }

DataFormat parse_data_format(std::string_view text)
{
    if (text == "csv") return DataFormat::Csv;
    if (text == "json") return DataFormat::Json;
    throw std::invalid_argument("format must be csv or json, got '" + std::string(text) + "'");
}

const std::vector<FigurePreset>& figure_presets()
{
    static const std::vector<FigurePreset> presets = build();
    return presets;
}

const FigurePreset& figure_preset(std::string_view id)
{
    for (const auto& p : figure_presets())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown figure preset '" + std::string(id) + "'");
}

FamilyInputs series_inputs(const FigurePreset& p, const FamilyId& id, double swept_value)
{
    FamilyInputs in = inputs_from(p.material_set == 'A' ? figure_set_a() : figure_set_b());
    in.tau = to_double(p.tau);
    in.sigma = to_double(p.sigma);
    in.e = p.e;
    in.q0 = p.q0;
    in.q1 = p.q1;
    in.mu = p.swept == "mu" ? swept_value : p.mu;
    in.lambda = p.swept == "lambda" ? swept_value : p.lambda;
    if (lambda_dependent(id)) in.mu = mu_for_lambda(in, in.lambda);
    return in;
}

GridSpec series_grid(const FigurePreset& p)
{
    GridSpec g;
    g.x_min = p.x_min;
    g.x_max = p.x_max;
    g.nx = p.nx;
    if (p.kind == OutputKind::Curve2D) {
        g.t_min = g.t_max = p.t_fixed;
        g.nt = 1;
    } else {
        g.t_min = p.t_min;
        g.t_max = p.t_max;
        g.nt = p.nt;
    }
    return g;
}

FigureOutput render_figure(const FigurePreset& p, DataFormat fmt)
{
    const GridSpec grid = series_grid(p);
    const bool surface = p.kind == OutputKind::Surface3D;
    const auto axis = [](double lo, double hi, int n, int i) { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); };

    FigureOutput out;
    json series = json::array();
    for (const Series& s : series_of(p, fmt)) {
        const FamilyInputs in = series_inputs(p, s.id, s.value);
        const Family f(s.id, in, grid.pole_floor);

        Dataset d;
        d.filename = s.filename;
        std::string csv = surface ? "x,t,re,im\n" : "x,re,im\n";
        json rows = json::array();
        for (int i = 0; i < grid.nx; ++i)
            for (int j = 0; j < grid.nt; ++j) {
                const double x = axis(grid.x_min, grid.x_max, grid.nx, i);
                const double t = axis(grid.t_min, grid.t_max, grid.nt, j);
                std::optional<Complex> u;
                try {
                    const Complex v = f.jet_at_xi(f.xi(x, t))[0];
                    if (std::isfinite(v.real()) && std::isfinite(v.imag())) u = v;
                } catch (const SingularPoint&) {
                }
                ++d.rows;
                if (!u) ++d.masked_rows;
                if (fmt == DataFormat::Csv) {
                    csv += format_double(x) + ",";
                    if (surface) csv += format_double(t) + ",";
                    csv += u ? format_double(u->real()) + "," + format_double(u->imag()) : std::string(",");
                    csv += "\n";
                } else {
                    json row = surface ? json::array({x, t}) : json::array({x});
                    row.push_back(u ? json(u->real()) : json(nullptr));
                    row.push_back(u ? json(u->imag()) : json(nullptr));
                    rows.push_back(std::move(row));
                }
            }
        if (fmt == DataFormat::Csv) {
            d.content = std::move(csv);
        } else {
            const json cols = surface ? json::array({"x", "t", "re", "im"}) : json::array({"x", "re", "im"});
            d.content = json{{"columns", cols}, {"rows", rows}}.dump() + "\n";
        }

        const ResidualReport rep = verify_family(s.id, in, grid);
        json entry;
        entry["file"] = d.filename;
        entry["family"] = to_string(s.id);
        if (!p.swept.empty()) entry[p.swept] = s.value;
        entry["inputs"] = {{"mu", in.mu}, {"lambda", in.lambda}, {"tau", in.tau}, {"sigma", in.sigma},
                           {"e", in.e},   {"Q0", in.q0},         {"Q1", in.q1}};
        entry["effective"] = {{"lambda", to_json(f.coefficients().lambda)}, {"mu", to_json(f.coefficients().mu)}};
        entry["rows"] = d.rows;
        entry["masked_rows"] = d.masked_rows;
        entry["masked_cells"] = 2 * d.masked_rows;
        entry["residuals"] = to_json(rep);
        series.push_back(std::move(entry));
        out.files.push_back(std::move(d));
    }

    json m;
    m["preset"] = p.id;
    m["caption"] = p.caption;
    m["kind"] = to_string(p.kind);
    m["format"] = fmt == DataFormat::Csv ? "csv" : "json";
    const MaterialConstants mc = p.material_set == 'A' ? figure_set_a() : figure_set_b();
    m["material_set"] = std::string(1, p.material_set);
    m["material"] = to_json(derive_parameters(mc));
    m["delta"] = to_string(mc.delta);
    m["epsilon"] = to_string(mc.epsilon);
    json domain = {{"x", {p.x_min, p.x_max}}};
    if (surface)
        domain["t"] = {p.t_min, p.t_max};
    else
        domain["t_fixed"] = p.t_fixed;
    m["domain"] = domain;
    m["grid"] = {{"nx", grid.nx}, {"nt", grid.nt}};
    if (p.families.front().method == Method::Mefm) {
        m["tau"] = to_string(p.tau);
        m["sigma"] = to_string(p.sigma);
        m["tau^2-4sigma"] = to_string(discriminant(p));
    }
    if (!p.swept.empty()) m["swept"] = {{"name", p.swept}, {"values", p.sweep}};
    json cited = json::array(), emitted = json::array();
    for (const auto& id : p.cited) cited.push_back(to_string(id));
    for (const auto& id : p.families) emitted.push_back(to_string(id));
    m["cited_families"] = cited;
    m["emitted_families"] = emitted;
    m["discrepancies"] = discrepancies(p);
    m["residual_tolerance"] = grid.tol;
    m["series"] = series;
    out.manifest = std::move(m);
    return out;
}

void write_figure(const FigureOutput& out, const std::filesystem::path& dir, const std::string& preset_id)
{
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& content) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
        f << content;
    };
    for (const Dataset& d : out.files) put(d.filename, d.content);
    put(preset_id + "_manifest.json", out.manifest.dump(2) + "\n");
}

}  // namespace rodwave

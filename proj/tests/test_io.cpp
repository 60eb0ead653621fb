#include "rodwave/errors.hpp"
#include "rodwave/figures.hpp"
#include "rodwave/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace rodwave;
using nlohmann::json;

namespace {

json set_a_json()
{
    return json::parse(R"({"lambda1": "3/2", "mu1": "5/2", "nu1": 2, "nu2": 3, "nu4": 5,
                           "rho": 3, "c": 4, "delta": 2.5, "epsilon": "7/2"})");
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST(Io, FormatDoubleUses17Digits)
{
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(-2), "-2");
    EXPECT_EQ(format_double(1.0 / 0.0), "inf");
}

TEST(Io, MaterialFromJsonMatchesSetA)
{
    const MaterialConstants mc = material_from_json(set_a_json());
    const MaterialConstants a = figure_set_a();
    EXPECT_EQ(mc.lambda1, a.lambda1);
    EXPECT_EQ(mc.delta, a.delta);
    const json dp = to_json(derive_parameters(mc));
    EXPECT_EQ(dp["alpha2"], "38065/55296");
    EXPECT_EQ(dp["n1"], "3/16");
    EXPECT_NEAR(dp["decimal"]["beta1"].get<double>(), 19.2, 1e-15);
}

TEST(Io, PresetMaterial)
{
    const json dp = to_json(derive_parameters(material_from_json(json{{"preset", "B"}})));
    EXPECT_EQ(dp["alpha1"], "19/196");
    EXPECT_THROW(material_from_json(json{{"preset", "C"}}), InvalidConstants);
}

TEST(Io, BadMaterialFieldIsNamed)
{
    json j = set_a_json();
    j.erase("rho");
    try {
        material_from_json(j);
        FAIL();
    } catch (const InvalidConstants& e) {
        EXPECT_NE(std::string(e.what()).find("rho"), std::string::npos);
    }
    j = set_a_json();
    j["nu2"] = "3/0";
    try {
        material_from_json(j);
        FAIL();
    } catch (const InvalidConstants& e) {
        EXPECT_NE(std::string(e.what()).find("nu2"), std::string::npos);
    }
    j = set_a_json();
    j["c"] = json::array();
    EXPECT_THROW(material_from_json(j), InvalidConstants);
}

TEST(Io, ConfigResolvesInputs)
{
    const Config cfg = parse_config(json::parse(R"({"material": {"preset": "B"}, "family": "sg.case2.coth.minus",
                                                    "inputs": {"mu": "9/4", "tau": 1.5}})"));
    ASSERT_TRUE(cfg.family);
    EXPECT_EQ(to_string(*cfg.family), "sg.case2.coth.minus");
    const FamilyInputs in = resolve_inputs(cfg, *cfg.family);
    EXPECT_EQ(in.mu, 2.25);
    EXPECT_EQ(in.tau, 1.5);
    EXPECT_EQ(in.delta, Rational(1));
    EXPECT_EQ(in.material.alpha1, Rational(19, 196));
}

TEST(Io, ConfigErrors)
{
    EXPECT_THROW(parse_config(json::parse(R"({"family": "sg.case7.tanh.plus"})")), UnknownFamily);
    FamilyInputs in;
    EXPECT_THROW(apply_inputs(json::parse(R"({"mu": "abc"})"), in), InvalidConstants);
    EXPECT_THROW(apply_inputs(json::parse(R"({"lambda": [1]})"), in), InvalidConstants);
    EXPECT_THROW(load_config("/nonexistent/config.json"), InvalidConstants);
    EXPECT_THROW(parse_config(json::array()), InvalidConstants);
}

TEST(Io, ReportJson)
{
    ResidualReport r;
    r.family = parse_family_id("mefm.case11.tanh.plus");
    r.status = Status::FlaggedErratum;
    r.first_failing_point = {{1.5, -0.5}};
    r.first_failing_equation = "pde";
    const json j = to_json(r);
    EXPECT_EQ(j["status"], "FLAGGED_ERRATUM");
    EXPECT_EQ(j["first_failing_point"][0], 1.5);
    EXPECT_EQ(j["family"], "mefm.case11.tanh.plus");
}

TEST(Figures, ElevenPresets)
{
    ASSERT_EQ(figure_presets().size(), 11u);
    for (int i = 1; i <= 11; ++i) EXPECT_NO_THROW(figure_preset("fig" + std::to_string(i)));
    EXPECT_THROW(figure_preset("fig12"), std::invalid_argument);
    EXPECT_THROW(parse_data_format("xlsx"), std::invalid_argument);

    const auto& f1 = figure_preset("fig1");
    EXPECT_EQ(f1.kind, OutputKind::Curve2D);
    EXPECT_EQ(f1.sweep, (std::vector<double>{0.25, 0.5, 0.75, 1.0, 1.25}));
    EXPECT_EQ(f1.families.front(), parse_family_id("sg.case4.tanh.plus"));
    const auto& f7 = figure_preset("fig7");
    EXPECT_EQ(f7.kind, OutputKind::Surface3D);
    EXPECT_EQ(f7.tau, Rational(5, 4));
    EXPECT_EQ(f7.q1, 3);
}

TEST(Figures, Fig1CurveShape)
{
    const FigureOutput out = render_figure(figure_preset("fig1"), DataFormat::Csv);
    ASSERT_EQ(out.files.size(), 5u);
    for (const Dataset& d : out.files) {
        EXPECT_EQ(d.content.find('\r'), std::string::npos);
        const auto ls = lines(d.content);
        ASSERT_EQ(ls.size(), 1002u);
        EXPECT_EQ(ls.front(), "x,re,im");
        EXPECT_EQ(ls[1].substr(0, 3), "-5,");
        EXPECT_EQ(ls.back().substr(0, 2), "5,");
        EXPECT_EQ(d.rows, 1001);
    }
    EXPECT_EQ(out.manifest["series"].size(), 5u);
    EXPECT_EQ(out.manifest["series"][2]["mu"], 0.75);
}

TEST(Figures, Fig3SurfaceMasksThePole)
{
    const FigureOutput out = render_figure(figure_preset("fig3"), DataFormat::Csv);
    ASSERT_EQ(out.files.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) {
        const Dataset& d = out.files[i];
        const auto ls = lines(d.content);
        ASSERT_EQ(ls.size(), 201u * 201u + 1);
        EXPECT_EQ(ls.front(), "x,t,re,im");
        const auto empty = std::count_if(ls.begin(), ls.end(), [](const std::string& l) {
            return l.size() >= 2 && l.substr(l.size() - 2) == ",,";
        });
        EXPECT_EQ(empty, d.masked_rows);
        EXPECT_EQ(out.manifest["series"][i]["masked_cells"], 2 * d.masked_rows);
        EXPECT_EQ(out.manifest["series"][i]["residuals"]["points_skipped_near_singularity"], d.masked_rows);
    }
    // The coth form is singular where x = lambda t, which the grid hits at the origin.
    EXPECT_GE(out.files[1].masked_rows, 1);
    EXPECT_EQ(out.files[0].masked_rows, 0);
}

TEST(Figures, Fig5RecordsTheGateDiscrepancy)
{
    const FigureOutput out = render_figure(figure_preset("fig5"), DataFormat::Csv);
    EXPECT_EQ(out.manifest["tau^2-4sigma"], "-15/4");
    EXPECT_EQ(out.manifest["cited_families"][0], "mefm.case7.tanh.plus");
    EXPECT_EQ(out.manifest["emitted_families"][0], "mefm.case7.tan.plus");
    ASSERT_FALSE(out.manifest["discrepancies"].empty());
    EXPECT_NE(out.manifest["discrepancies"][0].get<std::string>().find("-15/4"), std::string::npos);
    EXPECT_EQ(out.files.size(), 5u);
}

TEST(Figures, ManifestMatchesFreshVerify)
{
    for (const char* id : {"fig2", "fig6"}) {
        const FigurePreset& p = figure_preset(id);
        const FigureOutput out = render_figure(p, DataFormat::Csv);
        std::size_t k = 0;
        for (const FamilyId& fam : p.families)
            for (double v : p.sweep) {
                const json fresh = to_json(verify_family(fam, series_inputs(p, fam, v), series_grid(p)));
                EXPECT_EQ(out.manifest["series"][k]["residuals"], fresh) << id << " series " << k;
                ++k;
            }
        EXPECT_EQ(k, out.files.size());
    }
}

TEST(Figures, LambdaDependentFamiliesMeetThePresetLambda)
{
    const FigurePreset& p = figure_preset("fig8");
    const FigureOutput out = render_figure(p, DataFormat::Csv);
    const auto lambda = out.manifest["series"][0]["effective"]["lambda"];
    EXPECT_NEAR(lambda[0].get<double>(), -2.0, 1e-12);
    EXPECT_NEAR(lambda[1].get<double>(), 0.0, 1e-12);
}

TEST(Figures, JsonFormat)
{
    const FigureOutput out = render_figure(figure_preset("fig5"), DataFormat::Json);
    const json d = json::parse(out.files.front().content);
    EXPECT_EQ(d["columns"], json::array({"x", "re", "im"}));
    EXPECT_EQ(d["rows"].size(), 1001u);
    EXPECT_NE(out.files.front().filename.find(".json"), std::string::npos);
}

TEST(Figures, Deterministic)
{
    const FigureOutput a = render_figure(figure_preset("fig7"), DataFormat::Csv);
    const FigureOutput b = render_figure(figure_preset("fig7"), DataFormat::Csv);
    ASSERT_EQ(a.files.size(), b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) EXPECT_EQ(a.files[i].content, b.files[i].content);
    EXPECT_EQ(a.manifest.dump(), b.manifest.dump());
}
